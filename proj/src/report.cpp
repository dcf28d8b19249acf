#include "qcat/report.hpp"

#include <sstream>

#include "json.hpp"

namespace qcat {

using json = nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (const char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[value & 0xF];
    value >>= 4;
  }
  return s;
}

std::string input_digest(const ConstructionSpec& spec) {
  std::ostringstream oss;
  oss << spec.c1.name() << ';';
  for (const auto& row : spec.c1.generator().rows()) oss << row.to_string() << ';';
  oss << "d2=" << spec.d2;
  return hex64(fnv1a64(oss.str()));
}

namespace {

json distance_to_json(const DistanceResult& d) {
  return d.exact() ? json(*d.d) : json(nullptr);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string report_to_json(const VerificationReport& report, const ReportMeta& meta) {
  json j;
  j["n"] = report.n;
  j["k"] = report.k_computed;
  j["rate_claimed"] = report.rate_claimed.to_string();
  j["rate_computed"] = report.rate_computed.to_string();
  j["d_claimed"] = report.d_claimed;
  j["d_computed"] = distance_to_json(report.d_computed);
  j["d_status"] = report.d_computed.exact() ? "exact" : "lower_bound_only";
  j["d1"] = report.d1;
  j["d1_perp"] = report.d1_perp ? json(*report.d1_perp) : json(nullptr);
  j["d2"] = report.d2;
  j["rate_match"] = report.rate_match;
  j["distance_match"] = report.distance_match;
  j["spin_detection_holds"] = report.spin_detection_holds;
  j["phase_literal_holds"] = report.phase_literal_holds;
  j["phase_undetected_holds"] = report.phase_undetected_holds;
  j["css"] = report.css;
  j["paper_logicals_valid"] = report.paper_logicals_valid;
  if (report.d_css) j["d_css"] = *report.d_css;
  if (!report.d_computed.exact())
    j["d_lower_bound"] = report.d_computed.wmax_searched + 1;
  if (report.d_computed.witness) j["d_witness"] = report.d_computed.witness->to_indexed();
  j["notes"] = join(report.notes, "; ");
  j["tool_version"] = kToolVersion;
  j["input_digest"] = meta.input_digest;
  j["wall_time_ms"] = meta.deterministic ? 0.0 : meta.wall_time_ms;
  return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream oss;
  oss << "[[" << report.n << "," << report.k_computed << "]] code, d2 = " << report.d2
      << ", d1 = " << report.d1 << ", d1_perp = "
      << (report.d1_perp ? std::to_string(*report.d1_perp) : "inf (trivial dual)")
      << "\n";
  oss << "  rate:     claimed " << report.rate_claimed.to_string() << ", computed "
      << report.rate_computed.to_string() << " -> "
      << (report.rate_match ? "match" : "MISMATCH") << "\n";
  oss << "  distance: claimed " << report.d_claimed << ", computed "
      << report.d_computed.to_string();
  if (report.d_css) oss << " [cross-oracle " << *report.d_css << "]";
  oss << " -> " << (report.distance_match ? "match" : "MISMATCH") << "\n";
  oss << "  spin errors below weight d2 never logical:        "
      << (report.spin_detection_holds ? "holds" : "FAILS") << "\n";
  oss << "  phase errors below min(d1_perp,d2) all in S:      "
      << (report.phase_literal_holds ? "holds" : "fails (literal reading)") << "\n";
  oss << "  phase errors below min(d1_perp,d2) never logical: "
      << (report.phase_undetected_holds ? "holds" : "FAILS") << "\n";
  oss << "  css: " << (report.css ? "yes" : "no")
      << ", paper_logicals_valid: " << (report.paper_logicals_valid ? "yes" : "no") << "\n";
  if (!report.notes.empty()) oss << "  notes: " << join(report.notes, "; ") << "\n";
  return oss.str();
}

std::string construction_to_json(const Construction& construction) {
  const StabilizerCode& code = construction.code;
  json j;
  j["n"] = code.n();
  j["k"] = code.k();
  j["c1"] = {{"name", construction.c1.name()},
             {"n1", construction.c1.n()},
             {"k1", construction.c1.k()}};
  j["d2"] = construction.layout.d2;
  json gens = json::array();
  for (const auto& g : code.generators()) gens.push_back(g.to_compact());
  j["generators"] = gens;
  json logicals = json::array();
  for (const auto& pair : code.logicals())
    logicals.push_back({{"x_bar", pair.x_bar.to_compact()},
                        {"z_bar", pair.z_bar.to_compact()}});
  j["logicals"] = logicals;
  j["paper_logicals_valid"] = construction.paper_logicals_valid;
  j["warnings"] = construction.warnings;
  return j.dump(2) + "\n";
}

std::string construction_to_text(const Construction& construction) {
  const StabilizerCode& code = construction.code;
  std::ostringstream oss;
  oss << "[[" << code.n() << "," << code.k() << "]] code from " << construction.c1.name()
      << " [" << construction.c1.n() << "," << construction.c1.k() << "] with d2 = "
      << construction.layout.d2 << "\n";
  oss << "generators (" << code.generators().size() << "):\n";
  for (std::size_t i = 0; i < code.generators().size(); ++i)
    oss << "  g" << i + 1 << ": " << code.generators()[i].to_indexed() << "  ["
        << code.generators()[i].to_compact() << "]\n";
  oss << "logical pairs (" << code.logicals().size() << "):\n";
  for (std::size_t i = 0; i < code.logicals().size(); ++i) {
    oss << "  Xbar" << i + 1 << ": " << code.logicals()[i].x_bar.to_indexed()
        << "  Zbar" << i + 1 << ": " << code.logicals()[i].z_bar.to_indexed() << "\n";
  }
  oss << "paper_logicals_valid: " << (construction.paper_logicals_valid ? "yes" : "no")
      << "\n";
  for (const auto& w : construction.warnings) oss << "warning: " << w << "\n";
  return oss.str();
}

std::string tally_to_json(const SweepTally& tally) {
  json per_weight = json::array();
  for (std::size_t w = 0; w < tally.counts.size(); ++w) {
    const auto& row = tally.counts[w];
    per_weight.push_back({{"weight", w},
                          {"identity", row[0]},
                          {"in_stabilizer", row[1]},
                          {"detected", row[2]},
                          {"logical", row[3]}});
  }
  json j;
  j["per_weight"] = per_weight;
  return j.dump(2) + "\n";
}

std::string tally_to_text(const SweepTally& tally) {
  std::ostringstream oss;
  oss << "weight  identity  in_stabilizer  detected  logical\n";
  for (std::size_t w = 0; w < tally.counts.size(); ++w) {
    const auto& row = tally.counts[w];
    oss << "  " << w << "\t" << row[0] << "\t" << row[1] << "\t" << row[2] << "\t"
        << row[3] << "\n";
  }
  return oss.str();
}

std::string stats_to_json(const ChannelStats& stats) {
  json j;
  j["p"] = stats.p;
  j["trials"] = stats.trials;
  j["failures"] = stats.failures;
  j["logical_error_rate"] = stats.logical_error_rate;
  j["inconsistent"] = stats.inconsistent;
  j["seed"] = stats.seed;
  return j.dump(2) + "\n";
}

std::string stats_to_text(const ChannelStats& stats) {
  std::ostringstream oss;
  oss << "p = " << stats.p << ", trials = " << stats.trials
      << ", failures = " << stats.failures
      << ", logical_error_rate = " << stats.logical_error_rate
      << ", seed = " << stats.seed << "\n";
  return oss.str();
}

}  // namespace qcat
