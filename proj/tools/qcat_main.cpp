// qcat: build stabilizer codes by concatenating a classical code with a
// repetition code (through a qubit-wise Hadamard), then measure their actual
// rate, distance, and error-class structure against the claimed formulas.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qcat/codespec.hpp"
#include "qcat/decoder.hpp"
#include "qcat/report.hpp"

namespace {

using namespace qcat;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
  out << text;
}

struct CodeArgs {
  std::string c1;
  int d2 = 1;
  std::size_t conv_frames = 0;  // 0 means block input required
};

// Resolves --c1/--d2/--conv-frames into a block construction spec, applying
// zero-tail termination to convolutional inputs. Returns accumulated notes.
ConstructionSpec make_spec(const CodeArgs& args, std::vector<std::string>* notes) {
  ParsedCode parsed = resolve_code(args.c1);
  if (parsed.is_block()) {
    if (args.conv_frames != 0)
      throw std::runtime_error("--conv-frames only applies to convolutional codes");
    return ConstructionSpec{parsed.block(), args.d2};
  }
  const std::size_t frames = args.conv_frames == 0 ? 1 : args.conv_frames;
  ConvConstruction conv = construct_conv(parsed.conv(), frames, args.d2);
  if (notes) notes->insert(notes->end(), conv.notes.begin(), conv.notes.end());
  return ConstructionSpec{conv.terminated, args.d2};
}

void add_code_options(CLI::App* cmd, CodeArgs* args) {
  cmd->fallthrough();  // lets the global --format/--out appear after the subcommand
  cmd->add_option("--c1", args->c1,
                  "inner classical code: a built-in name (see `catalog`) or a code file")
      ->required();
  cmd->add_option("--d2", args->d2, "repetition length of the outer majority-vote code")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--conv-frames", args->conv_frames,
                  "zero-tail termination length for convolutional C1 (default 1)");
}

int cmd_catalog(const std::string& format, const std::string& out_path) {
  std::ostringstream text;
  std::ostringstream json_rows;
  bool first = true;
  json_rows << "[\n";
  text << "name                    [n,k]   d    d_perp\n";
  for (const auto& name : builtin_names()) {
    const auto code = builtin_code(name);
    if (!code) continue;
    std::string d = "-", d_perp = "-";
    if (code->k() >= 1) d = std::to_string(code->min_distance());
    if (code->n() > code->k()) d_perp = std::to_string(code->dual_min_distance());
    text << name;
    for (std::size_t i = name.size(); i < 24; ++i) text << ' ';
    text << "[" << code->n() << "," << code->k() << "]   " << d << "    " << d_perp
         << "\n";
    if (!first) json_rows << ",\n";
    first = false;
    json_rows << "  {\"name\": \"" << name << "\", \"n\": " << code->n()
              << ", \"k\": " << code->k() << ", \"d\": " << (d == "-" ? "null" : d)
              << ", \"d_perp\": " << (d_perp == "-" ? "null" : d_perp) << "}";
  }
  json_rows << "\n]\n";
  emit(format == "json" ? json_rows.str() : text.str(), out_path);
  return kExitOk;
}

int cmd_construct(const CodeArgs& args, const std::string& format,
                  const std::string& out_path) {
  std::vector<std::string> notes;
  const ConstructionSpec spec = make_spec(args, &notes);
  const Construction con = construct_code(spec);
  for (const auto& w : con.warnings) std::cerr << "warning: " << w << "\n";
  std::string text = format == "json" ? construction_to_json(con)
                                      : construction_to_text(con);
  if (format != "json")
    for (const auto& n : notes) text += "note: " + n + "\n";
  emit(text, out_path);
  return kExitOk;
}

int cmd_verify(const CodeArgs& args, std::optional<int> wmax, bool strict,
               const std::string& format, bool deterministic,
               const std::string& out_path) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> notes;
  const ConstructionSpec spec = make_spec(args, &notes);
  VerificationReport report = verify(spec, wmax);
  report.notes.insert(report.notes.end(), notes.begin(), notes.end());
  const auto end = std::chrono::steady_clock::now();

  ReportMeta meta;
  meta.input_digest = input_digest(spec);
  meta.wall_time_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(end - start)
          .count();
  meta.deterministic = deterministic;

  emit(format == "json" ? report_to_json(report, meta) : report_to_text(report),
       out_path);
  if (strict && !report.all_claims_match()) return kExitMismatch;
  return kExitOk;
}

int cmd_distance(const CodeArgs& args, std::optional<int> wmax,
                 const std::string& format, const std::string& out_path) {
  std::vector<std::string> notes;
  const ConstructionSpec spec = make_spec(args, &notes);
  const Construction con = construct_code(spec);
  const int bound =
      wmax ? *wmax
           : std::min<int>(static_cast<int>(con.code.n()),
                           claimed_parameters(spec).distance + 2);
  const DistanceResult result = distance(con.code, bound);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["d"] = result.exact() ? nlohmann::ordered_json(*result.d)
                            : nlohmann::ordered_json(nullptr);
    j["status"] = result.exact() ? "exact" : "lower_bound_only";
    j["wmax_searched"] = result.wmax_searched;
    j["witness"] = result.witness ? nlohmann::ordered_json(result.witness->to_compact())
                                  : nlohmann::ordered_json(nullptr);
    emit(j.dump(2) + "\n", out_path);
  } else {
    emit(result.to_string() + "\n", out_path);
  }
  return kExitOk;
}

int cmd_sweep(const CodeArgs& args, int wmax, const std::string& filter,
              const std::string& format, const std::string& out_path) {
  std::vector<std::string> notes;
  const ConstructionSpec spec = make_spec(args, &notes);
  const Construction con = construct_code(spec);
  ErrorFilter f = ErrorFilter::All;
  if (filter == "pure-x") f = ErrorFilter::PureX;
  else if (filter == "pure-z") f = ErrorFilter::PureZ;
  else if (filter != "all")
    throw std::runtime_error("--filter must be all, pure-x, or pure-z");
  const SweepTally tally = sweep_errors(con.code, wmax, f);
  emit(format == "json" ? tally_to_json(tally) : tally_to_text(tally), out_path);
  return kExitOk;
}

int cmd_simulate(const CodeArgs& args, double p, std::uint64_t trials,
                 std::uint64_t seed, const std::string& format,
                 const std::string& out_path) {
  std::vector<std::string> notes;
  const ConstructionSpec spec = make_spec(args, &notes);
  const Construction con = construct_code(spec);
  const ChannelStats stats = simulate_depolarizing(con, p, trials, seed);
  emit(format == "json" ? stats_to_json(stats) : stats_to_text(stats), out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilizer codes from classical-code/repetition concatenation: "
               "construct, verify claimed parameters, sweep errors, decode"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("qcat ") + kToolVersion);

  std::string format = "text", out_path;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  auto* catalog = app.add_subcommand("catalog", "list built-in classical codes");
  catalog->fallthrough();

  CodeArgs construct_args;
  auto* construct = app.add_subcommand("construct", "emit generators and logicals");
  add_code_options(construct, &construct_args);

  CodeArgs verify_args;
  std::optional<int> verify_wmax;
  bool strict = false, deterministic = false;
  auto* verify_cmd = app.add_subcommand("verify", "claimed vs computed parameters");
  add_code_options(verify_cmd, &verify_args);
  verify_cmd->add_option("--wmax", verify_wmax, "distance scan weight bound");
  verify_cmd->add_flag("--strict", strict, "exit 1 when any claim mismatches");
  verify_cmd->add_flag("--deterministic", deterministic,
                       "zero the wall time for byte-identical output");

  CodeArgs distance_args;
  std::optional<int> distance_wmax;
  auto* distance_cmd = app.add_subcommand("distance", "exhaustive minimum distance");
  add_code_options(distance_cmd, &distance_args);
  distance_cmd->add_option("--wmax", distance_wmax, "scan weight bound");

  CodeArgs sweep_args;
  int sweep_wmax = 2;
  std::string sweep_filter = "all";
  auto* sweep_cmd = app.add_subcommand("sweep", "error-class tallies per weight");
  add_code_options(sweep_cmd, &sweep_args);
  sweep_cmd->add_option("--wmax", sweep_wmax, "sweep weight bound")->required();
  sweep_cmd->add_option("--filter", sweep_filter, "all | pure-x | pure-z");

  CodeArgs sim_args;
  double sim_p = 0.0;
  std::uint64_t sim_trials = 10000, sim_seed = 1;
  auto* sim_cmd = app.add_subcommand("simulate", "depolarizing-channel Monte Carlo");
  add_code_options(sim_cmd, &sim_args);
  sim_cmd->add_option("--p", sim_p, "per-qubit depolarizing probability")->required();
  sim_cmd->add_option("--trials", sim_trials, "number of trials");
  sim_cmd->add_option("--seed", sim_seed, "PRNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitError;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(format, out_path);
    if (construct->parsed()) return cmd_construct(construct_args, format, out_path);
    if (verify_cmd->parsed())
      return cmd_verify(verify_args, verify_wmax, strict, format, deterministic,
                        out_path);
    if (distance_cmd->parsed())
      return cmd_distance(distance_args, distance_wmax, format, out_path);
    if (sweep_cmd->parsed())
      return cmd_sweep(sweep_args, sweep_wmax, sweep_filter, format, out_path);
    if (sim_cmd->parsed())
      return cmd_simulate(sim_args, sim_p, sim_trials, sim_seed, format, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
