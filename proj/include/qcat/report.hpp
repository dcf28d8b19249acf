#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qcat/construction.hpp"
#include "qcat/decoder.hpp"

namespace qcat {

inline constexpr const char* kToolVersion = "0.1.0";

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t value);

// Digest over the generator matrix and the construction parameters, so a
// report can be tied back to its exact input.
std::string input_digest(const ConstructionSpec& spec);

struct ReportMeta {
  std::string input_digest;
  double wall_time_ms = 0.0;
  bool deterministic = false;  // zeroes the wall time in the output
};

// Stable keys: n, k, rate_claimed, rate_computed, d_claimed, d_computed,
// d_status, d1, d1_perp, d2, rate_match, distance_match,
// spin_detection_holds, phase_literal_holds, phase_undetected_holds, css,
// paper_logicals_valid.
std::string report_to_json(const VerificationReport& report, const ReportMeta& meta);
std::string report_to_text(const VerificationReport& report);

std::string construction_to_json(const Construction& construction);
std::string construction_to_text(const Construction& construction);

std::string tally_to_json(const SweepTally& tally);
std::string tally_to_text(const SweepTally& tally);

std::string stats_to_json(const ChannelStats& stats);
std::string stats_to_text(const ChannelStats& stats);

}  // namespace qcat
