#pragma once

#include <cstdint>
#include <vector>

#include "qcat/construction.hpp"

namespace qcat {

// One bit per stabilizer generator (0 commute, 1 anticommute), in the
// generator order fixed by construct_code.
struct Syndrome {
  gf2::BitVector bits;
};

Syndrome syndrome(const StabilizerCode& code, const PauliOperator& p);

enum class DecodeStatus { Success, LogicalFailure, Inconsistent };
const char* to_string(DecodeStatus s);

struct DecodeOutcome {
  PauliOperator recovery;
  DecodeStatus status = DecodeStatus::Inconsistent;
};

// Spin and phase stages run independently, mirroring the CSS split of the
// constructed codes. Stage 1 rebuilds the within-block X pattern from the
// Z-pair syndrome bits up to a block-wide complement and keeps the lighter
// choice (ties: not complemented). Stage 2 looks up the minimum-weight block
// parity vector consistent with the X-generator syndrome in a precomputed
// coset-leader table over GF(2)^n1 modulo C1, then applies Z at position 1 of
// each selected block.
class TwoStageDecoder {
 public:
  explicit TwoStageDecoder(const Construction& construction);  // n1 <= 16

  PauliOperator decode(const Syndrome& s) const;
  DecodeOutcome decode_error(const PauliOperator& error) const;

 private:
  Construction con_;
  std::vector<gf2::BitVector> coset_leader_;  // indexed by packed dual syndrome
};

struct ChannelStats {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;  // LogicalFailure count
  double logical_error_rate = 0.0;
  std::uint64_t seed = 0;
  double p = 0.0;
  std::uint64_t inconsistent = 0;
};

// i.i.d. depolarizing channel: each qubit is hit with probability p, the
// letter uniform over {X, Y, Z}. Per-trial streams are derived from
// (seed, trial index), so identical inputs give identical stats regardless
// of how trials are batched.
ChannelStats simulate_depolarizing(const Construction& construction, double p,
                                   std::uint64_t trials, std::uint64_t seed);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace qcat
