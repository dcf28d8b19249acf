#include "qcat/decoder.hpp"

#include <random>
#include <stdexcept>

namespace qcat {

const char* to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::Success: return "success";
    case DecodeStatus::LogicalFailure: return "logical_failure";
    case DecodeStatus::Inconsistent: return "inconsistent";
  }
  return "?";
}

Syndrome syndrome(const StabilizerCode& code, const PauliOperator& p) {
  if (p.num_qubits() != code.n())
    throw std::invalid_argument("syndrome: qubit count mismatch");
  const auto& gens = code.generators();
  gf2::BitVector bits(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g)
    bits.set(g, !commutes(p, gens[g]));
  return Syndrome{std::move(bits)};
}

TwoStageDecoder::TwoStageDecoder(const Construction& construction)
    : con_(construction) {
  const std::size_t n1 = con_.layout.n1;
  if (n1 > 16)
    throw GuardError("TwoStageDecoder: n1 = " + std::to_string(n1) +
                     " exceeds the coset-table limit 16");
  const std::size_t checks = con_.dual_rows.nrows();
  coset_leader_.assign(std::size_t{1} << checks, gf2::BitVector());

  // fill by ascending weight so the first hit per syndrome is a leader
  std::size_t filled = 0;
  const std::uint64_t total = std::uint64_t{1} << n1;
  for (std::size_t w = 0; w <= n1 && filled < coset_leader_.size(); ++w) {
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      if (static_cast<std::size_t>(std::popcount(bits)) != w) continue;
      gf2::BitVector b(n1);
      for (std::size_t j = 0; j < n1; ++j)
        if ((bits >> j) & 1u) b.set(j, true);
      std::size_t s = 0;
      for (std::size_t r = 0; r < checks; ++r)
        s |= static_cast<std::size_t>(con_.dual_rows.row(r).dot(b)) << r;
      if (coset_leader_[s].size() == 0) {
        coset_leader_[s] = std::move(b);
        ++filled;
      }
    }
  }
}

PauliOperator TwoStageDecoder::decode(const Syndrome& s) const {
  const BlockLayout& layout = con_.layout;
  const std::size_t num_gens = con_.code.generators().size();
  if (s.bits.size() != num_gens)
    throw std::invalid_argument("decode: syndrome length " +
                                std::to_string(s.bits.size()) + " != generator count " +
                                std::to_string(num_gens));

  PauliOperator recovery = PauliOperator::identity(layout.num_qubits());

  // stage 1: within-block X pattern from the Z-pair bits
  const std::size_t per_block = layout.d2 - 1;
  for (std::size_t m = 0; m < layout.n1; ++m) {
    std::size_t ones = 0;
    for (std::size_t l = 0; l < per_block; ++l)
      ones += s.bits.get(m * per_block + l);
    // weight ones if not complemented, d2 - ones if complemented
    const bool flip_all = layout.d2 - ones < ones;
    for (std::size_t l = 0; l < per_block; ++l) {
      const bool bit = s.bits.get(m * per_block + l) ^ flip_all;
      recovery.x.set(layout.qubit(m, l + 1), bit);
    }
    recovery.x.set(layout.qubit(m, 0), flip_all);
  }

  // stage 2: block parity vector from the X-generator bits
  const std::size_t offset = con_.num_z_pair_generators;
  const std::size_t checks = con_.dual_rows.nrows();
  std::size_t packed = 0;
  for (std::size_t r = 0; r < checks; ++r)
    packed |= static_cast<std::size_t>(s.bits.get(offset + r)) << r;
  const gf2::BitVector& parities = coset_leader_[packed];
  for (std::size_t j = 0; j < layout.n1; ++j)
    if (parities.get(j)) recovery.z.flip(layout.qubit(j, 0));

  return recovery;
}

DecodeOutcome TwoStageDecoder::decode_error(const PauliOperator& error) const {
  const Syndrome s = syndrome(con_.code, error);
  PauliOperator recovery = decode(s);
  switch (classify_error(con_.code, recovery * error)) {
    case ErrorClass::Identity:
    case ErrorClass::InStabilizer:
      return DecodeOutcome{std::move(recovery), DecodeStatus::Success};
    case ErrorClass::Logical:
      return DecodeOutcome{std::move(recovery), DecodeStatus::LogicalFailure};
    case ErrorClass::Detected:
      return DecodeOutcome{std::move(recovery), DecodeStatus::Inconsistent};
  }
  return DecodeOutcome{std::move(recovery), DecodeStatus::Inconsistent};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

namespace {

double next_double(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace

ChannelStats simulate_depolarizing(const Construction& construction, double p,
                                   std::uint64_t trials, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("simulate_depolarizing: p must lie in [0, 1]");
  const TwoStageDecoder decoder(construction);
  const std::size_t n = construction.code.n();

  ChannelStats stats;
  stats.trials = trials;
  stats.seed = seed;
  stats.p = p;

  for (std::uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 eng(splitmix64(seed ^ splitmix64(t + 1)));
    PauliOperator error = PauliOperator::identity(n);
    for (std::size_t q = 0; q < n; ++q) {
      if (next_double(eng) >= p) continue;
      const double u = next_double(eng);
      error.set_letter(q, u < 1.0 / 3.0 ? 'X' : (u < 2.0 / 3.0 ? 'Y' : 'Z'));
    }
    switch (decoder.decode_error(error).status) {
      case DecodeStatus::Success: break;
      case DecodeStatus::LogicalFailure: ++stats.failures; break;
      case DecodeStatus::Inconsistent: ++stats.inconsistent; break;
    }
  }
  stats.logical_error_rate =
      trials == 0 ? 0.0 : static_cast<double>(stats.failures) / static_cast<double>(trials);
  return stats;
}

}  // namespace qcat
