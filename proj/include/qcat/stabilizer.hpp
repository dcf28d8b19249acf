#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcat/pauli.hpp"

namespace qcat {

// Partition of the Pauli group relative to a stabilizer S:
// Identity; InStabilizer (in S, not identity); Detected (anticommutes with
// some generator); Logical (in N(S)\S, not identity).
enum class ErrorClass { Identity, InStabilizer, Detected, Logical };
const char* to_string(ErrorClass c);

struct LogicalPair {
  PauliOperator x_bar, z_bar;
};

// Generator list plus optional logical pairs; k = n - rank(generators).
// Construction does not enforce the stabilizer invariants; validate() reports
// violations as diagnostics.
class StabilizerCode {
 public:
  StabilizerCode(std::size_t n, std::vector<PauliOperator> gens,
                 std::vector<LogicalPair> logicals = {});

  std::size_t n() const { return basis_.num_qubits(); }
  const std::vector<PauliOperator>& generators() const { return basis_.generators(); }
  const std::vector<LogicalPair>& logicals() const { return logicals_; }
  const PauliGroupBasis& stabilizer() const { return basis_; }
  std::size_t rank() const { return basis_.rank(); }
  std::size_t k() const { return n() - rank(); }

  StabilizerCode with_logicals(std::vector<LogicalPair> logicals) const;

 private:
  PauliGroupBasis basis_;
  std::vector<LogicalPair> logicals_;
};

struct Diagnostics {
  std::vector<std::string> issues;
  std::size_t rank = 0;
  std::size_t k = 0;
  bool ok() const { return issues.empty(); }
};

// Reports commutation violations, dependent generators, and logical-contract
// violations; never throws on bad codes.
Diagnostics validate(const StabilizerCode& code);

// Symplectic completion: k pairs (Xbar_i, Zbar_i) satisfying the full logical
// contract. Requires independent, pairwise-commuting generators.
std::vector<LogicalPair> complete_logicals(std::size_t n,
                                           const std::vector<PauliOperator>& gens);

ErrorClass classify_error(const StabilizerCode& code, const PauliOperator& p);

struct DistanceResult {
  std::optional<int> d;                  // min weight over N(S)\S, when found
  int wmax_searched = 0;                 // last weight level covered
  std::optional<PauliOperator> witness;  // lexicographically first minimum-weight logical
  bool exact() const { return d.has_value(); }
  std::string to_string() const;
};

// Ascending-weight exhaustive scan: supports in lexicographic order, per-qubit
// letters ordered X < Y < Z. Deterministic witness. Search volume
// sum_w C(n,w)*3^w is refused above kScanVolumeLimit.
DistanceResult distance(const StabilizerCode& code, int wmax);

struct CssSplit {
  std::vector<PauliOperator> x_gens, z_gens;
};

// Partition of the generators by pure type; throws NotCssError on a mixed
// generator. Identity generators are dropped.
CssSplit css_split(const StabilizerCode& code);
bool is_css(const StabilizerCode& code);

// Minimum weight over pure-X and pure-Z elements of N(S)\S via enumeration of
// the classical solution spaces modulo the stabilizer rows. Independent of the
// distance() scan; on CSS codes the two must agree.
int distance_css(const StabilizerCode& code);

enum class ErrorFilter { All, PureX, PureZ };

struct SweepTally {
  // counts[w][class] for w in 0..wmax
  std::vector<std::array<std::uint64_t, 4>> counts;
  std::uint64_t count(int w, ErrorClass c) const {
    return counts[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)];
  }
  std::uint64_t total(ErrorClass c) const;
};

// Exact per-weight tallies of the error classes up to wmax.
SweepTally sweep_errors(const StabilizerCode& code, int wmax,
                        ErrorFilter filter = ErrorFilter::All);

inline constexpr double kScanVolumeLimit = 1e8;
double scan_volume(std::size_t n, int wmax, ErrorFilter filter);

}  // namespace qcat
