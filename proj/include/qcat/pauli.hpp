#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcat/gf2.hpp"

namespace qcat {

// Phase-free n-qubit Pauli operator in binary symplectic form.
// Qubit i carries X for (x_i,z_i)=(1,0), Z for (0,1), Y for (1,1).
// Global phases are not tracked.
struct PauliOperator {
  gf2::BitVector x, z;

  PauliOperator() = default;
  PauliOperator(gf2::BitVector x_, gf2::BitVector z_);
  static PauliOperator identity(std::size_t n);
  static PauliOperator single(std::size_t n, std::size_t qubit, char letter);

  std::size_t num_qubits() const { return x.size(); }
  std::size_t weight() const;
  bool is_identity() const { return x.none() && z.none(); }

  char letter(std::size_t i) const;
  void set_letter(std::size_t i, char letter);

  std::string to_compact() const;  // e.g. "XXZIY"
  std::string to_indexed() const;  // e.g. "X1 X2 Z5" (1-based), "I" when trivial
  static PauliOperator from_compact(std::string_view s);
  // Tokens multiply, so "X1 Z1" parses to Y on qubit 1.
  static PauliOperator from_indexed(std::string_view s, std::size_t n);
  static PauliOperator parse(std::string_view s, std::optional<std::size_t> n = {});

  gf2::BitVector to_symplectic() const;  // (x|z), 2n bits
  static PauliOperator from_symplectic(const gf2::BitVector& row);

  friend PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);
  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;
};

// True iff the symplectic inner product x_a.z_b + z_a.x_b vanishes mod 2.
bool commutes(const PauliOperator& a, const PauliOperator& b);

// Span of a generator list, queried in symplectic form. The generator list is
// not required to be independent; rank() reports the actual dimension.
class PauliGroupBasis {
 public:
  PauliGroupBasis(std::size_t n, std::vector<PauliOperator> gens);

  std::size_t num_qubits() const { return n_; }
  const std::vector<PauliOperator>& generators() const { return gens_; }
  const gf2::BitMatrix& symplectic_matrix() const { return mat_; }
  std::size_t rank() const { return span_.rank(); }

  bool contains(const PauliOperator& p) const;       // group membership
  bool in_normalizer(const PauliOperator& p) const;  // commutes with every generator

 private:
  std::size_t n_;
  std::vector<PauliOperator> gens_;
  gf2::BitMatrix mat_;
  gf2::RowSpan span_;
};

}  // namespace qcat
