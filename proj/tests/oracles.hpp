// Test-only brute-force oracles, kept independent of the library's
// elimination-based routines: everything here enumerates.
#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "qcat/gf2.hpp"
#include "qcat/pauli.hpp"

namespace oracles {

using qcat::gf2::BitMatrix;
using qcat::gf2::BitVector;

// All 2^nrows row combinations, as strings.
inline std::set<std::string> span_set(const BitMatrix& m) {
  std::set<std::string> out;
  const std::uint64_t total = std::uint64_t{1} << m.nrows();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    BitVector v(m.ncols());
    for (std::size_t i = 0; i < m.nrows(); ++i)
      if ((mask >> i) & 1u) v ^= m.row(i);
    out.insert(v.to_string());
  }
  return out;
}

inline std::size_t rank_by_enumeration(const BitMatrix& m) {
  const std::size_t count = span_set(m).size();
  std::size_t r = 0;
  while ((std::size_t{1} << r) < count) ++r;
  return r;
}

inline bool span_contains_by_enumeration(const BitMatrix& m, const BitVector& v) {
  return span_set(m).count(v.to_string()) > 0;
}

inline int min_weight_by_enumeration(const BitMatrix& m) {
  int best = -1;
  for (const auto& s : span_set(m)) {
    const auto w = static_cast<int>(BitVector::from_string(s).weight());
    if (w == 0) continue;
    if (best < 0 || w < best) best = w;
  }
  return best;
}

// All vectors of GF(2)^ncols annihilated by every row of m.
inline std::set<std::string> kernel_set(const BitMatrix& m) {
  std::set<std::string> out;
  const std::uint64_t total = std::uint64_t{1} << m.ncols();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    BitVector v(m.ncols());
    for (std::size_t j = 0; j < m.ncols(); ++j)
      if ((mask >> j) & 1u) v.set(j, true);
    bool in_kernel = true;
    for (std::size_t i = 0; i < m.nrows() && in_kernel; ++i)
      if (m.row(i).dot(v)) in_kernel = false;
    if (in_kernel) out.insert(v.to_string());
  }
  return out;
}

// Letter-level symplectic product: counts qubits carrying distinct
// non-identity letters.
inline bool anticommute_by_letters(const qcat::PauliOperator& a,
                                   const qcat::PauliOperator& b) {
  std::size_t clashes = 0;
  for (std::size_t i = 0; i < a.num_qubits(); ++i) {
    const char la = a.letter(i), lb = b.letter(i);
    if (la != 'I' && lb != 'I' && la != lb) ++clashes;
  }
  return clashes % 2 == 1;
}

inline BitMatrix random_matrix(std::mt19937& rng, std::size_t nrows, std::size_t ncols) {
  BitMatrix m(nrows, ncols);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j)
      if (coin(rng)) m.set(i, j, true);
  return m;
}

inline BitVector random_vector(std::mt19937& rng, std::size_t n) {
  BitVector v(n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t j = 0; j < n; ++j)
    if (coin(rng)) v.set(j, true);
  return v;
}

inline qcat::PauliOperator random_pauli(std::mt19937& rng, std::size_t n) {
  return qcat::PauliOperator(random_vector(rng, n), random_vector(rng, n));
}

}  // namespace oracles
