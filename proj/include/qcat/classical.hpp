#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qcat/gf2.hpp"

namespace qcat::classical {

inline constexpr std::size_t kDistanceDimensionLimit = 20;

// Binary linear [n, k] block code given by a full-row-rank generator matrix.
// Dual generators and minimum distances are computed on first use.
class BlockCode {
 public:
  BlockCode(std::string name, gf2::BitMatrix generator);

  const std::string& name() const { return name_; }
  std::size_t n() const { return g_.ncols(); }
  std::size_t k() const { return g_.nrows(); }
  const gf2::BitMatrix& generator() const { return g_; }

  const gf2::BitMatrix& dual_generator() const;
  BlockCode dual() const;

  // Minimum Hamming weight over the 2^k - 1 nonzero codewords. k <= 20.
  int min_distance() const;
  int dual_min_distance() const;

  gf2::BitVector encode(const gf2::BitVector& message) const;
  bool contains(const gf2::BitVector& word) const;

 private:
  std::string name_;
  gf2::BitMatrix g_;
  mutable std::optional<gf2::BitMatrix> dual_g_;
  mutable std::optional<int> d_;
  mutable std::optional<int> d_perp_;
};

BlockCode make_repetition(std::size_t n);        // [n, 1, n]
BlockCode make_parity(std::size_t n);            // [n, n-1, 2]
BlockCode make_hamming74();                      // [7, 4, 3]
BlockCode from_generator(std::string name, gf2::BitMatrix rows);
BlockCode from_generator(std::string name, const std::vector<std::string>& rows);

// Exhaustive minimum weight of the row span, excluding zero. rank <= 20.
int min_weight_of_span(const gf2::BitMatrix& generator);

// Rate k/n convolutional code as a k x n matrix of binary polynomials in D.
// Coefficient index t of each polynomial is the coefficient of D^t.
class ConvolutionalCode {
 public:
  ConvolutionalCode(std::string name, std::size_t k, std::size_t n,
                    std::vector<std::vector<gf2::BitVector>> gpoly);

  const std::string& name() const { return name_; }
  std::size_t k() const { return k_; }
  std::size_t n() const { return n_; }
  std::size_t memory() const { return memory_; }  // max polynomial degree
  const gf2::BitVector& poly(std::size_t input, std::size_t output) const {
    return gpoly_[input][output];
  }

 private:
  std::string name_;
  std::size_t k_, n_, memory_;
  std::vector<std::vector<gf2::BitVector>> gpoly_;
};

// Zero-tail termination: `frames` information frames followed by `memory`
// zero frames, giving a [n*(frames+memory), k*frames] block code. Output
// position of frame f, stream o is f*n + o.
BlockCode conv_terminate(const ConvolutionalCode& c, std::size_t frames);

struct FreeDistance {
  int value = 0;
  bool exact = true;  // false means "free distance >= value" (cap reached)
  std::string to_string() const;
};

// Minimum output weight over paths that leave and re-enter the zero state,
// by lowest-weight-first search over the state trellis. 2^(k*memory) states
// must not exceed 2^16.
FreeDistance conv_free_distance(const ConvolutionalCode& c, int cap = 64);

}  // namespace qcat::classical
