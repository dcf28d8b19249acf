#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcat/errors.hpp"

namespace qcat::gf2 {

// Fixed-length vector over GF(2), bit-packed into 64-bit words.
// Index 0 is the leftmost character of the string form.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  static BitVector from_string(std::string_view s);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& o);
  friend BitVector operator^(BitVector a, const BitVector& b) {
    a ^= b;
    return a;
  }

  std::size_t weight() const;
  bool dot(const BitVector& o) const;  // parity of the componentwise AND
  bool any() const;
  bool none() const { return !any(); }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  bool operator<(const BitVector& o) const;  // lexicographic in index order

  std::string to_string() const;
  std::span<const std::uint64_t> words() const { return words_; }

  BitVector slice(std::size_t begin, std::size_t len) const;
  static BitVector concat(const BitVector& a, const BitVector& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Dense matrix over GF(2); rows share a common length.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t nrows, std::size_t ncols)
      : rows_(nrows, BitVector(ncols)), ncols_(ncols) {}

  static BitMatrix from_rows(std::vector<BitVector> rows);
  static BitMatrix from_strings(const std::vector<std::string>& rows);
  static BitMatrix identity(std::size_t n);

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const BitVector& row(std::size_t i) const { return rows_[i]; }
  BitVector& row(std::size_t i) { return rows_[i]; }
  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v) { rows_[i].set(j, v); }
  void append_row(BitVector r);
  const std::vector<BitVector>& rows() const { return rows_; }

  BitVector multiply(const BitVector& x) const;  // M * x^T

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::vector<BitVector> rows_;
  std::size_t ncols_ = 0;
};

struct RrefResult {
  BitMatrix r;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Reduced row-echelon form; deterministic for a given input.
RrefResult rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

// Basis of {v : M * v^T = 0}; nrows = ncols(M) - rank(M).
BitMatrix nullspace(const BitMatrix& m);

// One solution of M * x^T = b, or nullopt if the system is inconsistent.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

// Row space with cached reduced rows, for repeated membership tests.
class RowSpan {
 public:
  explicit RowSpan(std::size_t ncols) : ncols_(ncols) {}
  explicit RowSpan(const BitMatrix& basis);

  bool add(BitVector v);  // true if the rank grew
  bool contains(const BitVector& v) const;
  BitVector reduce(BitVector v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::vector<BitVector>& reduced_rows() const { return rows_; }

 private:
  std::size_t ncols_;
  std::vector<std::size_t> pivots_;  // pivots_[i] = leading column of rows_[i]
  std::vector<BitVector> rows_;
};

bool span_contains(const BitMatrix& basis, const BitVector& v);

inline constexpr std::size_t kSpanEnumerationLimit = 24;

// Visits all 2^rank elements of the row span exactly once (Gray-code order,
// starting from zero). Refuses rank > kSpanEnumerationLimit.
void for_each_in_span(const BitMatrix& basis,
                      const std::function<void(const BitVector&)>& visit);
std::vector<BitVector> enumerate_span(const BitMatrix& basis);

}  // namespace qcat::gf2
