#include "qcat/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcat::gf2 {

namespace {

void check_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": length mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace

BitVector BitVector::from_string(std::string_view s) {
  BitVector v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.set(i, true);
    else if (s[i] != '0')
      throw std::invalid_argument("BitVector::from_string: expected '0' or '1', got '" +
                                  std::string(1, s[i]) + "'");
  }
  return v;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  check_same_size(size_, o.size_, "BitVector::operator^=");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  return *this;
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (std::uint64_t word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::dot(const BitVector& o) const {
  check_same_size(size_, o.size_, "BitVector::dot");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
  return (std::popcount(acc) & 1) != 0;
}

bool BitVector::any() const {
  for (std::uint64_t word : words_)
    if (word) return true;
  return false;
}

bool BitVector::operator<(const BitVector& o) const {
  check_same_size(size_, o.size_, "BitVector::operator<");
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t diff = words_[w] ^ o.words_[w];
    if (diff) {
      const int j = std::countr_zero(diff);
      return ((words_[w] >> j) & 1u) == 0;
    }
  }
  return false;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitVector BitVector::slice(std::size_t begin, std::size_t len) const {
  if (begin + len > size_) throw std::invalid_argument("BitVector::slice: out of range");
  BitVector out(len);
  for (std::size_t i = 0; i < len; ++i) out.set(i, get(begin + i));
  return out;
}

BitVector BitVector::concat(const BitVector& a, const BitVector& b) {
  BitVector out(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, a.get(i));
  for (std::size_t i = 0; i < b.size(); ++i) out.set(a.size() + i, b.get(i));
  return out;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
  BitMatrix m;
  if (!rows.empty()) {
    m.ncols_ = rows.front().size();
    for (const auto& r : rows)
      check_same_size(r.size(), m.ncols_, "BitMatrix::from_rows");
  }
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<BitVector> rs;
  rs.reserve(rows.size());
  for (const auto& s : rows) rs.push_back(BitVector::from_string(s));
  return from_rows(std::move(rs));
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void BitMatrix::append_row(BitVector r) {
  if (rows_.empty() && ncols_ == 0) ncols_ = r.size();
  check_same_size(r.size(), ncols_, "BitMatrix::append_row");
  rows_.push_back(std::move(r));
}

BitVector BitMatrix::multiply(const BitVector& x) const {
  check_same_size(x.size(), ncols_, "BitMatrix::multiply");
  BitVector out(nrows());
  for (std::size_t i = 0; i < nrows(); ++i) out.set(i, rows_[i].dot(x));
  return out;
}

RrefResult rref(const BitMatrix& m) {
  RrefResult res;
  res.r = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.ncols() && r < m.nrows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.nrows() && !res.r.get(pivot, col)) ++pivot;
    if (pivot == m.nrows()) continue;
    std::swap(res.r.row(r), res.r.row(pivot));
    for (std::size_t i = 0; i < m.nrows(); ++i)
      if (i != r && res.r.get(i, col)) res.r.row(i) ^= res.r.row(r);
    res.pivots.push_back(col);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

BitMatrix nullspace(const BitMatrix& m) {
  const RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.ncols(), false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;

  BitMatrix basis(0, m.ncols());
  for (std::size_t f = 0; f < m.ncols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(m.ncols());
    v.set(f, true);
    for (std::size_t p = 0; p < rr.pivots.size(); ++p)
      if (rr.r.get(p, f)) v.set(rr.pivots[p], true);
    basis.append_row(std::move(v));
  }
  return basis;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
  check_same_size(b.size(), m.nrows(), "solve");
  BitMatrix r = m;
  BitVector rhs = b;
  std::vector<std::size_t> pivots;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < m.ncols() && rk < m.nrows(); ++col) {
    std::size_t pivot = rk;
    while (pivot < m.nrows() && !r.get(pivot, col)) ++pivot;
    if (pivot == m.nrows()) continue;
    std::swap(r.row(rk), r.row(pivot));
    if (rk != pivot) {
      const bool a = rhs.get(rk), b2 = rhs.get(pivot);
      rhs.set(rk, b2);
      rhs.set(pivot, a);
    }
    for (std::size_t i = 0; i < m.nrows(); ++i) {
      if (i != rk && r.get(i, col)) {
        r.row(i) ^= r.row(rk);
        rhs.set(i, rhs.get(i) ^ rhs.get(rk));
      }
    }
    pivots.push_back(col);
    ++rk;
  }
  for (std::size_t i = rk; i < m.nrows(); ++i)
    if (rhs.get(i)) return std::nullopt;
  BitVector x(m.ncols());
  for (std::size_t p = 0; p < pivots.size(); ++p) x.set(pivots[p], rhs.get(p));
  return x;
}

RowSpan::RowSpan(const BitMatrix& basis) : ncols_(basis.ncols()) {
  for (const auto& r : basis.rows()) add(r);
}

bool RowSpan::add(BitVector v) {
  check_same_size(v.size(), ncols_, "RowSpan::add");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(pivots_[i])) v ^= rows_[i];
  if (v.none()) return false;
  std::size_t pivot = 0;
  while (!v.get(pivot)) ++pivot;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].get(pivot)) rows_[i] ^= v;
  // keep rows ordered by pivot column
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

BitVector RowSpan::reduce(BitVector v) const {
  check_same_size(v.size(), ncols_, "RowSpan::reduce");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(pivots_[i])) v ^= rows_[i];
  return v;
}

bool RowSpan::contains(const BitVector& v) const { return reduce(v).none(); }

bool span_contains(const BitMatrix& basis, const BitVector& v) {
  return RowSpan(basis).contains(v);
}

void for_each_in_span(const BitMatrix& basis,
                      const std::function<void(const BitVector&)>& visit) {
  RowSpan span(basis.ncols());
  for (const auto& r : basis.rows()) span.add(r);
  const std::size_t r = span.rank();
  if (r > kSpanEnumerationLimit)
    throw GuardError("for_each_in_span: rank " + std::to_string(r) +
                     " exceeds enumeration limit " + std::to_string(kSpanEnumerationLimit));
  BitVector cur(basis.ncols());
  visit(cur);
  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t c = 1; c < total; ++c) {
    cur ^= span.reduced_rows()[static_cast<std::size_t>(std::countr_zero(c))];
    visit(cur);
  }
}

std::vector<BitVector> enumerate_span(const BitMatrix& basis) {
  std::vector<BitVector> out;
  for_each_in_span(basis, [&](const BitVector& v) { out.push_back(v); });
  return out;
}

}  // namespace qcat::gf2
