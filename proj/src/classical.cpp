#include "qcat/classical.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace qcat::classical {

BlockCode::BlockCode(std::string name, gf2::BitMatrix generator)
    : name_(std::move(name)), g_(std::move(generator)) {
  if (gf2::rank(g_) != g_.nrows())
    throw std::invalid_argument("BlockCode '" + name_ +
                                "': generator matrix is rank-deficient (" +
                                std::to_string(gf2::rank(g_)) + " < " +
                                std::to_string(g_.nrows()) +
                                " rows); supply an independent row set");
}

const gf2::BitMatrix& BlockCode::dual_generator() const {
  if (!dual_g_) dual_g_ = gf2::nullspace(g_);
  return *dual_g_;
}

BlockCode BlockCode::dual() const {
  return BlockCode(name_ + "-dual", dual_generator());
}

int BlockCode::min_distance() const {
  if (!d_) d_ = min_weight_of_span(g_);
  return *d_;
}

int BlockCode::dual_min_distance() const {
  if (!d_perp_) d_perp_ = min_weight_of_span(dual_generator());
  return *d_perp_;
}

gf2::BitVector BlockCode::encode(const gf2::BitVector& message) const {
  if (message.size() != k())
    throw std::invalid_argument("BlockCode::encode: message length " +
                                std::to_string(message.size()) + " != k " +
                                std::to_string(k()));
  gf2::BitVector word(n());
  for (std::size_t i = 0; i < k(); ++i)
    if (message.get(i)) word ^= g_.row(i);
  return word;
}

bool BlockCode::contains(const gf2::BitVector& word) const {
  return gf2::span_contains(g_, word);
}

BlockCode make_repetition(std::size_t n) {
  if (n < 1) throw std::invalid_argument("make_repetition: n must be >= 1");
  gf2::BitMatrix g(1, n);
  for (std::size_t j = 0; j < n; ++j) g.set(0, j, true);
  return BlockCode("repetition-" + std::to_string(n), std::move(g));
}

BlockCode make_parity(std::size_t n) {
  if (n < 2) throw std::invalid_argument("make_parity: n must be >= 2");
  gf2::BitMatrix g(n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.set(i, i, true);
    g.set(i, n - 1, true);
  }
  return BlockCode("parity-" + std::to_string(n), std::move(g));
}

BlockCode make_hamming74() {
  return BlockCode("hamming74", gf2::BitMatrix::from_strings({
                                    "1000110",
                                    "0100101",
                                    "0010011",
                                    "0001111",
                                }));
}

BlockCode from_generator(std::string name, gf2::BitMatrix rows) {
  return BlockCode(std::move(name), std::move(rows));
}

BlockCode from_generator(std::string name, const std::vector<std::string>& rows) {
  return BlockCode(std::move(name), gf2::BitMatrix::from_strings(rows));
}

int min_weight_of_span(const gf2::BitMatrix& generator) {
  const std::size_t k = generator.nrows();
  if (k == 0)
    throw GuardError("min_weight_of_span: code has no nonzero codewords (k = 0)");
  if (k > kDistanceDimensionLimit)
    throw GuardError("min_weight_of_span: dimension " + std::to_string(k) +
                     " exceeds enumeration limit " +
                     std::to_string(kDistanceDimensionLimit));
  // Gray-code walk over all 2^k combinations.
  gf2::BitVector word(generator.ncols());
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t c = 1; c < total; ++c) {
    word ^= generator.row(static_cast<std::size_t>(std::countr_zero(c)));
    best = std::min(best, word.weight());
  }
  return static_cast<int>(best);
}

ConvolutionalCode::ConvolutionalCode(std::string name, std::size_t k, std::size_t n,
                                     std::vector<std::vector<gf2::BitVector>> gpoly)
    : name_(std::move(name)), k_(k), n_(n), memory_(0), gpoly_(std::move(gpoly)) {
  if (k_ < 1 || n_ < 1)
    throw std::invalid_argument("ConvolutionalCode: k and n must be >= 1");
  if (gpoly_.size() != k_)
    throw std::invalid_argument("ConvolutionalCode: expected " + std::to_string(k_) +
                                " polynomial rows, got " + std::to_string(gpoly_.size()));
  for (std::size_t i = 0; i < k_; ++i) {
    if (gpoly_[i].size() != n_)
      throw std::invalid_argument("ConvolutionalCode: row " + std::to_string(i + 1) +
                                  " has " + std::to_string(gpoly_[i].size()) +
                                  " polynomials, expected " + std::to_string(n_));
    bool nonzero = false;
    for (const auto& p : gpoly_[i]) {
      for (std::size_t t = 0; t < p.size(); ++t)
        if (p.get(t)) {
          nonzero = true;
          memory_ = std::max(memory_, t);
        }
    }
    if (!nonzero)
      throw std::invalid_argument("ConvolutionalCode: input " + std::to_string(i + 1) +
                                  " has all-zero polynomials");
  }
}

BlockCode conv_terminate(const ConvolutionalCode& c, std::size_t frames) {
  if (frames < 1) throw std::invalid_argument("conv_terminate: frames must be >= 1");
  const std::size_t k1 = c.k() * frames;
  if (k1 > kDistanceDimensionLimit)
    throw GuardError("conv_terminate: terminated dimension " + std::to_string(k1) +
                     " exceeds limit " + std::to_string(kDistanceDimensionLimit));
  const std::size_t n1 = c.n() * (frames + c.memory());
  gf2::BitMatrix g(k1, n1);
  for (std::size_t t = 0; t < frames; ++t) {
    for (std::size_t i = 0; i < c.k(); ++i) {
      const std::size_t row = t * c.k() + i;
      for (std::size_t o = 0; o < c.n(); ++o) {
        const gf2::BitVector& p = c.poly(i, o);
        for (std::size_t tau = 0; tau < p.size(); ++tau)
          if (p.get(tau)) g.set(row, (t + tau) * c.n() + o, true);
      }
    }
  }
  return BlockCode(c.name() + "-zt" + std::to_string(frames), std::move(g));
}

std::string FreeDistance::to_string() const {
  return exact ? std::to_string(value) : ">=" + std::to_string(value);
}

namespace {

// Output weight of one trellis step: `state` holds the previous `memory`
// input frames (frame at delay t in bits [(t-1)*k, t*k)), `input` the
// current frame.
int step_weight(const ConvolutionalCode& c, std::uint32_t state, std::uint32_t input) {
  int w = 0;
  for (std::size_t o = 0; o < c.n(); ++o) {
    unsigned bit = 0;
    for (std::size_t i = 0; i < c.k(); ++i) {
      const gf2::BitVector& p = c.poly(i, o);
      for (std::size_t t = 0; t < p.size(); ++t) {
        if (!p.get(t)) continue;
        const unsigned u =
            t == 0 ? (input >> i) & 1u
                   : (state >> ((t - 1) * c.k() + i)) & 1u;
        bit ^= u;
      }
    }
    w += static_cast<int>(bit);
  }
  return w;
}

}  // namespace

FreeDistance conv_free_distance(const ConvolutionalCode& c, int cap) {
  const std::size_t state_bits = c.k() * c.memory();
  if (state_bits > 16)
    throw GuardError("conv_free_distance: 2^" + std::to_string(state_bits) +
                     " states exceeds the 2^16 state limit");
  const std::uint32_t num_states = std::uint32_t{1} << state_bits;
  const std::uint32_t state_mask = num_states - 1;
  const std::uint32_t num_inputs = std::uint32_t{1} << c.k();

  auto next_state = [&](std::uint32_t s, std::uint32_t u) {
    return ((s << c.k()) | u) & state_mask;
  };

  std::vector<int> dist(num_states, std::numeric_limits<int>::max());
  using Item = std::pair<int, std::uint32_t>;  // (weight, state)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  int best_return = std::numeric_limits<int>::max();

  // Diverge from the zero state with a nonzero input frame.
  for (std::uint32_t u = 1; u < num_inputs; ++u) {
    const int w = step_weight(c, 0, u);
    const std::uint32_t s = next_state(0, u);
    if (s == 0) {
      best_return = std::min(best_return, w);
    } else if (w < dist[s]) {
      dist[s] = w;
      heap.emplace(w, s);
    }
  }

  while (!heap.empty()) {
    const auto [w, s] = heap.top();
    heap.pop();
    if (w > dist[s]) continue;
    if (w >= best_return || w >= cap) break;
    for (std::uint32_t u = 0; u < num_inputs; ++u) {
      const int w2 = w + step_weight(c, s, u);
      const std::uint32_t s2 = next_state(s, u);
      if (s2 == 0) {
        best_return = std::min(best_return, w2);
      } else if (w2 < dist[s2]) {
        dist[s2] = w2;
        heap.emplace(w2, s2);
      }
    }
  }

  if (best_return < cap) return FreeDistance{best_return, true};
  return FreeDistance{cap, false};
}

}  // namespace qcat::classical
