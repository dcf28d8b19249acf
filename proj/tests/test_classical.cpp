#include "qcat/classical.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace qcat::classical;
using qcat::gf2::BitMatrix;
using qcat::gf2::BitVector;

TEST_CASE("repetition codes") {
  const BlockCode r1 = make_repetition(1);
  CHECK(r1.n() == 1);
  CHECK(r1.k() == 1);
  CHECK(r1.min_distance() == 1);

  const BlockCode r3 = make_repetition(3);
  CHECK(oracles::span_set(r3.generator()) == std::set<std::string>{"000", "111"});

  for (std::size_t n = 1; n <= 8; ++n)
    CHECK(make_repetition(n).min_distance() == static_cast<int>(n));

  CHECK_THROWS_AS(make_repetition(0), std::invalid_argument);
}

TEST_CASE("parity and hamming catalog codes") {
  const BlockCode p4 = make_parity(4);
  CHECK(p4.n() == 4);
  CHECK(p4.k() == 3);
  CHECK(p4.min_distance() == 2);
  CHECK(p4.min_distance() == oracles::min_weight_by_enumeration(p4.generator()));

  const BlockCode h = make_hamming74();
  CHECK(h.n() == 7);
  CHECK(h.k() == 4);
  CHECK(h.min_distance() == 3);
  CHECK(h.min_distance() == oracles::min_weight_by_enumeration(h.generator()));

  const BlockCode c322 = from_generator("c322", {"110", "011"});
  CHECK(c322.min_distance() == 2);
  CHECK(c322.min_distance() == oracles::min_weight_by_enumeration(c322.generator()));

  CHECK_THROWS_AS(make_parity(1), std::invalid_argument);
}

TEST_CASE("from_generator rejects rank-deficient input") {
  CHECK_THROWS_WITH_AS(from_generator("bad", {"110", "110"}),
                       doctest::Contains("rank-deficient"), std::invalid_argument);
}

TEST_CASE("dual of the 3-bit repetition code is the even-weight code") {
  const BlockCode d = make_repetition(3).dual();
  CHECK(d.n() == 3);
  CHECK(d.k() == 2);
  CHECK(d.min_distance() == 2);
  CHECK(oracles::span_set(d.generator()) ==
        std::set<std::string>{"000", "110", "101", "011"});
}

TEST_CASE("dual of hamming74 is the [7,3,4] simplex code") {
  const BlockCode h = make_hamming74();
  CHECK(h.dual_min_distance() == 4);
  const BlockCode d = h.dual();
  CHECK(d.n() == 7);
  CHECK(d.k() == 3);
  CHECK(d.min_distance() == 4);
  CHECK(d.min_distance() == oracles::min_weight_by_enumeration(d.generator()));
  // every nonzero simplex codeword has weight exactly 4
  for (const auto& s : oracles::span_set(d.generator())) {
    const auto w = BitVector::from_string(s).weight();
    CHECK((w == 0 || w == 4));
  }
}

TEST_CASE("biduality and orthogonality over the catalog") {
  const std::vector<BlockCode> catalog = {make_repetition(2), make_repetition(3),
                                          make_repetition(5), make_parity(4),
                                          make_hamming74(),
                                          from_generator("c322", {"110", "011"})};
  for (const BlockCode& c : catalog) {
    const BlockCode d = c.dual();
    CHECK(c.k() + d.k() == c.n());
    // every codeword is orthogonal to every dual generator
    for (const auto& s : oracles::span_set(c.generator())) {
      const BitVector word = BitVector::from_string(s);
      for (std::size_t i = 0; i < d.generator().nrows(); ++i)
        CHECK(!word.dot(d.generator().row(i)));
    }
    // dual of the dual spans the original row space
    const BlockCode dd = d.dual();
    CHECK(oracles::span_set(dd.generator()) == oracles::span_set(c.generator()));
  }
}

TEST_CASE("self-dual two-bit repetition code") {
  const BlockCode r2 = make_repetition(2);
  CHECK(r2.dual_min_distance() == 2);
  CHECK(oracles::span_set(r2.dual_generator()) ==
        oracles::span_set(r2.generator()));
}

TEST_CASE("min_distance guard") {
  BitMatrix big(21, 30);
  for (std::size_t i = 0; i < 21; ++i) big.set(i, i, true);
  const BlockCode c("wide", big);
  CHECK_THROWS_AS(c.min_distance(), qcat::GuardError);
}

TEST_CASE("encode agrees with row XOR") {
  const BlockCode h = make_hamming74();
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const BitVector u = oracles::random_vector(rng, 4);
    BitVector expected(7);
    for (std::size_t i = 0; i < 4; ++i)
      if (u.get(i)) expected ^= h.generator().row(i);
    CHECK(h.encode(u) == expected);
    CHECK(h.contains(h.encode(u)));
  }
}

TEST_CASE("convolutional constructor and memory") {
  const ConvolutionalCode cc("seven-five", 1, 2,
                             {{BitVector::from_string("111"), BitVector::from_string("101")}});
  CHECK(cc.k() == 1);
  CHECK(cc.n() == 2);
  CHECK(cc.memory() == 2);
  CHECK_THROWS_AS(ConvolutionalCode("zero-row", 1, 1, {{BitVector::from_string("000")}}),
                  std::invalid_argument);
}

namespace {

ConvolutionalCode seven_five() {
  return ConvolutionalCode("seven-five", 1, 2,
                           {{BitVector::from_string("111"), BitVector::from_string("101")}});
}

ConvolutionalCode repetition_as_conv() {
  return ConvolutionalCode("rep3-conv", 1, 3,
                           {{BitVector::from_string("1"), BitVector::from_string("1"),
                             BitVector::from_string("1")}});
}

}  // namespace

TEST_CASE("termination of a memoryless code gives independent frame copies") {
  const BlockCode b = conv_terminate(repetition_as_conv(), 2);
  CHECK(b.n() == 6);
  CHECK(b.k() == 2);
  CHECK(b.generator().row(0).to_string() == "111000");
  CHECK(b.generator().row(1).to_string() == "000111");
  CHECK(b.min_distance() == 3);
}

TEST_CASE("zero-tail termination of the (7,5) code") {
  const BlockCode b = conv_terminate(seven_five(), 4);
  CHECK(b.n() == 12);
  CHECK(b.k() == 4);
  // impulse at frame 0: outputs 11 10 11
  CHECK(b.generator().row(0).to_string() == "111011000000");
  CHECK(b.min_distance() >= 5);
  CHECK(b.min_distance() == oracles::min_weight_by_enumeration(b.generator()));
}

TEST_CASE("free distance of the (7,5) code is 5") {
  const FreeDistance fd = conv_free_distance(seven_five());
  CHECK(fd.exact);
  CHECK(fd.value == 5);
  // cross-check against terminated enumeration at L = 8
  const BlockCode b = conv_terminate(seven_five(), 8);
  CHECK(oracles::min_weight_by_enumeration(b.generator()) == 5);
}

TEST_CASE("free distance of a memoryless code is the frame weight") {
  const ConvolutionalCode cc("double", 1, 2,
                             {{BitVector::from_string("1"), BitVector::from_string("1")}});
  const FreeDistance fd = conv_free_distance(cc);
  CHECK(fd.exact);
  CHECK(fd.value == 2);
}

TEST_CASE("terminated distance never drops below the free distance") {
  const auto cc = seven_five();
  const FreeDistance fd = conv_free_distance(cc);
  for (std::size_t frames = 1; frames <= 6; ++frames) {
    const BlockCode b = conv_terminate(cc, frames);
    CHECK(b.min_distance() >= fd.value);
  }
}

TEST_CASE("free distance cap reports a lower bound") {
  const FreeDistance fd = conv_free_distance(seven_five(), 3);
  CHECK(!fd.exact);
  CHECK(fd.value == 3);
  CHECK(fd.to_string() == ">=3");
}

TEST_CASE("termination guard on the information length") {
  CHECK_THROWS_AS(conv_terminate(seven_five(), 21), qcat::GuardError);
}
