#include "qcat/pauli.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace qcat;

TEST_CASE("weight counts non-identity tensor factors") {
  CHECK(PauliOperator::identity(5).weight() == 0);
  // Y counts once
  PauliOperator y1 = PauliOperator::from_indexed("X1 Z1", 3);
  CHECK(y1.letter(0) == 'Y');
  CHECK(y1.weight() == 1);
  CHECK(PauliOperator::from_indexed("X1 Z2", 3).weight() == 2);
}

TEST_CASE("commutation of elementary pairs") {
  const auto x1 = PauliOperator::single(2, 0, 'X');
  const auto z1 = PauliOperator::single(2, 0, 'Z');
  const auto z2 = PauliOperator::single(2, 1, 'Z');
  CHECK(!commutes(x1, z1));
  CHECK(commutes(x1, z2));
  CHECK(commutes(PauliOperator::from_compact("YY"), PauliOperator::from_compact("XX")));
}

TEST_CASE("commutes matches the letter-clash oracle on random pairs") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = oracles::random_pauli(rng, 6);
    const auto b = oracles::random_pauli(rng, 6);
    CHECK(commutes(a, b) == !oracles::anticommute_by_letters(a, b));
    CHECK(commutes(a, b) == commutes(b, a));
  }
}

TEST_CASE("every Pauli commutes with itself") {
  std::mt19937 rng(18);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = oracles::random_pauli(rng, 7);
    CHECK(commutes(p, p));
  }
}

TEST_CASE("product is componentwise XOR") {
  const auto p = PauliOperator::from_compact("XZY");
  CHECK((p * p).is_identity());
  const auto x1 = PauliOperator::single(1, 0, 'X');
  const auto z1 = PauliOperator::single(1, 0, 'Z');
  CHECK((x1 * z1).letter(0) == 'Y');
  const auto a = PauliOperator::from_indexed("Z1 Z2", 3);
  const auto b = PauliOperator::from_indexed("Z1 Z3", 3);
  CHECK((a * b) == PauliOperator::from_indexed("Z2 Z3", 3));
}

TEST_CASE("product properties on random operators") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = oracles::random_pauli(rng, 5);
    const auto b = oracles::random_pauli(rng, 5);
    const auto c = oracles::random_pauli(rng, 5);
    CHECK((a * b) == (b * a));
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * b).weight() <= a.weight() + b.weight());
  }
}

TEST_CASE("group membership via span") {
  const std::vector<PauliOperator> gens = {PauliOperator::from_indexed("Z1 Z2", 3),
                                           PauliOperator::from_indexed("Z1 Z3", 3)};
  const PauliGroupBasis basis(3, gens);
  CHECK(basis.contains(PauliOperator::identity(3)));
  CHECK(basis.contains(PauliOperator::from_indexed("Z2 Z3", 3)));
  CHECK(!basis.contains(PauliOperator::from_indexed("Z1", 3)));

  // oracle: the group is exactly the 4 products of generator subsets
  std::set<std::string> elements;
  for (int mask = 0; mask < 4; ++mask) {
    PauliOperator p = PauliOperator::identity(3);
    if (mask & 1) p = p * gens[0];
    if (mask & 2) p = p * gens[1];
    elements.insert(p.to_compact());
  }
  CHECK(elements == std::set<std::string>{"III", "ZZI", "ZIZ", "IZZ"});
  CHECK(elements.count("ZII") == 0);
}

TEST_CASE("normalizer membership") {
  const PauliGroupBasis basis(2, {PauliOperator::from_indexed("Z1 Z2", 2)});
  CHECK(basis.in_normalizer(PauliOperator::from_indexed("Z1 Z2", 2)));
  CHECK(!basis.in_normalizer(PauliOperator::single(2, 0, 'X')));
  CHECK(basis.in_normalizer(PauliOperator::from_indexed("X1 X2", 2)));
}

TEST_CASE("group membership implies normalizer membership for commuting bases") {
  const std::vector<PauliOperator> gens = {PauliOperator::from_compact("ZZII"),
                                           PauliOperator::from_compact("IIZZ"),
                                           PauliOperator::from_compact("XXXX")};
  const PauliGroupBasis basis(4, gens);
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = oracles::random_pauli(rng, 4);
    if (basis.contains(p)) CHECK(basis.in_normalizer(p));
  }
}

TEST_CASE("string forms round-trip") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = oracles::random_pauli(rng, 9);
    CHECK(PauliOperator::from_compact(p.to_compact()) == p);
    CHECK(PauliOperator::from_indexed(p.to_indexed(), 9) == p);
    CHECK(PauliOperator::parse(p.to_compact()) == p);
  }
  CHECK(PauliOperator::parse("XXZ").to_compact() == "XXZ");
  CHECK(PauliOperator::parse("X1 X2 X3", 9).to_compact() == "XXXIIIIII");
  CHECK(PauliOperator::from_indexed("I", 4).is_identity());
  CHECK(PauliOperator::identity(3).to_indexed() == "I");
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(PauliOperator::from_compact("XQZ"), std::invalid_argument);
  CHECK_THROWS_AS(PauliOperator::from_indexed("X0", 3), std::invalid_argument);
  CHECK_THROWS_AS(PauliOperator::from_indexed("X4", 3), std::invalid_argument);
  CHECK_THROWS_AS(PauliOperator::parse("X1 X2"), std::invalid_argument);
  CHECK_THROWS_AS(commutes(PauliOperator::identity(2), PauliOperator::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("symplectic form round-trips") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = oracles::random_pauli(rng, 6);
    CHECK(PauliOperator::from_symplectic(p.to_symplectic()) == p);
  }
}
