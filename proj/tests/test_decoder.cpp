#include "qcat/decoder.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "suite.hpp"

using namespace qcat;

namespace {

Construction nine_qubit() {
  return construct_code(ConstructionSpec{classical::make_repetition(3), 3});
}

}  // namespace

TEST_CASE("syndrome bits match the letter-level anticommutation oracle") {
  const Construction con = nine_qubit();
  std::mt19937 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = oracles::random_pauli(rng, 9);
    const Syndrome s = syndrome(con.code, p);
    REQUIRE(s.bits.size() == con.code.generators().size());
    for (std::size_t g = 0; g < con.code.generators().size(); ++g)
      CHECK(s.bits.get(g) ==
            oracles::anticommute_by_letters(p, con.code.generators()[g]));
  }
}

TEST_CASE("stabilizer elements have zero syndrome") {
  const Construction con = nine_qubit();
  for (const auto& g : con.code.generators())
    CHECK(syndrome(con.code, g).bits.none());
  // a few products
  const auto& gens = con.code.generators();
  CHECK(syndrome(con.code, gens[0] * gens[3]).bits.none());
  CHECK(syndrome(con.code, gens[6] * gens[7] * gens[1]).bits.none());
}

TEST_CASE("syndrome of X1 sets exactly the two Z-pair bits of block 1") {
  const Construction con = nine_qubit();
  const Syndrome s = syndrome(con.code, PauliOperator::from_indexed("X1", 9));
  CHECK(s.bits.to_string() == "11000000");
}

TEST_CASE("syndrome of Z1 sets the X-row bits whose block pattern covers block 1") {
  const Construction con = nine_qubit();
  const Syndrome s = syndrome(con.code, PauliOperator::from_indexed("Z1", 9));
  for (std::size_t r = 0; r < con.dual_rows.nrows(); ++r)
    CHECK(s.bits.get(con.num_z_pair_generators + r) == con.dual_rows.get(r, 0));
}

TEST_CASE("zero syndrome decodes to the identity") {
  const Construction con = nine_qubit();
  const TwoStageDecoder decoder(con);
  const PauliOperator recovery =
      decoder.decode(Syndrome{gf2::BitVector(con.code.generators().size())});
  CHECK(recovery.is_identity());
}

TEST_CASE("X2 is recovered exactly") {
  const Construction con = nine_qubit();
  const TwoStageDecoder decoder(con);
  const auto error = PauliOperator::from_indexed("X2", 9);
  const DecodeOutcome out = decoder.decode_error(error);
  CHECK(out.status == DecodeStatus::Success);
  CHECK(out.recovery == error);
}

TEST_CASE("Z5 is recovered up to a stabilizer element") {
  const Construction con = nine_qubit();
  const TwoStageDecoder decoder(con);
  const auto error = PauliOperator::from_indexed("Z5", 9);
  const DecodeOutcome out = decoder.decode_error(error);
  CHECK(out.status == DecodeStatus::Success);
  // recovery flips the parity of block 2 with a single Z at its first qubit
  CHECK(out.recovery == PauliOperator::from_indexed("Z4", 9));
  CHECK(classify_error(con.code, out.recovery * error) == ErrorClass::InStabilizer);
}

TEST_CASE("every weight-1 error decodes successfully when the distance is >= 3") {
  for (const auto& spec : suite::instances()) {
    const Construction con = construct_code(spec);
    if (distance_css(con.code) < 3) continue;
    CAPTURE(spec.c1.name());
    CAPTURE(spec.d2);
    const TwoStageDecoder decoder(con);
    for (std::size_t q = 0; q < con.code.n(); ++q) {
      for (char letter : {'X', 'Y', 'Z'}) {
        const auto error = PauliOperator::single(con.code.n(), q, letter);
        CHECK(decoder.decode_error(error).status == DecodeStatus::Success);
      }
    }
  }
}

TEST_CASE("recovery always returns to the code space") {
  const Construction con = nine_qubit();
  const TwoStageDecoder decoder(con);
  std::mt19937 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const auto error = oracles::random_pauli(rng, 9);
    const DecodeOutcome out = decoder.decode_error(error);
    CHECK(out.status != DecodeStatus::Inconsistent);
    CHECK(syndrome(con.code, out.recovery * error).bits.none());
  }
}

TEST_CASE("decoder guard on the table size") {
  gf2::BitMatrix wide = gf2::BitMatrix::identity(17);
  const classical::BlockCode c1("wide17", wide);
  const Construction con = construct_code(ConstructionSpec{c1, 1});
  CHECK_THROWS_AS(TwoStageDecoder{con}, GuardError);
}

TEST_CASE("depolarizing channel at p = 0 never fails") {
  const ChannelStats stats = simulate_depolarizing(nine_qubit(), 0.0, 2000, 7);
  CHECK(stats.failures == 0);
  CHECK(stats.logical_error_rate == 0.0);
  CHECK(stats.inconsistent == 0);
}

TEST_CASE("depolarizing channel is reproducible for a fixed seed") {
  const Construction con = nine_qubit();
  const ChannelStats a = simulate_depolarizing(con, 0.05, 4000, 12345);
  const ChannelStats b = simulate_depolarizing(con, 0.05, 4000, 12345);
  CHECK(a.failures == b.failures);
  CHECK(a.logical_error_rate == b.logical_error_rate);
  CHECK(a.failures > 0);  // p = 0.05 on 4000 trials is far above the noise floor
  CHECK(a.logical_error_rate <= 1.0);
}

TEST_CASE("simulate rejects probabilities outside [0,1]") {
  CHECK_THROWS_AS(simulate_depolarizing(nine_qubit(), 1.5, 10, 1),
                  std::invalid_argument);
}
