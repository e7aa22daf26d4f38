#include <gtest/gtest.h>

#include <algorithm>


#include "logizono/logizono.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace logizono;

namespace {

BinaryVector random_key(gen::Rng& r, std::size_t l) { return gen::vec(r, l); }

std::vector<int> cells_of(const BinaryVector& key) {
  std::vector<int> c(key.dim());
  for (std::size_t i = 0; i < key.dim(); ++i) c[i] = key.test(i);
  return c;
}

}  // namespace

TEST(Intersection, Structure) {
  const auto m = intersection_model();
  EXPECT_EQ(m.states().size(), 8u);
  EXPECT_EQ(m.inputs().size(), 8u);
  EXPECT_EQ(m.updates().size(), 8u);
  EXPECT_EQ(m.variable("p1").initial().size(), 1u);
  EXPECT_EQ(m.variable("p2").initial().size(), 2u);
  EXPECT_EQ(m.variable("up2").input_at(0).size(), 1u);
  EXPECT_EQ(m.variable("up2").input_at(0)[0], BinaryVector(1));
  EXPECT_EQ(model_to_json(load_model(LOGIZONO_DATA_DIR "/intersection.json")), model_to_json(m));
}

TEST(Boolean10, Structure) {
  const auto m = boolean10_model(9);
  EXPECT_EQ(m.states().size(), 3u);
  EXPECT_EQ(m.inputs().size(), 3u);
  for (const auto& v : m.variables()) {
    EXPECT_EQ(v.dim, 10u);
    for (const auto& s : v.sets) {
      ASSERT_EQ(s.size(), 2u);
      EXPECT_NE(s[0], s[1]);
    }
  }
  EXPECT_EQ(model_to_json(boolean10_model(9)), model_to_json(m));
  EXPECT_NE(model_to_json(boolean10_model(10)), model_to_json(m));
}

TEST(Boolean10, PolyExactMatchesOracleAndLogicalIsLarger) {
  for (std::uint64_t seed : {1, 2}) {
    const auto m = boolean10_model(seed);
    const auto want = oracle::reach(m, 2);
    ReachOptions exact;
    ReachOptions logical;
    logical.algebra = Algebra::Logical;
    logical.mode = Mode::Minkowski;
    const auto p = reach(m, 2, exact).records[0];
    EXPECT_EQ(oracle::str(joint_set(p.sets)), want[2]);
    EXPECT_GE(reach(m, 2, logical).records[0].joint_size, p.joint_size);
  }
}

TEST(Boolean10, FixtureMatchesGenerator) {
  const auto fixture = load_model(LOGIZONO_DATA_DIR "/boolean10.json");
  const auto gen = boolean10_model(1, 8);
  EXPECT_EQ(model_to_json(fixture), model_to_json(gen));
}

TEST(Lfsr, ZeroKeyGivesZeroStream) {
  const LfsrSpec spec;
  EXPECT_TRUE(lfsr_keystream(spec, BinaryVector(60), 120).none());
}

TEST(Lfsr, MatchesReferenceSimulator) {
  LfsrSpec small;
  small.length = 4;
  small.feedback = {4, 3};
  small.output = {4};
  const auto key = BinaryVector::from_string("1000");
  EXPECT_EQ(oracle::str(lfsr_keystream(small, key, 16)),
            oracle::lfsr_stream({1, 0, 0, 0}, {4, 3}, {4}, 16));

  gen::Rng r(71);
  for (std::size_t l : {8, 16, 60}) {
    const auto spec = l == 60 ? LfsrSpec{} : LfsrSpec::scaled(l);
    const auto k = random_key(r, l);
    EXPECT_EQ(oracle::str(lfsr_keystream(spec, k, 3 * l)),
              oracle::lfsr_stream(cells_of(k), spec.feedback, spec.output, 3 * l));
  }
}

TEST(Lfsr, ScaledTapsReproduceDefaultsAt60) {
  const auto s = LfsrSpec::scaled(60);
  EXPECT_EQ(s.feedback, LfsrSpec{}.feedback);
  EXPECT_EQ(s.output, LfsrSpec{}.output);
  EXPECT_EQ(LfsrSpec::scaled(30).feedback, (std::vector<std::size_t>{30, 29, 28, 7}));
}

TEST(Lfsr, ValidationRejectsBadTaps) {
  LfsrSpec s = LfsrSpec::scaled(8);
  s.feedback = {9};
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = LfsrSpec::scaled(8);
  s.output.clear();
  EXPECT_THROW(s.validate(), std::invalid_argument);
  EXPECT_THROW(lfsr_keystream(LfsrSpec{}, BinaryVector(59), 4), DimensionError);
}

TEST(Lfsr, ZonotopeStreamCoversConcreteStreams) {
  gen::Rng r(72);
  const std::size_t l = 6;
  const auto spec = LfsrSpec::scaled(l);
  for (int t = 0; t < 20; ++t) {
    // Each key bit is fixed or free.
    std::vector<LogicalZonotope> key;
    std::vector<int> fixed(l, -1);
    for (std::size_t i = 0; i < l; ++i) {
      switch (gen::below(r, 3)) {
        case 0: key.emplace_back(BinaryVector(1)); fixed[i] = 0; break;
        case 1: key.emplace_back(BinaryVector::ones(1)); fixed[i] = 1; break;
        default: key.emplace_back(BinaryVector(1), BinaryMatrix::from_columns(1, {"1"}));
      }
    }
    const auto stream = lfsr_keystream(spec, key, 2 * l);
    std::vector<oracle::PointSet> seen(2 * l);
    for (unsigned m = 0; m < (1u << l); ++m) {
      std::vector<int> cells(l);
      bool ok = true;
      for (std::size_t i = 0; i < l; ++i) {
        cells[i] = (m >> i) & 1;
        if (fixed[i] >= 0 && cells[i] != fixed[i]) ok = false;
      }
      if (!ok) continue;
      const auto s = oracle::lfsr_stream(cells, spec.feedback, spec.output, 2 * l);
      for (std::size_t j = 0; j < s.size(); ++j) seen[j].insert(std::string(1, s[j]));
    }
    // XOR of logical zonotopes forgets that a key bit may appear twice, so
    // the stream may be wider than the concrete union but never narrower.
    for (std::size_t j = 0; j < stream.size(); ++j) {
      const auto got = oracle::points(stream[j]);
      EXPECT_TRUE(std::includes(got.begin(), got.end(), seen[j].begin(), seen[j].end()));
    }
  }
}

TEST(Lfsr, RecoversRandomKeys) {
  gen::Rng r(73);
  for (std::size_t l : {16, 24, 30}) {
    const auto spec = LfsrSpec::scaled(l);
    for (int t = 0; t < 5; ++t) {
      const auto key = random_key(r, l);
      const auto msg = gen::vec(r, 2 * l);
      EXPECT_EQ(lfsr_recover_key(spec, msg, lfsr_encrypt(spec, key, msg)), key);
    }
  }
}

TEST(Lfsr, TrueKeyStaysInsideKeySets) {
  gen::Rng r(74);
  const auto spec = LfsrSpec::scaled(24);
  const auto key = random_key(r, 24);
  const auto msg = gen::vec(r, 48);
  const auto cipher = lfsr_encrypt(spec, key, msg);
  // Only the branch whose first two bits match the key must contain it.
  bool in_true_branch = false;
  std::size_t violations = 0;
  lfsr_recover_key(spec, msg, cipher, [&](std::span<const LogicalZonotope> sets) {
    BinaryVector b0(1), b1(1);
    b0.set(0, key.test(0));
    b1.set(0, key.test(1));
    in_true_branch = lz_contains(sets[0], b0) && lz_contains(sets[1], b1);
    if (!in_true_branch) return;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      BinaryVector bit(1);
      bit.set(0, key.test(i));
      if (!lz_contains(sets[i], bit)) ++violations;
    }
  });
  EXPECT_EQ(violations, 0u);
}

TEST(Lfsr, CorruptedCiphertextFails) {
  gen::Rng r(75);
  const auto spec = LfsrSpec::scaled(16);
  const auto key = random_key(r, 16);
  const auto msg = gen::vec(r, 32);
  auto cipher = lfsr_encrypt(spec, key, msg);
  cipher.flip(5);
  EXPECT_THROW(lfsr_recover_key(spec, msg, cipher), SearchFailure);
}

TEST(Lfsr, HexRoundTrip) {
  const auto k = key_from_hex("0xBEEF", 16);
  EXPECT_EQ(k.to_string(), "1011111011101111");
  EXPECT_EQ(key_to_hex(k), "0xbeef");
  EXPECT_EQ(key_from_hex("5", 6).to_string(), "000101");
  EXPECT_THROW(key_from_hex("0x1FF", 8), std::invalid_argument);
  EXPECT_THROW(key_from_hex("xyz", 8), std::invalid_argument);
  gen::Rng r(76);
  for (std::size_t l : {5, 16, 30, 60}) {
    const auto key = random_key(r, l);
    EXPECT_EQ(key_from_hex(key_to_hex(key), l), key);
  }
}
