#include <gtest/gtest.h>

#include "logizono/logizono.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace logizono;

namespace {

ExplicitSet set(std::initializer_list<std::string_view> pts) { return ExplicitSet::from_strings(pts); }

ExplicitSet random_set(gen::Rng& r, std::size_t n) {
  return ExplicitSet(n, gen::point_list(r, n, 1 + gen::below(r, 5)));
}

}  // namespace

TEST(ExplicitSet, MinkowskiExamples) {
  EXPECT_EQ(set_minkowski(set({"0"}), set({"0", "1"}), Gate::Xor), set({"0", "1"}));
  EXPECT_EQ(set_minkowski(set({"0", "1"}), set({"1"}), Gate::And), set({"0", "1"}));
  EXPECT_EQ(set_minkowski(set({"01", "10"}), set({"11"}), Gate::Xor), set({"10", "01"}));
}

TEST(ExplicitSet, NotExamples) {
  EXPECT_EQ(set_not(set({"0", "1"})), set({"0", "1"}));
  EXPECT_EQ(set_not(set({"00"})), set({"11"}));
}

TEST(ExplicitSet, Deduplicates) {
  EXPECT_EQ(set({"01", "01", "10"}).size(), 2u);
  EXPECT_THROW(set({"01", "1"}), DimensionError);
}

TEST(ExplicitSet, PropertiesAgainstReEnumeration) {
  gen::Rng r(21);
  constexpr Gate gates[] = {Gate::Xor, Gate::And, Gate::Or, Gate::Xnor, Gate::Nand, Gate::Nor};
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + gen::below(r, 4);
    const auto a = random_set(r, n), b = random_set(r, n);
    const auto g = gates[gen::below(r, 6)];
    const auto got = set_minkowski(a, b, g);
    EXPECT_LE(got.size(), a.size() * b.size());
    EXPECT_EQ(oracle::str(got), oracle::image(g, oracle::str(a), oracle::str(b)));
    EXPECT_EQ(set_not(set_not(a)), a);
    // Monotone in the first operand.
    const auto wider = set_union(a, random_set(r, n));
    EXPECT_TRUE(got.is_subset_of(set_minkowski(wider, b, g)));
  }
}

TEST(ReachExplicit, IdentityKeepsInitialSet) {
  const auto m = parse_model(R"({"vars":[{"name":"x","dim":2,"init":["01","11","00"]}],
                                 "updates":{"x":"x"}})");
  const auto r = reach_explicit(m, 10);
  ASSERT_EQ(r.size(), 11u);
  for (const auto& s : r) EXPECT_EQ(s, set({"00", "01", "11"}));
}

TEST(ReachExplicit, PeriodTwoFlip) {
  const auto m = parse_model(R"({"vars":[{"name":"x","dim":2,"init":["00"]}],
                                 "updates":{"x":"!x"}})");
  const auto r = reach_explicit(m, 2);
  EXPECT_EQ(r[1], set({"11"}));
  EXPECT_EQ(r[2], set({"00"}));
}

TEST(ReachExplicit, SingletonsReduceToSimulation) {
  const auto m = parse_model(R"({"vars":[{"name":"a","init":["1"]},{"name":"b","init":["0"]},
                                 {"name":"u","role":"input","inputs":[["1"],["0"],["1"]]}],
                                 "updates":{"a":"a ^ u","b":"a' & !b"},"order":["a","b"]})");
  const auto r = reach_explicit(m, 3);
  // a: 1 -> 0 -> 0 -> 1, b: 0 -> 0 -> 0 -> 1
  EXPECT_EQ(r[1], set({"00"}));
  EXPECT_EQ(r[2], set({"00"}));
  EXPECT_EQ(r[3], set({"11"}));
}

TEST(ReachExplicit, IntersectionMatchesIndependentOracle) {
  const auto m = intersection_model();
  const auto want = oracle::reach(m, 5);
  const auto got = reach_explicit(m, 5);
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_EQ(oracle::str(got[k]), want[k]) << "step " << k;
}

TEST(ReachExplicit, RandomModelsMatchOracle) {
  gen::Rng r(22);
  for (int t = 0; t < 60; ++t) {
    const auto doc = gen::model_json(r);
    const auto m = parse_model(doc);
    const auto want = oracle::reach(m, 4);
    const auto got = reach_explicit(m, 4);
    for (std::size_t k = 0; k <= 4; ++k) ASSERT_EQ(oracle::str(got[k]), want[k]) << doc;
  }
}

TEST(ReachExplicit, PointCapRaisesCapacityError) {
  const auto m = parse_model(R"({"vars":[{"name":"x","dim":8,"init":["00000000"]},
      {"name":"u","role":"input","dim":8,"inputs":["00000000","11111111","10101010","01010101"]}],
      "updates":{"x":"x ^ u"}})");
  ExplicitReachOptions opts;
  opts.limits.max_points = 3;
  EXPECT_THROW(reach_explicit(m, 3, opts), CapacityError);
}
