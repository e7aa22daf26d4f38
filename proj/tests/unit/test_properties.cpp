// Invariants checked on random inputs against the brute-force oracle.

#include <gtest/gtest.h>

#include "logizono/logizono.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace logizono;

namespace {

constexpr Gate kGates[] = {Gate::Xor, Gate::And, Gate::Or, Gate::Xnor, Gate::Nand, Gate::Nor};

const std::vector<std::uint64_t> kPoolA{101, 102, 103};
const std::vector<std::uint64_t> kPoolB{104, 105, 106};
const std::vector<std::uint64_t> kShared{101, 102, 103, 104};

bool disjoint(const std::vector<FactorId>& a, const std::vector<FactorId>& b) {
  for (auto x : a)
    for (auto y : b)
      if (x == y) return false;
  return true;
}

}  // namespace

TEST(Properties, PolyMinkowskiOpsAreExact) {
  gen::Rng r(91);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + gen::below(r, 4);
    const auto a = gen::poly(r, n, 3, 3, kPoolA);
    const auto b = gen::poly(r, n, 3, 3, kPoolB);
    const auto sa = oracle::points(a), sb = oracle::points(b);
    EXPECT_EQ(oracle::points(pz_not(a)), oracle::image_not(sa));
    for (auto g : kGates) {
      const auto z = pz_mink_apply(g, a, b);
      EXPECT_EQ(oracle::points(z), oracle::image(g, sa, sb)) << gate_name(g);
      EXPECT_TRUE(disjoint(z.ids(), a.ids()) && disjoint(z.ids(), b.ids()));
    }
  }
}

TEST(Properties, PolyExactOpsAgreePerAssignment) {
  gen::Rng r(92);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + gen::below(r, 4);
    const auto a = gen::poly(r, n, 3, 3, kShared);
    const auto b = gen::poly(r, n, 3, 3, kShared);
    const auto next = IdAllocator::global().peek_next();
    for (auto g : kGates) {
      for (const auto& z : {pz_exact_apply(g, a, b), pz_exact_apply_compact(g, a, b)}) {
        oracle::for_each_assignment(kShared, [&](const auto& alpha) {
          ASSERT_EQ(oracle::point(z, alpha),
                    oracle::gate(g, oracle::point(a, alpha), oracle::point(b, alpha)));
        });
      }
    }
    EXPECT_EQ(IdAllocator::global().peek_next(), next);
  }
}

TEST(Properties, CompactAndSimplifyPreserveSets) {
  gen::Rng r(93);
  for (int t = 0; t < 300; ++t) {
    const auto z = gen::poly(r, 1 + gen::below(r, 4), 5, 4, {1, 2, 3, 4, 5});
    const auto c = pz_compact(z);
    const auto s = pz_simplify(z);
    EXPECT_EQ(oracle::points(c), oracle::points(z));
    EXPECT_EQ(oracle::points(s), oracle::points(z));
    oracle::for_each_assignment(z.ids(), [&](const auto& alpha) {
      EXPECT_EQ(oracle::point(c, alpha), oracle::point(z, alpha));
    });
    EXPECT_LE(c.generator_count(), z.generator_count());
    EXPECT_LE(c.factor_count(), z.factor_count());
    EXPECT_LE(s.generator_count(), z.generator_count());
    EXPECT_LE(s.factor_count(), z.factor_count());
  }
}

TEST(Properties, EvaluateMatchesOracleAndContains) {
  gen::Rng r(94);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + gen::below(r, 5);
    const auto z = gen::poly(r, n, 5, 4, {1, 2, 3, 4, 5});
    const auto want = oracle::points(z);
    EXPECT_EQ(oracle::str(pz_evaluate(z)), want);
    const auto probe = gen::vec(r, n);
    EXPECT_EQ(pz_contains(z, probe), want.count(oracle::str(probe)) == 1);
  }
}

TEST(Properties, JointEvaluateMatchesOracle) {
  gen::Rng r(95);
  for (int t = 0; t < 200; ++t) {
    std::vector<PolyLogicalZonotope> parts;
    for (std::size_t k = 1 + gen::below(r, 3); k > 0; --k) {
      parts.push_back(gen::poly(r, 1 + gen::below(r, 3), 3, 3, {1, 2, 3, 4, 5}));
    }
    EXPECT_EQ(oracle::str(pz_joint_evaluate(parts)), oracle::joint_points(parts));
  }
}

TEST(Properties, EnclosureContainsItsPoints) {
  gen::Rng r(96);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + gen::below(r, 5);
    const auto list = gen::point_list(r, n, 1 + gen::below(r, 5));
    const auto pz = oracle::points(pz_enclose_points(list));
    const auto lz = oracle::points(lz_enclose_points(list));
    for (const auto& p : list) {
      EXPECT_TRUE(pz.count(oracle::str(p)));
      EXPECT_TRUE(lz.count(oracle::str(p)));
    }
  }
}
