#include <gtest/gtest.h>

#include "logizono/logizono.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace logizono;

namespace {

BinaryVector bv(std::string_view s) { return BinaryVector::from_string(s); }

LogicalZonotope lz(std::string_view c, std::initializer_list<std::string_view> g) {
  return LogicalZonotope(bv(c), BinaryMatrix::from_columns(c.size(), g));
}

oracle::PointSet pts(const LogicalZonotope& z) { return oracle::str(lz_evaluate(z)); }

constexpr Gate kGates[] = {Gate::Xor, Gate::And, Gate::Or, Gate::Xnor, Gate::Nand, Gate::Nor};

}  // namespace

TEST(LogicalZonotope, SelfXorIsNotCancelled) {
  const auto p3 = lz("0", {"1"});
  const auto r = lz_xor(p3, p3);
  EXPECT_EQ(r, lz("0", {"1", "1"}));
  EXPECT_EQ(pts(r), (oracle::PointSet{"0", "1"}));
}

TEST(LogicalZonotope, XorWithZeroSingletonKeepsSet) {
  const auto a = lz("0110", {"1000", "0011"});
  EXPECT_EQ(pts(lz_xor(a, LogicalZonotope(BinaryVector(4)))), pts(a));
}

TEST(LogicalZonotope, NotComplementsCenterOnly) {
  EXPECT_EQ(lz_not(lz("01", {"11"})), lz("10", {"11"}));
  const auto a = lz("011", {"100"});
  EXPECT_EQ(lz_not(lz_not(a)), a);
}

TEST(LogicalZonotope, AndExamples) {
  const auto b = lz("010", {"101", "011"});
  EXPECT_EQ(pts(lz_and(LogicalZonotope(BinaryVector::ones(3)), b)), pts(b));
  const auto r = lz_and(lz("0", {"1"}), lz("0", {"1"}));
  EXPECT_EQ(r, lz("0", {"0", "0", "1"}));
  EXPECT_EQ(pts(r), (oracle::PointSet{"0", "1"}));
}

TEST(LogicalZonotope, AndGeneratorCount) {
  const auto a = lz("01", {"10", "11"});
  const auto b = lz("11", {"01", "10", "11"});
  EXPECT_EQ(lz_and(a, b).generator_count(), 2u + 3u + 6u);
}

TEST(LogicalZonotope, EnclosePoints) {
  const BinaryVector two[] = {bv("01"), bv("10")};
  const auto e = lz_enclose_points(two);
  EXPECT_EQ(e, lz("01", {"11"}));
  EXPECT_EQ(pts(e), (oracle::PointSet{"01", "10"}));
  const BinaryVector one[] = {bv("101")};
  EXPECT_EQ(lz_enclose_points(one), LogicalZonotope(bv("101")));
  const BinaryVector three[] = {bv("000"), bv("011"), bv("110")};
  const auto s = pts(lz_enclose_points(three));
  for (const auto& p : three) EXPECT_TRUE(s.count(p.to_string()));
  EXPECT_THROW(lz_enclose_points(std::span<const BinaryVector>{}), std::invalid_argument);
}

TEST(LogicalZonotope, EvaluateAndContains) {
  EXPECT_EQ(pts(lz("01", {"11"})), (oracle::PointSet{"01", "10"}));
  EXPECT_EQ(pts(lz("0", {"1", "1"})), (oracle::PointSet{"0", "1"}));
  EXPECT_EQ(pts(LogicalZonotope(bv("110"))), (oracle::PointSet{"110"}));
  EXPECT_TRUE(lz_contains(lz("0", {"1"}), bv("1")));
  EXPECT_FALSE(lz_contains(LogicalZonotope(bv("00")), bv("11")));
}

TEST(LogicalZonotope, CompactExamples) {
  EXPECT_EQ(lz_compact(lz("0", {"0", "1"})), lz("0", {"1"}));
  EXPECT_EQ(lz_compact(lz("0", {"1", "1"})), lz("0", {"1"}));
  const auto c = lz("010", {"100", "001"});
  EXPECT_EQ(lz_compact(c), c);
}

TEST(LogicalZonotope, CapacityErrorAboveCap) {
  BinaryMatrix g(30);
  for (std::size_t i = 0; i < 30; ++i) g.push_back(BinaryVector::unit(30, i));
  const LogicalZonotope z(BinaryVector(30), g);
  EXPECT_THROW(lz_evaluate(z, Limits{24}), CapacityError);
  EXPECT_EQ(lz_size(z), std::size_t{1} << 30);
  EXPECT_TRUE(lz_contains(z, BinaryVector::ones(30)));
}

TEST(LogicalZonotope, OracleProperties) {
  gen::Rng r(31);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + gen::below(r, 4);
    const auto a = gen::logical(r, n, 3), b = gen::logical(r, n, 3);
    const auto sa = oracle::points(a), sb = oracle::points(b);
    EXPECT_EQ(pts(lz_not(a)), oracle::image_not(sa));
    for (auto g : kGates) {
      const auto got = pts(lz_apply(g, a, b));
      const auto want = oracle::image(g, sa, sb);
      if (g == Gate::Xor || g == Gate::Xnor) {
        EXPECT_EQ(got, want);
      } else {
        EXPECT_TRUE(std::includes(got.begin(), got.end(), want.begin(), want.end()));
      }
    }
    EXPECT_EQ(pts(lz_nand(a, b)), oracle::image_not(pts(lz_and(a, b))));
    const auto c = lz_compact(a);
    EXPECT_EQ(pts(c), sa);
    EXPECT_LE(c.generator_count(), a.generator_count());
    EXPECT_EQ(lz_size(a), sa.size());
    const auto probe = gen::vec(r, n);
    EXPECT_EQ(lz_contains(a, probe), sa.count(oracle::str(probe)) == 1);
  }
}
