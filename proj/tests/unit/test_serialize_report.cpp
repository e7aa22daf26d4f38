#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "logizono/logizono.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace logizono;

TEST(Serialize, PolyRoundTrip) {
  gen::Rng r(81);
  for (int t = 0; t < 50; ++t) {
    const auto z = gen::poly(r, 1 + gen::below(r, 5), 4, 3, {3, 5, 8, 13});
    EXPECT_EQ(poly_from_json(to_json(z)), z);
    EXPECT_EQ(std::get<PolyLogicalZonotope>(set_from_json(to_json(SetValue(z)))), z);
  }
}

TEST(Serialize, LogicalAndExplicitRoundTrip) {
  gen::Rng r(82);
  const auto z = gen::logical(r, 4, 3);
  EXPECT_EQ(logical_from_json(to_json(z)), z);
  const ExplicitSet s = ExplicitSet::from_strings({"01", "10"});
  EXPECT_EQ(std::get<ExplicitSet>(set_from_json(to_json(s))), s);
}

TEST(Serialize, ThreePointFixture) {
  std::ifstream in(LOGIZONO_DATA_DIR "/three_points.json");
  std::stringstream ss;
  ss << in.rdbuf();
  const auto v = set_from_json(ss.str());
  EXPECT_EQ(oracle::str(evaluate(v)), (oracle::PointSet{"001", "010", "110"}));
}

TEST(Serialize, MalformedDocumentsThrow) {
  EXPECT_THROW(set_from_json("[]"), ModelError);
  EXPECT_THROW(set_from_json(R"({"c":"01","G":["1"]})"), Error);
  EXPECT_THROW(poly_from_json(R"({"c":"01","G":["11"],"E":["1"],"id":[1,1]})"), Error);
}

TEST(Report, CsvLayout) {
  const std::size_t steps[] = {1, 2};
  const auto r = reach(intersection_model(), steps);
  const auto csv = report_csv(r, {"intersection.json", 7});
  EXPECT_NE(csv.find("# algebra=poly mode=exact\n"), std::string::npos);
  EXPECT_NE(csv.find("# seed=7\n"), std::string::npos);
  EXPECT_NE(csv.find("\nsteps,time_seconds,size\n"), std::string::npos);
  EXPECT_TRUE(std::regex_search(csv, std::regex("\n1,[0-9]+\\.[0-9]{6},24\n2,[0-9]+\\.[0-9]{6},36\n$")))
      << csv;
}

TEST(Report, EmptyRunHasOneRow) {
  const std::size_t zero[] = {0};
  const auto csv = report_csv(reach(intersection_model(), zero), {"m", std::nullopt});
  EXPECT_TRUE(std::regex_search(csv, std::regex("\n0,[0-9.]+,16\n$"))) << csv;
  EXPECT_NE(csv.find("# seed=none"), std::string::npos);
}

TEST(Report, CsvDeterministicApartFromTime) {
  const std::size_t steps[] = {1, 5};
  auto strip = [](std::string s) { return std::regex_replace(s, std::regex(",[0-9.]+,"), ",T,"); };
  const auto a = report_csv(reach(boolean10_model(4), steps), {"b10", 4});
  const auto b = report_csv(reach(boolean10_model(4), steps), {"b10", 4});
  EXPECT_EQ(strip(a), strip(b));
}

TEST(Report, JsonRoundTrip) {
  const std::size_t steps[] = {1, 3};
  ReachOptions o;
  o.algebra = Algebra::Logical;
  o.mode = Mode::Minkowski;
  const auto r = reach(intersection_model(), steps, o);
  const auto parsed = parse_report_json(report_json(r, {"x.json", 42}, true));
  EXPECT_EQ(parsed.algebra, "logical");
  EXPECT_EQ(parsed.mode, "minkowski");
  EXPECT_EQ(parsed.model, "x.json");
  EXPECT_EQ(parsed.seed, 42u);
  ASSERT_EQ(parsed.rows.size(), 2u);
  EXPECT_EQ(parsed.rows[1].steps, 3u);
  EXPECT_EQ(parsed.rows[1].size, r.records[1].joint_size);
  EXPECT_EQ(parsed.rows[1].marginal_size, r.records[1].marginal_size);
}
