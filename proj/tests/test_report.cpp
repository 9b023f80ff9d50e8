#include "kronperm/report.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace kronperm;

TEST(Report, JsonIntegers) {
  EXPECT_TRUE(report::json_int(std::uint64_t{1} << 53).is_number());
  EXPECT_EQ(report::json_int((std::uint64_t{1} << 53) + 1), "9007199254740993");
  EXPECT_EQ(report::json_int(BigInt("123456789012345678901234567890")), "123456789012345678901234567890");
}

TEST(Report, SignatureText) {
  const auto r = signature_of(parse_alpha("named:phi").stream, 13);
  EXPECT_EQ(report::cycles_text(r.signature), "(1 13 8 9)(2 5 7 4)(3 10 6 12)(11)");
  EXPECT_EQ(report::lengths_text(r.signature), "1:1,4:3");
  const auto j = report::signature_json("named:phi", 13, r);
  EXPECT_EQ(j["builder"], "modular");
  EXPECT_EQ(j["fixed_points"], report::Json::array({11}));
}

TEST(Report, ConvergentTable) {
  const auto s = CFStream::pi_table();
  const auto t = report::convergent_table(s, convergents(s, 4));
  ASSERT_EQ(t.size(), 5u);
  EXPECT_EQ(t[4]["a"], "292");
  EXPECT_EQ(t[4]["q"], "33102");
  EXPECT_EQ(t[4]["det_sign"], -1);
  EXPECT_EQ(t[4]["side"], "Above");
}

TEST(Report, FixedDecimal) {
  EXPECT_EQ(report::fixed_decimal(BigInt(5), 3), "0.005");
  EXPECT_EQ(report::fixed_decimal(BigInt(-1234), 2), "-12.34");
  EXPECT_EQ(report::fixed_decimal(BigInt(1000), 3), "1.000");
}

TEST(Report, PointsMatchOracle) {
  const auto alpha = parse_alpha("named:e");
  const auto r = signature_of(alpha.stream, 71);
  const auto rows = report::point_rows(alpha.stream, r.pi, 10000);
  ASSERT_EQ(rows.size(), 71u);
  for (const auto& row : rows) {
    const auto x = oracle::frac(oracle::e_value() * row.k);
    const auto want = boost::multiprecision::round(x * oracle::Dec("1e12"));
    EXPECT_EQ(oracle::Dec(row.x) * oracle::Dec("1e12"), want) << row.k;
    EXPECT_EQ(row.rank, r.pi(row.k));
  }
  EXPECT_EQ(rows.back().k_over_n, "1.000000000000");
  const auto csv = report::points_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,k_over_n,x_k,rank");
}
