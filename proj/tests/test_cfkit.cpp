#include "kronperm/cfkit.hpp"
#include "kronperm/error.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace kronperm;

namespace {

std::vector<std::pair<BigInt, BigInt>> pq(const std::vector<Convergent>& cs) {
  std::vector<std::pair<BigInt, BigInt>> out;
  for (const auto& c : cs) out.emplace_back(c.p, c.q);
  return out;
}

using PQ = std::vector<std::pair<BigInt, BigInt>>;

} // namespace

TEST(Convergents, Pi) {
  const auto cs = convergents(CFStream::pi_table(), 5);
  EXPECT_EQ(pq(cs), (PQ{{3, 1}, {22, 7}, {333, 106}, {355, 113}, {103993, 33102}, {104348, 33215}}));
}

TEST(Convergents, E) {
  const auto cs = convergents(CFStream::e_pattern(), 12);
  EXPECT_EQ(pq(cs), (PQ{{2, 1}, {3, 1}, {8, 3}, {11, 4}, {19, 7}, {87, 32}, {106, 39}, {193, 71},
                        {1264, 465}, {1457, 536}, {2721, 1001}, {23225, 8544}, {25946, 9545}}));
}

TEST(Convergents, GoldenFraction) {
  const auto cs = convergents(parse_alpha("named:phi").stream.fractional(), 6);
  EXPECT_EQ(pq(cs), (PQ{{0, 1}, {1, 1}, {1, 2}, {2, 3}, {3, 5}, {5, 8}, {8, 13}}));
}

TEST(Convergents, SideMatchesOracleAndDeterminant) {
  const std::vector<std::pair<CFStream, oracle::Dec>> cases = {
      {CFStream::pi_table(), oracle::pi_value()},
      {CFStream::e_pattern(), oracle::e_value()},
      {CFStream::from_surd(QuadraticSurd::sqrt(7)), boost::multiprecision::sqrt(oracle::Dec(7))},
  };
  for (const auto& [stream, value] : cases) {
    const auto cs = convergents(stream, 14);
    for (std::size_t n = 0; n < cs.size(); ++n) {
      const auto& c = cs[n];
      const bool above = value > oracle::dec(c.p) / oracle::dec(c.q);
      EXPECT_EQ(c.side == Side::Above, above) << stream.label() << " n=" << n;
      EXPECT_EQ(c.side == Side::Above, c.det_sign == -1);
      EXPECT_EQ(gcd(abs(c.p), c.q), 1);
      if (n >= 1) EXPECT_EQ(check_determinant_identity(cs[n - 1], c), c.det_sign);
      if (n >= 2) EXPECT_GT(c.q, cs[n - 1].q);
    }
  }
}

TEST(Determinant, Examples) {
  Convergent a{1, 22, 7}, b{2, 333, 106};
  EXPECT_EQ(check_determinant_identity(a, b), -1);
  Convergent c{3, 3, 5}, d{4, 5, 8};
  EXPECT_EQ(check_determinant_identity(c, d), 1);
  Convergent e{0, 1, 3}, f{1, 2, 3};
  try {
    check_determinant_identity(e, f);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::IdentityViolation);
  }
}

TEST(Palindrome, Examples) {
  const auto s3 = CFStream::from_surd(QuadraticSurd::sqrt(3)).fractional();
  EXPECT_TRUE(is_palindrome_prefix(s3, 1));
  EXPECT_FALSE(is_palindrome_prefix(s3, 2));
  EXPECT_TRUE(is_palindrome_prefix(s3, 3));

  const auto e2 = CFStream::e_pattern().fractional(); // e - 2 = [0; 1, 2, 1, 1, 4, ...]
  EXPECT_TRUE(is_palindrome_prefix(e2, 3));
  EXPECT_FALSE(is_palindrome_prefix(e2, 4));
  EXPECT_TRUE(is_palindrome_prefix(e2, 0));

  EXPECT_THROW(is_palindrome_prefix(CFStream::e_pattern(), 2), Error);
}

TEST(Palindrome, BiconditionalBruteForce) {
  std::vector<CFStream> streams = {CFStream::e_pattern().fractional(), CFStream::pi_table().fractional()};
  for (int d : {2, 3, 5, 7, 13, 19, 22, 31, 43}) streams.push_back(CFStream::from_surd(QuadraticSurd::sqrt(d)).fractional());
  for (const auto& s : streams) {
    const std::size_t upto = s.length() ? *s.length() - 1 : 30;
    const auto cs = convergents(s, upto);
    for (std::size_t n = 1; n <= upto; ++n) {
      bool pal = true;
      for (std::size_t i = 1; i <= n; ++i) pal = pal && s.coefficient(i) == s.coefficient(n + 1 - i);
      EXPECT_EQ(pal, is_palindrome_prefix(s, n));
      EXPECT_EQ(pal, cs[n].p == cs[n - 1].q) << s.label() << " n=" << n;
      EXPECT_TRUE(check_palindrome_pq_biconditional(s, n));
    }
  }
}

TEST(Evaluator, CompareAndFloorAgainstOracle) {
  const AlphaEvaluator pi(CFStream::pi_table());
  EXPECT_EQ(pi.compare(355, 113), std::strong_ordering::less);
  EXPECT_EQ(pi.compare(22, 7), std::strong_ordering::less);
  EXPECT_EQ(pi.compare(333, 106), std::strong_ordering::greater);
  EXPECT_EQ(pi.compare(314159, 100000), std::strong_ordering::greater);

  const AlphaEvaluator e(CFStream::e_pattern());
  const auto ev = oracle::e_value();
  for (int m = -50; m <= 50; m += 7)
    for (int num = -3; num <= 3; ++num) {
      const Rational off(num, 7);
      const auto got = e.floor_affine(m, off);
      const auto want = boost::multiprecision::floor(oracle::Dec(m) * ev + oracle::Dec(num) / 7);
      EXPECT_EQ(oracle::dec(got), want) << m << " " << num;
    }
  EXPECT_EQ(e.floor_affine(BigInt("1000000000000000")), BigInt("2718281828459045"));
}

TEST(Evaluator, BracketContainsValue) {
  const AlphaEvaluator e(CFStream::e_pattern());
  for (std::size_t n = 0; n < 10; ++n) {
    const auto [lo, hi] = e.bracket(n);
    EXPECT_LT(lo, hi);
    const auto l = oracle::dec(numerator(lo)) / oracle::dec(denominator(lo));
    const auto h = oracle::dec(numerator(hi)) / oracle::dec(denominator(hi));
    EXPECT_LT(l, oracle::e_value());
    EXPECT_GT(h, oracle::e_value());
  }
}

TEST(Evaluator, Limits) {
  const AlphaEvaluator tight(CFStream::e_pattern(), 4);
  try {
    tight.compare(BigInt("2718281828459045"), BigInt("1000000000000000"));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::PrecisionBudgetExceeded);
  }
  const AlphaEvaluator pi(CFStream::pi_table());
  try {
    pi.compare(BigInt("3141592653589793238462643383279"), BigInt("1000000000000000000000000000000"));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::StreamExhausted);
  }
}

TEST(Hurwitz, ExamplesAndOracle) {
  const AlphaEvaluator e(CFStream::e_pattern());
  const auto rows = hurwitz_scan(e, 12);
  ASSERT_EQ(rows.size(), 13u);
  EXPECT_EQ(rows[4].p, 19);
  EXPECT_EQ(rows[4].q, 7);
  EXPECT_TRUE(rows[4].satisfies);

  const auto s5 = boost::multiprecision::sqrt(oracle::Dec(5));
  for (const auto& r : rows) {
    const auto err = abs(oracle::e_value() - oracle::dec(r.p) / oracle::dec(r.q));
    const auto bound = 1 / (s5 * oracle::dec(r.q) * oracle::dec(r.q));
    EXPECT_EQ(r.satisfies, err <= bound) << r.index;
    EXPECT_GT(r.error_lo, 0);
    EXPECT_LT(oracle::dec(numerator(r.error_lo)) / oracle::dec(denominator(r.error_lo)), err);
    EXPECT_GT(oracle::dec(numerator(r.error_hi)) / oracle::dec(denominator(r.error_hi)), err);
  }

  const AlphaEvaluator phi(parse_alpha("named:phi").stream.fractional());
  const auto prow = hurwitz_scan(phi, 1);
  EXPECT_EQ(prow[1].p, 1);
  EXPECT_EQ(prow[1].q, 1);
  EXPECT_TRUE(prow[1].satisfies);
}

TEST(GaussKuzmin, Probabilities) {
  EXPECT_NEAR(gauss_kuzmin_probability(1), std::log2(4.0 / 3.0), 1e-15);
  double sum = 0;
  for (std::uint64_t j = 1; j <= 1000; ++j) sum += gauss_kuzmin_probability(j);
  EXPECT_NEAR(sum, std::log2(2.0 * 1001 / 1002), 1e-12);
  EXPECT_EQ(gauss_kuzmin_quantile(0.0), 1u);
  EXPECT_EQ(gauss_kuzmin_quantile(0.4), 1u);
  EXPECT_EQ(gauss_kuzmin_quantile(0.5), 2u);
  for (double u = 0.001; u < 0.999; u += 0.0137) {
    const auto j = gauss_kuzmin_quantile(u);
    const double cdf_lo = 1.0 - std::log2(1.0 + 1.0 / static_cast<double>(j));
    const double cdf_hi = 1.0 - std::log2(1.0 + 1.0 / static_cast<double>(j + 1));
    EXPECT_LE(cdf_lo, u + 1e-12);
    EXPECT_GT(cdf_hi, u - 1e-12);
  }
}

TEST(GaussKuzmin, DeterministicStreams) {
  EnsembleConfig cfg;
  cfg.seed = 42;
  cfg.sample_count = 3;
  cfg.cf_depth = 200;
  const auto a = CFStream::gauss_kuzmin(cfg, 1), b = CFStream::gauss_kuzmin(cfg, 1), c = CFStream::gauss_kuzmin(cfg, 2);
  EXPECT_EQ(a.coefficient(0), 0);
  bool differs = false;
  for (std::size_t k = 1; k <= 200; ++k) {
    EXPECT_EQ(a.coefficient(k), b.coefficient(k));
    EXPECT_GE(a.coefficient(k), 1);
    differs = differs || a.coefficient(k) != c.coefficient(k);
  }
  EXPECT_TRUE(differs);
  EXPECT_FALSE(a.has(201));
  cfg.sample_count = 0;
  EXPECT_THROW(cfg.validate(), Error);
}

TEST(GaussKuzmin, FrequencyOfOnes) {
  EnsembleConfig cfg;
  cfg.seed = 2024;
  cfg.cf_depth = 1000000;
  const auto s = CFStream::gauss_kuzmin(cfg, 0);
  std::size_t ones = 0, twos = 0;
  for (std::size_t k = 1; k <= cfg.cf_depth; ++k) {
    const auto a = s.coefficient(k);
    ones += a == 1;
    twos += a == 2;
  }
  EXPECT_NEAR(static_cast<double>(ones) / cfg.cf_depth, std::log2(4.0 / 3.0), 0.01);
  EXPECT_NEAR(static_cast<double>(twos) / cfg.cf_depth, gauss_kuzmin_probability(2), 0.01);
}

TEST(ParseAlpha, Grammar) {
  EXPECT_EQ(parse_alpha("named:phi").stream.surd()->to_string(), parse_surd("(1+sqrt(5))/2").to_string());
  EXPECT_EQ(parse_alpha("named:sqrt2").stream.coefficient(3), 2);
  EXPECT_EQ(parse_alpha("named:e").stream.kind(), CFStream::Kind::EPattern);
  EXPECT_EQ(parse_alpha("named:pi").stream.coefficient(4), 292);
  const auto l = parse_alpha("cf:[0; 1, 2, 3]");
  EXPECT_EQ(l.stream.length(), 4u);
  EXPECT_EQ(l.stream.coefficient(3), 3);
  EXPECT_EQ(parse_alpha("gk:5/2").stream.kind(), CFStream::Kind::GaussKuzmin);
  EXPECT_EQ(*parse_alpha("surd:sqrt(3)").stream.surd(), QuadraticSurd::sqrt(3));

  for (const char* bad : {"named:tau", "cf:[1;2", "surd:(1+", "gk:x/1", "nothing"}) EXPECT_THROW(parse_alpha(bad), ParseError) << bad;
  EXPECT_THROW(parse_alpha("surd:3/4"), Error);
}

TEST(Streams, EPatternAndExhaustion) {
  const auto e = CFStream::e_pattern();
  const std::vector<int> want = {2, 1, 2, 1, 1, 4, 1, 1, 6, 1, 1, 8};
  for (std::size_t k = 0; k < want.size(); ++k) EXPECT_EQ(e.coefficient(k), want[k]);
  EXPECT_FALSE(e.length());
  const auto pi = CFStream::pi_table();
  EXPECT_EQ(pi.length(), 16u);
  try {
    pi.coefficient(16);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::StreamExhausted);
  }
}
