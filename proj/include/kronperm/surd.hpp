#pragma once

#include "kronperm/bigint.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kronperm {

/// Exact real quadratic number (a + b*sqrt(d)) / c.
///
/// Stored normalized: c > 0 and gcd(a, b, c) = 1. A perfect-square radicand is
/// folded into a, leaving b = 0 and d = 0, so rationals share the type. Square
/// factors of d are not extracted; two surds with different fields may denote
/// the same value, so value equality goes through compare().
class QuadraticSurd {
public:
  /// Throws ZeroDenominator if c == 0, NegativeRadicand if d < 0.
  static QuadraticSurd make(BigInt a, BigInt b, BigInt c, BigInt d);
  static QuadraticSurd rational(BigInt num, BigInt den = 1);
  static QuadraticSurd sqrt(BigInt d) { return make(0, 1, 1, std::move(d)); }

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  const BigInt& c() const noexcept { return c_; }
  const BigInt& d() const noexcept { return d_; }

  bool is_rational() const noexcept { return b_ == 0; }

  /// Unique integer m with m <= x < m + 1.
  BigInt floor() const;
  /// x - floor(x), in [0, 1).
  QuadraticSurd frac() const;

  QuadraticSurd operator-() const { return make(-a_, -b_, c_, d_); }
  QuadraticSurd operator+(const BigInt& m) const { return make(a_ + m * c_, b_, c_, d_); }
  QuadraticSurd operator-(const BigInt& m) const { return make(a_ - m * c_, b_, c_, d_); }
  QuadraticSurd operator*(const BigInt& k) const { return make(a_ * k, b_ * k, c_, d_); }
  /// Subtract a rational num/den (den != 0).
  QuadraticSurd minus_rational(const BigInt& num, const BigInt& den) const;

  /// Literal in the CLI grammar, e.g. "(-1+1*sqrt(5))/2"; rationals print as "a/c".
  std::string to_string() const;

private:
  QuadraticSurd(BigInt a, BigInt b, BigInt c, BigInt d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  BigInt a_, b_, c_, d_;
};

/// Exact ordering of the real values; integer arithmetic only.
std::strong_ordering compare(const QuadraticSurd& x, const QuadraticSurd& y);

inline std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y) {
  return compare(x, y);
}
inline bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
  return compare(x, y) == std::strong_ordering::equal;
}

/// Exact sign of value - num/den for den > 0.
std::strong_ordering compare_rational(const QuadraticSurd& x, const BigInt& num, const BigInt& den);

/// Eventually periodic continued fraction [preperiod; period repeating].
/// preperiod always holds a_0; period entries are all >= 1.
struct CFExpansionPeriodic {
  std::vector<BigInt> preperiod;
  std::vector<BigInt> period;

  const BigInt& coefficient(std::size_t k) const;
  std::size_t period_length() const noexcept { return period.size(); }
  /// Index of the first coefficient of the first period block.
  std::size_t period_start() const noexcept { return preperiod.size(); }
};

/// Continued fraction of an irrational surd, by the (P, Q) iteration with
/// state-recurrence cycle detection. Throws RationalInput or PeriodNotFound.
CFExpansionPeriodic cf_expansion(const QuadraticSurd& x, std::size_t max_terms = 100000);

/// Parses `(a+b*sqrt(D))/c`, `sqrt(D)`, `-sqrt(2)`, `(1+sqrt(5))/2`, `3/4`.
/// Whitespace is ignored. Throws ParseError with the failing offset.
QuadraticSurd parse_surd(std::string_view text);

} // namespace kronperm
