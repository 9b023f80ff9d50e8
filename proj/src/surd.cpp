#include "kronperm/surd.hpp"

#include "kronperm/error.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <unordered_map>


namespace kronperm {
namespace {

// sign(e + f * sqrt(m)) for m >= 0.
int sign_with_root(const BigInt& e, const BigInt& f, const BigInt& m) {
  const int se = sign(e);
  const int sf = m == 0 ? 0 : sign(f);
  if (sf == 0) return se;
  if (se == 0 || se == sf) return sf;
  const BigInt lhs = e * e;
  const BigInt rhs = f * f * m;
  if (lhs > rhs) return se;
  if (lhs < rhs) return sf;
  return 0;
}

// sign(A + B sqrt(m) + C sqrt(n)) for m, n >= 0.
int sign_two_roots(const BigInt& A, const BigInt& B, const BigInt& m, const BigInt& C, const BigInt& n) {
  if (m == n) return sign_with_root(A, B + C, m);
  const int su = sign_with_root(A, B, m);
  const int sv = n == 0 ? 0 : sign(C);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // Opposite signs: compare |A + B sqrt m| against |C sqrt n| by squaring.
  const int s = sign_with_root(A * A + B * B * m - C * C * n, 2 * A * B, m);
  if (s > 0) return su;
  if (s < 0) return sv;
  return 0;
}

std::strong_ordering to_ordering(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

} // namespace

QuadraticSurd QuadraticSurd::make(BigInt a, BigInt b, BigInt c, BigInt d) {
  if (c == 0) throw Error(ErrorCode::ZeroDenominator, "surd denominator is zero");
  if (d < 0) throw Error(ErrorCode::NegativeRadicand, "radicand " + d.str() + " is negative");
  if (c < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  BigInt root;
  if (b == 0) {
    d = 0;
  } else if (is_perfect_square(d, &root)) {
    a += b * root;
    b = 0;
    d = 0;
  }
  BigInt g = gcd(gcd(abs(a), abs(b)), c);
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  return QuadraticSurd(std::move(a), std::move(b), std::move(c), std::move(d));
}

QuadraticSurd QuadraticSurd::rational(BigInt num, BigInt den) {
  return make(std::move(num), 0, std::move(den), 0);
}

QuadraticSurd QuadraticSurd::minus_rational(const BigInt& num, const BigInt& den) const {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "rational denominator is zero");
  // (a + b sqrt d)/c - num/den = (a den - num c + b den sqrt d) / (c den)
  return make(a_ * den - num * c_, b_ * den, c_ * den, d_);
}

BigInt QuadraticSurd::floor() const {
  BigInt m;
  if (b_ == 0) {
    m = floor_div(a_, c_);
  } else {
    // b sqrt(d) lies strictly between two consecutive integers around +-isqrt(b^2 d).
    const BigInt s = isqrt(b_ * b_ * d_);
    m = b_ > 0 ? floor_div(a_ + s, c_) : floor_div(a_ - s - 1, c_);
  }
  // At most two corrections; with the bound above neither loop should run.
  for (int i = 0; i < 2 && compare_rational(*this, m, 1) == std::strong_ordering::less; ++i) --m;
  for (int i = 0; i < 2 && compare_rational(*this, m + 1, 1) != std::strong_ordering::less; ++i) ++m;
  return m;
}

QuadraticSurd QuadraticSurd::frac() const { return *this - floor(); }

std::string QuadraticSurd::to_string() const {
  if (b_ == 0) return c_ == 1 ? a_.str() : a_.str() + "/" + c_.str();
  std::string s = "(" + a_.str() + (b_ < 0 ? "-" : "+") + BigInt(abs(b_)).str() + "*sqrt(" + d_.str() + "))";
  if (c_ != 1) s += "/" + c_.str();
  return s;
}

std::strong_ordering compare(const QuadraticSurd& x, const QuadraticSurd& y) {
  // x - y = [(a1 c2 - a2 c1) + b1 c2 sqrt d1 - b2 c1 sqrt d2] / (c1 c2), c1 c2 > 0.
  const BigInt A = x.a() * y.c() - y.a() * x.c();
  const BigInt B = x.b() * y.c();
  const BigInt C = -(y.b() * x.c());
  return to_ordering(sign_two_roots(A, B, x.d(), C, y.d()));
}

std::strong_ordering compare_rational(const QuadraticSurd& x, const BigInt& num, const BigInt& den) {
  // x - num/den has the sign of (a den - num c) + b den sqrt d, for den > 0.
  return to_ordering(sign_with_root(x.a() * den - num * x.c(), x.b() * den, x.d()));
}

const BigInt& CFExpansionPeriodic::coefficient(std::size_t k) const {
  if (k < preperiod.size()) return preperiod[k];
  return period[(k - preperiod.size()) % period.size()];
}

namespace {

struct State {
  BigInt p, q;
  bool operator==(const State&) const = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const {
    return hash_value(s.p) * 31 + hash_value(s.q);
  }
};

} // namespace

CFExpansionPeriodic cf_expansion(const QuadraticSurd& x, std::size_t max_terms) {
  if (x.is_rational()) throw Error(ErrorCode::RationalInput, x.to_string() + " is rational");

  // Rewrite as (P + sqrt(D)) / Q with Q | D - P^2.
  const int sb = sign(x.b());
  BigInt D = x.b() * x.b() * x.d();
  BigInt P = sb * x.a();
  BigInt Q = sb * x.c();
  if (floor_mod(D - P * P, abs(Q)) != 0) {
    const BigInt aq = abs(Q);
    P *= aq;
    D *= Q * Q;
    Q *= aq;
  }
  const BigInt s = isqrt(D);

  std::vector<BigInt> coeffs;
  std::unordered_map<State, std::size_t, StateHash> seen;
  for (std::size_t k = 0; k <= max_terms; ++k) {
    State st{P, Q};
    if (auto it = seen.find(st); it != seen.end()) {
      const std::size_t start = it->second;
      CFExpansionPeriodic out;
      if (start == 0) {
        out.preperiod.push_back(coeffs[0]);
        out.period.assign(coeffs.begin() + 1, coeffs.end());
        out.period.push_back(coeffs[0]);
      } else {
        out.preperiod.assign(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(start));
        out.period.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(start), coeffs.end());
      }
      return out;
    }
    seen.emplace(std::move(st), k);

    BigInt a = Q > 0 ? floor_div(P + s, Q) : floor_div(P + s + 1, Q);
    coeffs.push_back(a);
    BigInt next_p = a * Q - P;
    BigInt num = D - next_p * next_p;
    BigInt next_q, rem;
    boost::multiprecision::divide_qr(num, Q, next_q, rem);
    if (rem != 0) throw Error(ErrorCode::InvariantViolation, "non-integral surd state");
    P = std::move(next_p);
    Q = std::move(next_q);
  }
  throw Error(ErrorCode::PeriodNotFound,
              "no period within " + std::to_string(max_terms) + " terms for " + x.to_string());
}

namespace {

class SurdParser {
public:
  explicit SurdParser(std::string_view text) : text_(text) {}

  QuadraticSurd parse() {
    skip_ws();
    const int outer_sign = take_sign();
    skip_ws();
    QuadraticSurd value = QuadraticSurd::rational(0);
    if (peek() == '(') {
      ++pos_;
      value = parse_sum();
      expect(')');
    } else {
      value = parse_sum();
    }
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      const std::size_t at = pos_;
      BigInt den = parse_int();
      if (den == 0) throw ParseError(at, "zero denominator");
      value = QuadraticSurd::make(value.a(), value.b(), value.c() * den, value.d());
    }
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
    return outer_sign < 0 ? -value : value;
  }

private:
  QuadraticSurd parse_sum() {
    BigInt a = 0, b = 0;
    std::optional<BigInt> radicand;
    bool first = true;
    for (;;) {
      skip_ws();
      int sgn = 1;
      if (!first) {
        if (peek() != '+' && peek() != '-') break;
        sgn = take_sign();
      } else {
        sgn = take_sign();
      }
      first = false;
      skip_ws();
      const std::size_t term_at = pos_;
      BigInt coeff = 1;
      bool have_int = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = parse_int();
        have_int = true;
        skip_ws();
        if (peek() == '*') {
          ++pos_;
          skip_ws();
        } else {
          a += sgn * coeff;
          continue;
        }
      }
      if (!match("sqrt")) throw ParseError(pos_, have_int ? "expected sqrt after '*'" : "expected integer or sqrt");
      expect('(');
      const std::size_t rad_at = pos_;
      BigInt d = parse_int();
      expect(')');
      if (radicand && *radicand != d) throw ParseError(rad_at, "mixed radicands are not supported");
      if (d < 0) throw ParseError(rad_at, "negative radicand");
      radicand = d;
      b += sgn * coeff;
      (void)term_at;
    }
    return QuadraticSurd::make(a, b, 1, radicand.value_or(0));
  }

  BigInt parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(start, "expected integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  int take_sign() {
    skip_ws();
    int s = 1;
    while (peek() == '+' || peek() == '-') {
      if (peek() == '-') s = -s;
      ++pos_;
      skip_ws();
    }
    return s;
  }

  bool match(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char ch) {
    skip_ws();
    if (peek() != ch) throw ParseError(pos_, std::string("expected '") + ch + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

QuadraticSurd parse_surd(std::string_view text) { return SurdParser(text).parse(); }

} // namespace kronperm
