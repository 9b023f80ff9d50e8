#include "kronperm/cfkit.hpp"

#include "kronperm/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace kronperm {

std::string_view to_string(Side side) { return side == Side::Above ? "Above" : "Below"; }

void EnsembleConfig::validate() const {
  if (sample_count == 0 || cf_depth == 0 || max_points_per_sample == 0)
    throw Error(ErrorCode::InvalidArgument, "ensemble counts must be >= 1");
}

// ---------------------------------------------------------------------------
// CFStream

namespace {

constexpr std::array<int, 16> kPiCoefficients = {3, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14, 2, 1, 1};

} // namespace

struct CFStream::Impl {
  Kind kind = Kind::Explicit;
  std::string label;
  std::optional<QuadraticSurd> surd;
  std::optional<CFExpansionPeriodic> periodic;
  std::vector<BigInt> list;
  bool zero_lead = false;
};

CFStream CFStream::from_surd(const QuadraticSurd& x, std::size_t max_terms) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Surd;
  impl->label = "surd:" + x.to_string();
  impl->surd = x;
  impl->periodic = cf_expansion(x, max_terms);
  return CFStream(std::move(impl));
}

CFStream CFStream::from_list(std::vector<BigInt> coefficients, std::string label) {
  if (coefficients.empty()) throw Error(ErrorCode::InvalidArgument, "empty coefficient list");
  if (coefficients[0] < 0) throw Error(ErrorCode::InvalidArgument, "a_0 must be >= 0");
  for (std::size_t k = 1; k < coefficients.size(); ++k)
    if (coefficients[k] < 1) throw Error(ErrorCode::InvalidArgument, "a_" + std::to_string(k) + " must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Explicit;
  if (label.empty()) {
    label = "cf:[" + coefficients[0].str();
    for (std::size_t k = 1; k < coefficients.size(); ++k) label += (k == 1 ? ";" : ",") + coefficients[k].str();
    label += "]";
  }
  impl->label = std::move(label);
  impl->list = std::move(coefficients);
  return CFStream(std::move(impl));
}

CFStream CFStream::e_pattern() {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::EPattern;
  impl->label = "named:e";
  return CFStream(std::move(impl));
}

CFStream CFStream::pi_table() {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::PiTable;
  impl->label = "named:pi";
  for (int a : kPiCoefficients) impl->list.emplace_back(a);
  return CFStream(std::move(impl));
}

CFStream CFStream::gauss_kuzmin(const EnsembleConfig& config, std::size_t sample_index) {
  config.validate();
  if (sample_index >= config.sample_count)
    throw Error(ErrorCode::InvalidArgument, "sample index " + std::to_string(sample_index) + " out of range");
  const auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
  const auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(config.seed), hi(config.seed), lo(sample_index), hi(sample_index)};
  std::mt19937_64 engine(seq);

  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::GaussKuzmin;
  impl->label = "gk:" + std::to_string(config.seed) + "/" + std::to_string(sample_index);
  impl->list.reserve(config.cf_depth + 1);
  impl->list.emplace_back(0);
  for (std::size_t k = 0; k < config.cf_depth; ++k) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    impl->list.emplace_back(gauss_kuzmin_quantile(u));
  }
  return CFStream(std::move(impl));
}

CFStream CFStream::fractional() const {
  auto impl = std::make_shared<Impl>(*impl_);
  if (impl->surd) {
    const BigInt m = impl->surd->floor();
    if (m != 0) {
      impl->surd = impl->surd->frac();
      impl->label = "frac(" + impl_->label + ")";
    }
  } else if (coefficient(0) != 0) {
    impl->label = "frac(" + impl_->label + ")";
  }
  impl->zero_lead = true;
  return CFStream(std::move(impl));
}

CFStream::Kind CFStream::kind() const noexcept { return impl_->kind; }
const std::string& CFStream::label() const noexcept { return impl_->label; }
const std::optional<QuadraticSurd>& CFStream::surd() const noexcept { return impl_->surd; }
const CFExpansionPeriodic* CFStream::periodic() const noexcept {
  return impl_->periodic ? &*impl_->periodic : nullptr;
}

std::optional<std::size_t> CFStream::length() const noexcept {
  switch (impl_->kind) {
  case Kind::Surd:
  case Kind::EPattern: return std::nullopt;
  default: return impl_->list.size();
  }
}

bool CFStream::has(std::size_t k) const noexcept {
  const auto len = length();
  return !len || k < *len;
}

BigInt CFStream::coefficient(std::size_t k) const {
  if (k == 0 && impl_->zero_lead) return 0;
  switch (impl_->kind) {
  case Kind::Surd: return impl_->periodic->coefficient(k);
  case Kind::EPattern:
    if (k == 0) return 2;
    if (k % 3 == 2) return BigInt(2 * ((k + 1) / 3));
    return 1;
  default:
    if (k >= impl_->list.size())
      throw Error(ErrorCode::StreamExhausted, impl_->label + " has only " + std::to_string(impl_->list.size()) +
                                                  " coefficients (requested index " + std::to_string(k) + ")");
    return impl_->list[k];
  }
}

// ---------------------------------------------------------------------------
// AlphaEvaluator

AlphaEvaluator::AlphaEvaluator(CFStream stream, std::size_t precision_budget)
    : stream_(std::move(stream)), budget_(precision_budget) {
  if (budget_ == 0) throw Error(ErrorCode::InvalidArgument, "precision budget must be >= 1");
}

bool AlphaEvaluator::extend_to(std::size_t n) const {
  while (p_.size() <= n) {
    const std::size_t k = p_.size();
    if (!within_budget(k))
      throw Error(ErrorCode::PrecisionBudgetExceeded,
                  "needs more than " + std::to_string(budget_) + " terms of " + stream_.label());
    if (!stream_.has(k)) return false;
    const BigInt a = stream_.coefficient(k);
    const BigInt& p1 = k >= 1 ? p_[k - 1] : BigInt(1);
    const BigInt& q1 = k >= 1 ? q_[k - 1] : BigInt(0);
    const BigInt p2 = k >= 2 ? p_[k - 2] : (k == 1 ? BigInt(1) : BigInt(0));
    const BigInt q2 = k >= 2 ? q_[k - 2] : (k == 1 ? BigInt(0) : BigInt(1));
    if (k == 0) {
      p_.push_back(a);
      q_.push_back(1);
    } else {
      p_.push_back(a * p1 + p2);
      q_.push_back(a * q1 + q2);
    }
  }
  return true;
}

namespace {

[[noreturn]] void exhausted(const CFStream& s, std::size_t k) {
  throw Error(ErrorCode::StreamExhausted,
              s.label() + " cannot supply coefficient " + std::to_string(k) + " needed to separate alpha");
}

} // namespace

std::strong_ordering AlphaEvaluator::compare(const BigInt& num, const BigInt& den) const {
  if (den <= 0) throw Error(ErrorCode::InvalidArgument, "comparison denominator must be positive");
  if (const auto& s = stream_.surd()) return compare_rational(*s, num, den);

  // Level m brackets alpha strictly between p_m/q_m and p_{m+1}/q_{m+1};
  // level -1 is the interval (a_0, +inf).
  if (!extend_to(0)) exhausted(stream_, 0);
  {
    const int c0 = sign(num - p_[0] * den);
    if (c0 <= 0) return std::strong_ordering::greater;
  }
  for (std::size_t m = 0;; ++m) {
    if (!extend_to(m + 1)) exhausted(stream_, m + 1);
    const int cm = sign(num * q_[m] - p_[m] * den);
    const int cn = sign(num * q_[m + 1] - p_[m + 1] * den);
    // Endpoint order: p_{m+1}/q_{m+1} > p_m/q_m iff det_{m+1} = +1.
    const bool next_is_upper = p_[m + 1] * q_[m] > p_[m] * q_[m + 1];
    const int c_lo = next_is_upper ? cm : cn;
    const int c_hi = next_is_upper ? cn : cm;
    if (c_lo <= 0) return std::strong_ordering::greater;
    if (c_hi >= 0) return std::strong_ordering::less;
  }
}

BigInt AlphaEvaluator::floor_affine(const BigInt& mult, const Rational& offset) const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (mult == 0) return floor_div(numerator(offset), denominator(offset));
  if (const auto& s = stream_.surd()) {
    return (*s * mult).minus_rational(-numerator(offset), denominator(offset)).floor();
  }

  // Initial guess from a convergent with q > |mult|, then exact corrections.
  const BigInt am = abs(mult);
  std::size_t level = 0;
  if (!extend_to(0)) exhausted(stream_, 0);
  while (q_[level] <= am && stream_.has(level + 1) && within_budget(level + 1)) {
    extend_to(level + 1);
    ++level;
  }
  const Rational guess = Rational(mult * p_[level], q_[level]) + offset;
  BigInt m = floor_div(numerator(guess), denominator(guess));

  // m <= mult*alpha + offset
  const auto below_or_at = [&](const BigInt& cand) {
    const Rational r = (Rational(cand) - offset) / Rational(mult);
    const auto ord = compare(numerator(r), denominator(r));
    if (ord == std::strong_ordering::equal)
      throw Error(ErrorCode::RationalAlpha, stream_.label() + " equals a rational comparand");
    return mult > 0 ? ord == std::strong_ordering::greater : ord == std::strong_ordering::less;
  };
  while (!below_or_at(m)) --m;
  while (below_or_at(m + 1)) ++m;
  return m;
}

Convergent AlphaEvaluator::convergent(std::size_t n) const {
  if (!extend_to(n)) exhausted(stream_, n);
  Convergent c;
  c.index = n;
  c.p = p_[n];
  c.q = q_[n];
  const BigInt det = n == 0 ? -BigInt(1) : p_[n] * q_[n - 1] - p_[n - 1] * q_[n];
  c.det_sign = sign(det);
  const auto ord = compare(c.p, c.q);
  if (ord == std::strong_ordering::equal)
    throw Error(ErrorCode::RationalAlpha, stream_.label() + " equals its convergent " + c.p.str() + "/" + c.q.str());
  c.side = ord == std::strong_ordering::greater ? Side::Above : Side::Below;
  return c;
}

std::pair<Rational, Rational> AlphaEvaluator::bracket(std::size_t n) const {
  if (!extend_to(n + 1)) exhausted(stream_, n + 1);
  Rational a(p_[n], q_[n]);
  Rational b(p_[n + 1], q_[n + 1]);
  if (b < a) std::swap(a, b);
  return {a, b};
}

std::vector<Convergent> convergents(const CFStream& stream, std::size_t upto, std::size_t precision_budget) {
  AlphaEvaluator eval(stream, std::max(precision_budget, upto + 1));
  std::vector<Convergent> out;
  out.reserve(upto + 1);
  for (std::size_t n = 0; n <= upto; ++n) out.push_back(eval.convergent(n));
  return out;
}

int check_determinant_identity(const Convergent& previous, const Convergent& current) {
  if (current.index != previous.index + 1)
    throw Error(ErrorCode::InvalidArgument, "convergents are not consecutive");
  const BigInt det = current.p * previous.q - previous.p * current.q;
  if (abs(det) != 1)
    throw Error(ErrorCode::IdentityViolation, "determinant " + det.str() + " at index " + std::to_string(current.index));
  return sign(det);
}

bool is_palindrome_prefix(const CFStream& stream, std::size_t n) {
  if (stream.coefficient(0) != 0)
    throw Error(ErrorCode::InvalidArgument, stream.label() + " is not a fractional stream (a_0 != 0)");
  if (n > 0) stream.coefficient(n);
  for (std::size_t i = 1, j = n; i < j; ++i, --j)
    if (stream.coefficient(i) != stream.coefficient(j)) return false;
  return true;
}

bool check_palindrome_pq_biconditional(const CFStream& stream, std::size_t n) {
  const bool palindrome = is_palindrome_prefix(stream, n);
  // Recurrence only; no side computation needed.
  BigInt p_prev = 1, q_prev = 0, p = stream.coefficient(0), q = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    const BigInt a = stream.coefficient(k);
    BigInt pn = a * p + p_prev;
    BigInt qn = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(pn);
    q = std::move(qn);
  }
  return palindrome == (p == q_prev);
}

std::vector<HurwitzEntry> hurwitz_scan(const AlphaEvaluator& alpha, std::size_t upto) {
  std::vector<HurwitzEntry> out;
  for (std::size_t n = 0; n <= upto; ++n) {
    const Convergent c = alpha.convergent(n);
    HurwitzEntry e;
    e.index = n;
    e.p = c.p;
    e.q = c.q;
    const Rational t(c.p, c.q);
    const Rational q2 = Rational(c.q * c.q);
    const Rational scale = 5 * q2 * q2; // satisfies <=> scale * err^2 <= 1

    std::optional<bool> exact;
    if (const auto& s = alpha.stream().surd()) {
      QuadraticSurd delta = s->minus_rational(c.p, c.q);
      if (delta < QuadraticSurd::rational(0)) delta = -delta;
      exact = compare(delta, QuadraticSurd::make(0, 1, 5 * c.q * c.q, 5)) != std::strong_ordering::greater;
    }
    for (std::size_t m = n + 1;; ++m) {
      const auto [lo, hi] = alpha.bracket(m);
      const Rational d1 = abs(lo - t);
      const Rational d2 = abs(hi - t);
      e.error_lo = std::min(d1, d2);
      e.error_hi = std::max(d1, d2);
      if (exact) {
        e.satisfies = *exact;
        break;
      }
      if (scale * e.error_hi * e.error_hi <= 1) {
        e.satisfies = true;
        break;
      }
      if (scale * e.error_lo * e.error_lo > 1) {
        e.satisfies = false;
        break;
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

double gauss_kuzmin_probability(std::uint64_t j) {
  if (j == 0) return 0.0;
  const double jd = static_cast<double>(j);
  return std::log1p(1.0 / (jd * (jd + 2.0))) / std::numbers::ln2;
}

std::uint64_t gauss_kuzmin_quantile(double u) {
  // P(a <= j) = 1 - log2(1 + 1/(j+1)); the smallest j with P(a <= j) > u.
  const double y = 1.0 / std::expm1((1.0 - u) * std::numbers::ln2);
  constexpr double kCap = 0x1.0p62;
  if (!(y < kCap)) return static_cast<std::uint64_t>(kCap);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::floor(y)));
}

} // namespace kronperm
