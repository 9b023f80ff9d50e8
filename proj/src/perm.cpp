#include "kronperm/perm.hpp"

#include "kronperm/error.hpp"
#include "kronperm/simd/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace kronperm {

std::string_view to_string(Direction d) { return d == Direction::Sigma ? "sigma" : "pi"; }
std::string_view to_string(Builder b) { return b == Builder::Modular ? "modular" : "exact"; }

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::from_values(Direction direction, std::vector<std::uint64_t> values) {
  const std::size_t n = values.size();
  std::vector<bool> seen(n, false);
  for (std::uint64_t v : values) {
    if (v < 1 || v > n || seen[v - 1])
      throw Error(ErrorCode::InvalidArgument, "not a bijection on {1.." + std::to_string(n) + "}");
    seen[v - 1] = true;
  }
  return Permutation(direction, std::move(values));
}

Permutation Permutation::identity(std::size_t n, Direction direction) {
  std::vector<std::uint64_t> v(n);
  std::iota(v.begin(), v.end(), std::uint64_t{1});
  return Permutation(direction, std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint64_t> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) inv[values_[i] - 1] = i + 1;
  return Permutation(direction_ == Direction::Pi ? Direction::Sigma : Direction::Pi, std::move(inv));
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (inner.size() != size()) throw Error(ErrorCode::InvalidArgument, "composing permutations of different sizes");
  std::vector<std::uint64_t> out(size());
  simd::compose(values_, inner.values_, out);
  return Permutation(direction_, std::move(out));
}

Permutation Permutation::power(unsigned exponent) const {
  Permutation result = identity(size(), direction_);
  Permutation base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = base.compose(result);
    exponent >>= 1u;
    if (exponent > 0) base = base.compose(base);
  }
  return result;
}

bool Permutation::is_identity() const { return fixed_point_count() == size(); }

std::size_t Permutation::fixed_point_count() const { return simd::count_fixed(values_); }

bool Permutation::same_map(const Permutation& other) const {
  return size() == other.size() && simd::count_mismatch(values_, other.values_) == 0;
}

// ---------------------------------------------------------------------------
// CycleSignature

std::uint64_t CycleSignature::size() const {
  std::uint64_t n = 0;
  for (const auto& [len, count] : length_multiset) n += len * count;
  return n;
}

std::uint64_t CycleSignature::cycle_count_of_length(std::uint64_t len) const {
  const auto it = length_multiset.find(len);
  return it == length_multiset.end() ? 0 : it->second;
}

std::uint64_t CycleSignature::longest() const { return length_multiset.empty() ? 0 : length_multiset.rbegin()->first; }

bool CycleSignature::has_repeated_length() const {
  return std::any_of(length_multiset.begin(), length_multiset.end(), [](const auto& kv) { return kv.second > 1; });
}

CycleSignature cycle_decompose(const Permutation& perm) {
  CycleSignature sig;
  const std::size_t n = perm.size();
  std::vector<bool> visited(n, false);
  for (std::uint64_t start = 1; start <= n; ++start) {
    if (visited[start - 1]) continue;
    std::vector<std::uint64_t> cycle;
    for (std::uint64_t k = start; !visited[k - 1]; k = perm(k)) {
      visited[k - 1] = true;
      cycle.push_back(k);
    }
    ++sig.length_multiset[cycle.size()];
    if (cycle.size() == 1) sig.fixed_points.push_back(start);
    sig.cycles.push_back(std::move(cycle));
  }
  return sig;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

void check_size(std::uint64_t n, const BuildOptions& options) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "point count must be >= 1");
  if (n >= kMaxPoints || n > options.size_limit)
    throw Error(ErrorCode::SizeLimit, std::to_string(n) + " points exceeds the size limit " +
                                          std::to_string(std::min(options.size_limit, kMaxPoints - 1)));
}

} // namespace

Permutation build_pi_exact(const CFStream& alpha, std::uint64_t n, const BuildOptions& options) {
  check_size(n, options);
  if (alpha.surd() && alpha.surd()->is_rational())
    throw Error(ErrorCode::RationalAlpha, alpha.label() + " is rational");
  if (n == 1) return Permutation::identity(1);

  const AlphaEvaluator eval(alpha, options.precision_budget);
  std::vector<BigInt> floors(n + 1);
  for (std::uint64_t k = 1; k <= n; ++k) floors[k] = eval.floor_affine(BigInt(k));

  // {i alpha} < {j alpha}  <=>  (i - j) alpha < f_i - f_j
  const auto less = [&](std::uint64_t i, std::uint64_t j) {
    if (i == j) return false;
    BigInt rhs = floors[i] - floors[j];
    std::strong_ordering ord = std::strong_ordering::equal;
    bool result = false;
    if (i > j) {
      ord = eval.compare(rhs, BigInt(i - j));
      result = ord == std::strong_ordering::less;
    } else {
      ord = eval.compare(-rhs, BigInt(j - i));
      result = ord == std::strong_ordering::greater;
    }
    if (ord == std::strong_ordering::equal)
      throw Error(ErrorCode::RationalAlpha, "x_" + std::to_string(i) + " == x_" + std::to_string(j));
    return result;
  };

  std::vector<std::uint64_t> order(n);
  std::iota(order.begin(), order.end(), std::uint64_t{1});
  std::sort(order.begin(), order.end(), less);
  std::vector<std::uint64_t> ranks(n);
  for (std::uint64_t r = 0; r < n; ++r) ranks[order[r] - 1] = r + 1;
  return Permutation::from_values(Direction::Pi, std::move(ranks));
}

Permutation build_pi_modular(const Convergent& conv, const BuildOptions& options) {
  if (conv.q < 1) throw Error(ErrorCode::InvalidArgument, "convergent denominator must be >= 1");
  if (gcd(abs(conv.p), conv.q) != 1)
    throw Error(ErrorCode::NotCoprime, "gcd(" + conv.p.str() + ", " + conv.q.str() + ") != 1");
  if (!fits_u64(conv.q)) throw Error(ErrorCode::SizeLimit, conv.q.str() + " points exceeds the size limit");
  const auto q = conv.q.convert_to<std::uint64_t>();
  check_size(q, options);
  const auto p = floor_mod(conv.p, conv.q).convert_to<std::uint64_t>();
  const std::uint64_t c = conv.side == Side::Above ? 1 % q : 0;

  std::vector<std::uint64_t> values(q);
  simd::fill_affine_mod(p, c, q, values);
  return Permutation::from_values(Direction::Pi, std::move(values));
}

std::optional<Convergent> convergent_with_denominator(const AlphaEvaluator& alpha, std::uint64_t n) {
  const BigInt target(n);
  try {
    for (std::size_t k = 0;; ++k) {
      Convergent c = alpha.convergent(k);
      if (c.q == target) return c;
      if (c.q > target) return std::nullopt;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::StreamExhausted || e.code() == ErrorCode::PrecisionBudgetExceeded)
      return std::nullopt;
    throw;
  }
}

SignatureResult signature_of(const CFStream& alpha, std::uint64_t n, const BuildOptions& options) {
  check_size(n, options);
  const AlphaEvaluator eval(alpha, options.precision_budget);
  std::optional<Convergent> conv = convergent_with_denominator(eval, n);
  Permutation pi = conv ? build_pi_modular(*conv, options) : build_pi_exact(alpha, n, options);
  Permutation sigma = pi.inverse();
  CycleSignature sig = cycle_decompose(sigma);
  if (cycle_decompose(pi).length_multiset != sig.length_multiset)
    throw Error(ErrorCode::InvariantViolation, "pi and sigma cycle types differ");
  return SignatureResult{conv ? Builder::Modular : Builder::Exact, std::move(pi), std::move(sigma), std::move(sig),
                         std::move(conv)};
}

ExchangeCertificate exchange_check(const CFStream& alpha, const Convergent& conv, const BuildOptions& options) {
  const AlphaEvaluator eval(alpha, options.precision_budget);
  const Convergent own = eval.convergent(conv.index);
  if (own.q != conv.q || floor_mod(own.p - conv.p, conv.q) != 0)
    throw Error(ErrorCode::InvalidArgument,
                conv.p.str() + "/" + conv.q.str() + " is not convergent " + std::to_string(conv.index) + " of " +
                    alpha.label());
  if (!fits_u64(conv.q)) throw Error(ErrorCode::SizeLimit, conv.q.str() + " points exceeds the size limit");

  const Permutation exact = build_pi_exact(alpha, conv.q.convert_to<std::uint64_t>(), options);
  const Permutation modular = build_pi_modular(conv, options);

  ExchangeCertificate cert;
  cert.convergent = conv;
  cert.min_gap = Rational(BigInt(1), conv.q);
  // |alpha - p_n/q_n| < 1/(q_n q_{n+1}); fall back to 1/(q_n q_{n-1}) at the end of a finite stream.
  try {
    cert.shift_bound = Rational(BigInt(1), eval.convergent(conv.index + 1).q);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::StreamExhausted) throw;
    cert.shift_bound = conv.index == 0 ? Rational(1) : Rational(BigInt(1), eval.convergent(conv.index - 1).q);
  }
  cert.separated = cert.shift_bound < cert.min_gap / 2;
  cert.mismatches = simd::count_mismatch(exact.values(), modular.values());
  cert.verdict = cert.mismatches == 0;
  return cert;
}

} // namespace kronperm
