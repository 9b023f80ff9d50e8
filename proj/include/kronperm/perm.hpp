#pragma once

#include "kronperm/bigint.hpp"
#include "kronperm/cfkit.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace kronperm {

/// Largest point count any builder accepts (exclusive).
inline constexpr std::uint64_t kMaxPoints = std::uint64_t{1} << 62;

/// Sigma lists indices in increasing order of x_k; Pi = Sigma^-1 maps k to the rank of x_k.
enum class Direction { Sigma, Pi };

std::string_view to_string(Direction d);

/// Bijection on {1..n}, stored 1-based.
class Permutation {
public:
  /// Throws InvalidArgument unless `values` is a bijection on {1..n}.
  static Permutation from_values(Direction direction, std::vector<std::uint64_t> values);
  static Permutation identity(std::size_t n, Direction direction = Direction::Pi);

  Direction direction() const noexcept { return direction_; }
  std::size_t size() const noexcept { return values_.size(); }
  /// Image of k, 1-based.
  std::uint64_t operator()(std::uint64_t k) const { return values_[k - 1]; }
  std::span<const std::uint64_t> values() const noexcept { return values_; }

  /// Inverse with the direction tag flipped.
  Permutation inverse() const;
  /// (this o inner)(k) = this(inner(k)); keeps this direction.
  Permutation compose(const Permutation& inner) const;
  Permutation power(unsigned exponent) const;
  bool is_identity() const;
  std::size_t fixed_point_count() const;

  /// Elementwise equality of the maps, ignoring direction.
  bool same_map(const Permutation& other) const;

private:
  Permutation(Direction d, std::vector<std::uint64_t> v) : direction_(d), values_(std::move(v)) {}

  Direction direction_;
  std::vector<std::uint64_t> values_;
};

struct CycleSignature {
  /// Canonical: each cycle starts at its smallest element; cycles sorted by start.
  std::vector<std::vector<std::uint64_t>> cycles;
  std::map<std::uint64_t, std::uint64_t> length_multiset;
  std::vector<std::uint64_t> fixed_points;

  std::uint64_t size() const;
  std::uint64_t cycle_count_of_length(std::uint64_t len) const;
  std::uint64_t longest() const;
  bool has_repeated_length() const;
};

CycleSignature cycle_decompose(const Permutation& perm);

struct BuildOptions {
  std::size_t precision_budget = kDefaultPrecisionBudget;
  std::uint64_t size_limit = kMaxPoints - 1;
};

/// pi(k) = rank of {k alpha} among {alpha}, ..., {n alpha}, computed exactly.
/// Throws RationalAlpha, SizeLimit, PrecisionBudgetExceeded, StreamExhausted.
Permutation build_pi_exact(const CFStream& alpha, std::uint64_t n, const BuildOptions& options = {});

/// pi(k) = rep(p k + c mod q) on q points, c = 1 iff conv.side is Above and rep(0) = q.
/// Throws NotCoprime, SizeLimit.
Permutation build_pi_modular(const Convergent& conv, const BuildOptions& options = {});

enum class Builder { Modular, Exact };

std::string_view to_string(Builder b);

struct SignatureResult {
  Builder builder;
  Permutation pi;
  Permutation sigma;
  CycleSignature signature; ///< of sigma
  std::optional<Convergent> convergent; ///< set for the modular builder
};

/// Builds pi (modular builder when n is a convergent denominator of alpha,
/// exact otherwise) and decomposes sigma = pi^-1.
SignatureResult signature_of(const CFStream& alpha, std::uint64_t n, const BuildOptions& options = {});

/// Convergent of alpha whose denominator equals n, if any.
std::optional<Convergent> convergent_with_denominator(const AlphaEvaluator& alpha, std::uint64_t n);

struct ExchangeCertificate {
  Convergent convergent;
  Rational shift_bound; ///< q |alpha - p/q| < shift_bound
  Rational min_gap;     ///< 1/q
  bool separated = false; ///< shift_bound < min_gap / 2
  bool verdict = false;   ///< exact and modular builders agree elementwise
  std::size_t mismatches = 0;
};

ExchangeCertificate exchange_check(const CFStream& alpha, const Convergent& conv, const BuildOptions& options = {});

} // namespace kronperm
