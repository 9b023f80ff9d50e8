#pragma once

#include "kronperm/bigint.hpp"
#include "kronperm/surd.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kronperm {

inline constexpr std::size_t kDefaultPrecisionBudget = 10000;

/// Sign of alpha - p/q. Above means alpha > p/q.
enum class Side { Below, Above };

std::string_view to_string(Side side);

struct Convergent {
  std::size_t index = 0;
  BigInt p;
  BigInt q;
  Side side = Side::Above;
  int det_sign = -1; ///< p_n q_{n-1} - p_{n-1} q_n
};

struct EnsembleConfig {
  std::uint64_t seed = 1;
  std::size_t sample_count = 1;
  std::size_t cf_depth = 64;
  std::size_t max_points_per_sample = 100000;

  /// Throws InvalidArgument when a count is zero.
  void validate() const;
};

/// Continued-fraction coefficients a_0, a_1, ... of some alpha, with provenance.
///
/// Value type; copies share the immutable coefficient source.
class CFStream {
public:
  enum class Kind { Surd, Explicit, EPattern, PiTable, GaussKuzmin };

  static CFStream from_surd(const QuadraticSurd& x, std::size_t max_terms = 100000);
  static CFStream from_list(std::vector<BigInt> coefficients, std::string label = {});
  static CFStream e_pattern();
  static CFStream pi_table();
  /// Seeded Gauss-Kuzmin sample: a_0 = 0, then config.cf_depth i.i.d. draws.
  static CFStream gauss_kuzmin(const EnsembleConfig& config, std::size_t sample_index);

  /// Same stream with a_0 replaced by 0 (alpha mod 1).
  CFStream fractional() const;

  Kind kind() const noexcept;
  const std::string& label() const noexcept;
  /// The exact value when the stream is surd-derived.
  const std::optional<QuadraticSurd>& surd() const noexcept;
  /// Periodic structure when surd-derived.
  const CFExpansionPeriodic* periodic() const noexcept;

  /// Number of addressable coefficients; nullopt for unbounded streams.
  std::optional<std::size_t> length() const noexcept;
  bool has(std::size_t k) const noexcept;
  /// Throws StreamExhausted past the end of a finite stream.
  BigInt coefficient(std::size_t k) const;

private:
  struct Impl;
  explicit CFStream(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// alpha as named on the command line, together with its coefficient stream.
struct AlphaSpec {
  std::string text;
  CFStream stream;
};

/// Grammar: `surd:(a+b*sqrt(D))/c`, `named:phi|sqrt2|e|pi`, `cf:[a0;a1,a2,...]`,
/// `gk:<seed>/<sample>`. Throws ParseError.
AlphaSpec parse_alpha(std::string_view text);

/// Certified evaluator: every question about alpha is answered exactly.
///
/// Surd sources use surd arithmetic. Other sources bracket alpha strictly
/// between consecutive convergents and take more terms until the bracket
/// separates the comparands, up to `precision_budget` terms. The convergent
/// cache is mutable, so an evaluator must not be shared across threads.
class AlphaEvaluator {
public:
  explicit AlphaEvaluator(CFStream stream, std::size_t precision_budget = kDefaultPrecisionBudget);

  const CFStream& stream() const noexcept { return stream_; }

  /// alpha <=> num/den for den > 0. Never equal for irrational alpha; an
  /// equal result means alpha is rational.
  std::strong_ordering compare(const BigInt& num, const BigInt& den) const;

  /// floor(mult * alpha + offset).
  BigInt floor_affine(const BigInt& mult, const Rational& offset = Rational(0)) const;

  /// Convergent n with side and det_sign. Throws StreamExhausted.
  Convergent convergent(std::size_t n) const;

  /// Open interval containing alpha from convergents n and n+1.
  /// Throws StreamExhausted / PrecisionBudgetExceeded.
  std::pair<Rational, Rational> bracket(std::size_t n) const;

  /// Coefficients consumed so far.
  std::size_t terms_used() const noexcept { return p_.size(); }

private:
  // Ensures convergents 0..n are cached; false if the stream ends first.
  bool extend_to(std::size_t n) const;
  bool within_budget(std::size_t n) const noexcept { return n < budget_; }

  CFStream stream_;
  std::size_t budget_;
  mutable std::vector<BigInt> p_;
  mutable std::vector<BigInt> q_;
};

/// Convergents 0..upto with exact sides (seeds p_{-1}=1, q_{-1}=0).
std::vector<Convergent> convergents(const CFStream& stream, std::size_t upto,
                                    std::size_t precision_budget = kDefaultPrecisionBudget);

/// p_n q_{n-1} - p_{n-1} q_n for consecutive convergents; IdentityViolation unless +-1.
int check_determinant_identity(const Convergent& previous, const Convergent& current);

/// (a_1, ..., a_n) reads the same reversed. Requires a_0 == 0 (InvalidArgument).
bool is_palindrome_prefix(const CFStream& stream, std::size_t n);

/// Palindromic (a_1..a_n) <=> p_n == q_{n-1}, on a fractional stream.
bool check_palindrome_pq_biconditional(const CFStream& stream, std::size_t n);

struct HurwitzEntry {
  std::size_t index = 0;
  BigInt p, q;
  bool satisfies = false; ///< |alpha - p/q| <= 1/(sqrt5 q^2)
  Rational error_lo;      ///< strict bounds on |alpha - p/q|
  Rational error_hi;
};

std::vector<HurwitzEntry> hurwitz_scan(const AlphaEvaluator& alpha, std::size_t upto);

/// P(a = j) = log2(1 + 1/(j(j+2))).
double gauss_kuzmin_probability(std::uint64_t j);
/// Inverse CDF of the Gauss-Kuzmin law at u in [0, 1).
std::uint64_t gauss_kuzmin_quantile(double u);

} // namespace kronperm
