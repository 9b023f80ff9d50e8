#pragma once

#include "kronperm/perm.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kronperm {

enum class CaseLabel { Involution, QuarticOneFixed, QuarticTwoFixed, QuarticOneTwoCycle, Other };

std::string_view to_string(CaseLabel label);

/// Outcome of checking one permutation against the involution/quartic dichotomy.
struct StructureVerdict {
  CaseLabel case_label = CaseLabel::Other;
  CycleSignature signature;
  std::vector<std::uint64_t> witnesses; ///< elements violating the prediction; empty iff conformant
  Convergent convergent;
  std::string alpha;

  bool conformant() const noexcept { return case_label != CaseLabel::Other; }
};

/// Classifies pi built from `conv` (det_sign +1: pi^2 = Id; det_sign -1: pi^4 = Id
/// and elements outside 4-cycles solve 2k = p+1 mod q).
StructureVerdict classify_structure(const Permutation& pi, const Convergent& conv);

/// Requires a palindromic prefix (a_1..a_n) of the fractional stream; NotPalindromic otherwise.
StructureVerdict verify_palindrome_proposition(const CFStream& stream, std::size_t n, const BuildOptions& options = {});

enum class PrefixStatus { Verified, PalindromeMissing, SizeCapped };

std::string_view to_string(PrefixStatus status);

struct PrefixOutcome {
  std::size_t index = 0;
  PrefixStatus status = PrefixStatus::Verified;
  BigInt q;
  std::optional<StructureVerdict> verdict;
};

struct QuadraticReport {
  std::string alpha;
  std::size_t period_length = 0;
  std::vector<PrefixOutcome> prefixes;

  /// No prefix that was checked came out Other.
  bool confirmed() const;
};

/// Checks prefixes j = k-1, 2k-1, ... (k the period length of {x}) up to
/// `period_count` periods, skipping prefixes whose denominator exceeds `q_cap`.
QuadraticReport verify_quadratic_theorem(const QuadraticSurd& x, std::size_t period_count,
                                         std::uint64_t q_cap = 100000, const BuildOptions& options = {});

struct FibonacciVerdict {
  unsigned n = 0;
  BigInt fib;
  CaseLabel expected = CaseLabel::Other;
  StructureVerdict verdict;
  bool parity_rule_holds = false; ///< F_n even <=> 3 | n
  bool conformant = false;
};

BigInt fibonacci(unsigned n);

/// Expected case from n alone: even -> Involution, 1,5 mod 6 -> one fixed point,
/// 3 mod 6 -> one 2-cycle (all other cycles of length 4).
CaseLabel fibonacci_expected_case(unsigned n);

FibonacciVerdict verify_fibonacci_theorem(unsigned n, const BuildOptions& options = {});

struct FixedPointFamily {
  std::uint64_t r = 0;
  unsigned m = 0;
  BigInt q_m;
  BigInt generator;
  std::vector<std::uint64_t> predicted;
};

/// Q_1 = 1, Q_2 = r, Q_j = r Q_{j-1} + Q_{j-2}; Q_0 = 0.
BigInt constant_cf_denominator(std::uint64_t r, unsigned j);

/// Multiples of the generator up to Q_m. Throws OddIndex for odd m, SizeLimit if Q_m is too large.
FixedPointFamily predicted_fixed_points(std::uint64_t r, unsigned m, const BuildOptions& options = {});

/// The surd with expansion [0; r, r, r, ...].
QuadraticSurd constant_cf_surd(std::uint64_t r);

struct FixedPointScanRow {
  unsigned m = 0;
  BigInt q_m;
  std::uint64_t generator = 0;
  std::size_t predicted_count = 0;
  std::size_t actual_count = 0;
  bool subset = false; ///< predicted are all fixed points (asserted property)
  bool equal = false;  ///< completeness conjecture (reported only)
};

/// Every even m <= max_m whose Q_m fits within q_cap.
std::vector<FixedPointScanRow> fixed_point_completeness_scan(std::uint64_t r, unsigned max_m,
                                                             std::uint64_t q_cap = 100000,
                                                             const BuildOptions& options = {});

/// (-1)^(n-1) == F_{n-2} F_n - F_{n-1}^2 for n >= 3.
bool cassini_check(unsigned n);

/// k in {1..q} with 2k = p+1 mod q. Throws WrongBranch when det_sign = +1 and
/// InvariantViolation if the set has the wrong size or misses a non-4-cycle element.
std::vector<std::uint64_t> two_candidate_check(const Convergent& conv, const BuildOptions& options = {});

} // namespace kronperm
