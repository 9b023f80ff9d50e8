#include "kronperm/theorems.hpp"

#include "kronperm/error.hpp"

#include <algorithm>

namespace kronperm {

std::string_view to_string(CaseLabel label) {
  switch (label) {
  case CaseLabel::Involution: return "Involution";
  case CaseLabel::QuarticOneFixed: return "QuarticOneFixed";
  case CaseLabel::QuarticTwoFixed: return "QuarticTwoFixed";
  case CaseLabel::QuarticOneTwoCycle: return "QuarticOneTwoCycle";
  case CaseLabel::Other: return "Other";
  }
  return "Other";
}

std::string_view to_string(PrefixStatus status) {
  switch (status) {
  case PrefixStatus::Verified: return "verified";
  case PrefixStatus::PalindromeMissing: return "palindrome-missing";
  case PrefixStatus::SizeCapped: return "size-capped";
  }
  return "verified";
}

namespace {

std::uint64_t residue_u64(const BigInt& x, std::uint64_t q) { return floor_mod(x, BigInt(q)).convert_to<std::uint64_t>(); }

} // namespace

StructureVerdict classify_structure(const Permutation& pi, const Convergent& conv) {
  StructureVerdict v;
  v.convergent = conv;
  v.signature = cycle_decompose(pi.inverse());
  const std::uint64_t q = pi.size();

  if (conv.det_sign > 0) {
    const Permutation sq = pi.power(2);
    for (std::uint64_t k = 1; k <= q; ++k)
      if (sq(k) != k) v.witnesses.push_back(k);
    v.case_label = v.witnesses.empty() ? CaseLabel::Involution : CaseLabel::Other;
    return v;
  }

  const Permutation p4 = pi.power(4);
  const std::uint64_t target = (residue_u64(conv.p, q) + 1) % q;
  std::vector<std::uint64_t> short_cycle;
  for (const auto& cycle : v.signature.cycles) {
    if (cycle.size() >= 4) continue;
    for (std::uint64_t k : cycle) short_cycle.push_back(k);
  }
  for (std::uint64_t k = 1; k <= q; ++k)
    if (p4(k) != k) v.witnesses.push_back(k);
  for (std::uint64_t k : short_cycle)
    if ((2 * k) % q != target) v.witnesses.push_back(k);
  std::sort(v.witnesses.begin(), v.witnesses.end());
  v.witnesses.erase(std::unique(v.witnesses.begin(), v.witnesses.end()), v.witnesses.end());
  if (!v.witnesses.empty()) {
    v.case_label = CaseLabel::Other;
    return v;
  }

  const std::uint64_t fixed = v.signature.cycle_count_of_length(1);
  const std::uint64_t two = v.signature.cycle_count_of_length(2);
  if (fixed == 1 && two == 0) {
    v.case_label = CaseLabel::QuarticOneFixed;
  } else if (fixed == 2 && two == 0) {
    v.case_label = CaseLabel::QuarticTwoFixed;
  } else if (fixed == 0 && two == 1) {
    v.case_label = CaseLabel::QuarticOneTwoCycle;
  } else {
    v.case_label = CaseLabel::Other;
    v.witnesses = short_cycle;
    std::sort(v.witnesses.begin(), v.witnesses.end());
    if (v.witnesses.empty()) v.witnesses.push_back(q);
  }
  return v;
}

StructureVerdict verify_palindrome_proposition(const CFStream& stream, std::size_t n, const BuildOptions& options) {
  const CFStream frac = stream.fractional();
  if (!is_palindrome_prefix(frac, n))
    throw Error(ErrorCode::NotPalindromic, "prefix of length " + std::to_string(n) + " of " + stream.label());
  const AlphaEvaluator eval(frac, options.precision_budget);
  const Convergent conv = eval.convergent(n);
  StructureVerdict v = classify_structure(build_pi_modular(conv, options), conv);
  v.alpha = frac.label();
  return v;
}

bool QuadraticReport::confirmed() const {
  return std::none_of(prefixes.begin(), prefixes.end(),
                      [](const PrefixOutcome& p) { return p.verdict && !p.verdict->conformant(); });
}

QuadraticReport verify_quadratic_theorem(const QuadraticSurd& x, std::size_t period_count, std::uint64_t q_cap,
                                         const BuildOptions& options) {
  if (x.is_rational()) throw Error(ErrorCode::RationalInput, x.to_string() + " is rational");
  const CFStream frac = CFStream::from_surd(x).fractional();
  const AlphaEvaluator eval(frac, options.precision_budget);

  QuadraticReport report;
  report.alpha = frac.label();
  report.period_length = frac.periodic()->period_length();
  const std::size_t k = report.period_length;
  for (std::size_t block = 1; block <= period_count; ++block) {
    PrefixOutcome out;
    out.index = block * k - 1;
    const Convergent conv = eval.convergent(out.index);
    out.q = conv.q;
    if (conv.q > q_cap || conv.q > options.size_limit) {
      out.status = PrefixStatus::SizeCapped;
    } else if (!is_palindrome_prefix(frac, out.index)) {
      out.status = PrefixStatus::PalindromeMissing;
    } else {
      StructureVerdict v = classify_structure(build_pi_modular(conv, options), conv);
      v.alpha = frac.label();
      out.verdict = std::move(v);
    }
    report.prefixes.push_back(std::move(out));
  }
  return report;
}

BigInt fibonacci(unsigned n) {
  BigInt a = 0, b = 1;
  for (unsigned i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

CaseLabel fibonacci_expected_case(unsigned n) {
  if (n % 2 == 0) return CaseLabel::Involution;
  return n % 6 == 3 ? CaseLabel::QuarticOneTwoCycle : CaseLabel::QuarticOneFixed;
}

namespace {

bool matches_fibonacci_shape(const CycleSignature& sig, CaseLabel expected) {
  const auto only = [&](std::initializer_list<std::uint64_t> allowed) {
    return std::all_of(sig.length_multiset.begin(), sig.length_multiset.end(), [&](const auto& kv) {
      return std::find(allowed.begin(), allowed.end(), kv.first) != allowed.end();
    });
  };
  switch (expected) {
  case CaseLabel::Involution: return only({1, 2});
  case CaseLabel::QuarticOneFixed: return only({1, 4}) && sig.cycle_count_of_length(1) == 1;
  case CaseLabel::QuarticOneTwoCycle:
    return only({2, 4}) && sig.cycle_count_of_length(2) == 1;
  default: return false;
  }
}

} // namespace

FibonacciVerdict verify_fibonacci_theorem(unsigned n, const BuildOptions& options) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "Fibonacci index must be >= 1");
  FibonacciVerdict out;
  out.n = n;
  out.fib = fibonacci(n);
  if (out.fib > options.size_limit)
    throw Error(ErrorCode::SizeLimit, "F_" + std::to_string(n) + " = " + out.fib.str() + " exceeds the size limit");
  out.expected = fibonacci_expected_case(n);

  // {phi} = [0; 1, 1, ...] has q_j = F_{j+1}.
  const CFStream frac_phi = CFStream::from_surd(QuadraticSurd::make(-1, 1, 2, 5));
  const AlphaEvaluator eval(frac_phi, options.precision_budget);
  const Convergent conv = eval.convergent(n - 1);
  if (conv.q != out.fib) throw Error(ErrorCode::InvariantViolation, "convergent denominator is not F_n");

  out.verdict = classify_structure(build_pi_modular(conv, options), conv);
  out.verdict.alpha = frac_phi.label();
  out.parity_rule_holds = (out.fib % 2 == 0) == (n % 3 == 0);
  out.conformant = out.verdict.case_label == out.expected &&
                   matches_fibonacci_shape(out.verdict.signature, out.expected) && out.parity_rule_holds;
  return out;
}

BigInt constant_cf_denominator(std::uint64_t r, unsigned j) {
  if (j == 0) return 0;
  BigInt prev = 0, cur = 1; // Q_0, Q_1
  for (unsigned i = 1; i < j; ++i) {
    BigInt next = BigInt(r) * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

QuadraticSurd constant_cf_surd(std::uint64_t r) {
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "constant coefficient must be >= 1");
  const BigInt rb(r);
  return QuadraticSurd::make(-rb, 1, 2, rb * rb + 4);
}

FixedPointFamily predicted_fixed_points(std::uint64_t r, unsigned m, const BuildOptions& options) {
  if (m % 2 != 0) throw Error(ErrorCode::OddIndex, "index " + std::to_string(m) + " is odd");
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "index must be >= 2");
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "constant coefficient must be >= 1");
  FixedPointFamily fam;
  fam.r = r;
  fam.m = m;
  fam.q_m = constant_cf_denominator(r, m);
  if (fam.q_m > options.size_limit)
    throw Error(ErrorCode::SizeLimit, "Q_" + std::to_string(m) + " = " + fam.q_m.str() + " exceeds the size limit");
  const unsigned half = m / 2;
  if (half % 2 == 1) {
    fam.generator = constant_cf_denominator(r, half);
  } else if (r % 2 == 0) {
    fam.generator = BigInt(r / 2) * constant_cf_denominator(r, half) + constant_cf_denominator(r, half - 1);
  } else {
    fam.generator = constant_cf_denominator(r, half + 1) + constant_cf_denominator(r, half - 1);
  }
  const auto g = fam.generator.convert_to<std::uint64_t>();
  const auto qm = fam.q_m.convert_to<std::uint64_t>();
  for (std::uint64_t k = g; k <= qm; k += g) fam.predicted.push_back(k);
  return fam;
}

std::vector<FixedPointScanRow> fixed_point_completeness_scan(std::uint64_t r, unsigned max_m, std::uint64_t q_cap,
                                                             const BuildOptions& options) {
  const CFStream stream = CFStream::from_surd(constant_cf_surd(r));
  const AlphaEvaluator eval(stream, options.precision_budget);
  std::vector<FixedPointScanRow> rows;
  for (unsigned m = 2; m <= max_m; m += 2) {
    if (constant_cf_denominator(r, m) > q_cap) break;
    const FixedPointFamily fam = predicted_fixed_points(r, m, options);
    const Convergent conv = eval.convergent(m - 1);
    if (conv.q != fam.q_m) throw Error(ErrorCode::InvariantViolation, "Q_m does not match convergent denominator");
    const Permutation pi = build_pi_modular(conv, options);

    FixedPointScanRow row;
    row.m = m;
    row.q_m = fam.q_m;
    row.generator = fam.generator.convert_to<std::uint64_t>();
    row.predicted_count = fam.predicted.size();
    row.actual_count = pi.fixed_point_count();
    row.subset = std::all_of(fam.predicted.begin(), fam.predicted.end(), [&](std::uint64_t k) { return pi(k) == k; });
    row.equal = row.subset && row.actual_count == row.predicted_count;
    rows.push_back(row);
  }
  return rows;
}

bool cassini_check(unsigned n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "Cassini check needs n >= 3");
  const BigInt lhs = fibonacci(n - 2) * fibonacci(n) - fibonacci(n - 1) * fibonacci(n - 1);
  return lhs == ((n - 1) % 2 == 0 ? 1 : -1);
}

std::vector<std::uint64_t> two_candidate_check(const Convergent& conv, const BuildOptions& options) {
  if (conv.det_sign > 0) throw Error(ErrorCode::WrongBranch, "two-candidate rule applies to det_sign = -1 only");
  const Permutation pi = build_pi_modular(conv, options);
  const std::uint64_t q = pi.size();
  const std::uint64_t target = (residue_u64(conv.p, q) + 1) % q;

  std::vector<std::uint64_t> candidates;
  if (q == 1) {
    candidates.push_back(1);
  } else if (q % 2 == 1) {
    // k = (p+1) * 2^{-1} mod q, with 2^{-1} = (q+1)/2
    const auto k = static_cast<std::uint64_t>(static_cast<unsigned __int128>(target) * ((q + 1) / 2) % q);
    candidates.push_back(k == 0 ? q : k);
  } else if (target % 2 == 0) {
    const std::uint64_t k0 = target / 2;
    for (std::uint64_t k : {k0, k0 + q / 2}) candidates.push_back(k == 0 ? q : k);
  }
  std::sort(candidates.begin(), candidates.end());

  const std::size_t expected_size = q % 2 == 0 ? 2 : 1;
  if (candidates.size() != expected_size)
    throw Error(ErrorCode::InvariantViolation, "candidate set has size " + std::to_string(candidates.size()));
  for (const auto& cycle : cycle_decompose(pi).cycles) {
    if (cycle.size() == 4) continue;
    for (std::uint64_t k : cycle)
      if (!std::binary_search(candidates.begin(), candidates.end(), k))
        throw Error(ErrorCode::InvariantViolation, std::to_string(k) + " lies outside a 4-cycle but is no candidate");
  }
  return candidates;
}

} // namespace kronperm
