#include "kronperm/cli.hpp"

#include "kronperm/error.hpp"
#include "kronperm/perm.hpp"
#include "kronperm/report.hpp"
#include "kronperm/theorems.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace kronperm::cli {
namespace {

using report::Json;

struct Output {
  std::ostringstream body;
  int status = kSuccess;
};

BuildOptions build_options(const RunConfig& cfg) {
  BuildOptions o;
  o.precision_budget = cfg.precision_budget;
  o.size_limit = cfg.size_limit;
  return o;
}

std::string join(std::span<const std::uint64_t> v, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

void emit_json(Output& out, const Json& doc) { out.body << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// cf

void cmd_cf(const RunConfig& cfg, Format fmt, Output& out) {
  const AlphaSpec alpha = parse_alpha(cfg.alpha_spec);
  const auto convs = convergents(alpha.stream, cfg.depth, cfg.precision_budget);
  switch (fmt) {
  case Format::Json: emit_json(out, Json{{"alpha", alpha.text}, {"convergents", report::convergent_table(alpha.stream, convs)}}); break;
  case Format::Csv:
    out.body << "index,a,p,q,side,det_sign\n";
    for (const auto& c : convs)
      out.body << c.index << ',' << alpha.stream.coefficient(c.index) << ',' << c.p << ',' << c.q << ','
               << to_string(c.side) << ',' << c.det_sign << '\n';
    break;
  case Format::Text:
    out.body << "# alpha " << alpha.text << '\n';
    out.body << std::left << std::setw(6) << "index" << std::setw(8) << "a" << std::setw(24) << "p/q" << std::setw(7)
             << "side" << "det\n";
    for (const auto& c : convs)
      out.body << std::setw(6) << c.index << std::setw(8) << alpha.stream.coefficient(c.index) << std::setw(24)
               << (c.p.str() + "/" + c.q.str()) << std::setw(7) << to_string(c.side) << (c.det_sign > 0 ? "+1" : "-1")
               << '\n';
    break;
  }
}

// ---------------------------------------------------------------------------
// perm

void cmd_perm(const RunConfig& cfg, Format fmt, Output& out) {
  const AlphaSpec alpha = parse_alpha(cfg.alpha_spec);
  const SignatureResult r = signature_of(alpha.stream, cfg.n, build_options(cfg));
  switch (fmt) {
  case Format::Json: {
    Json doc = report::signature_json(alpha.text, cfg.n, r);
    Json pi = Json::array(), sigma = Json::array();
    for (auto v : r.pi.values()) pi.push_back(report::json_int(v));
    for (auto v : r.sigma.values()) sigma.push_back(report::json_int(v));
    doc["pi"] = std::move(pi);
    doc["sigma"] = std::move(sigma);
    emit_json(out, doc);
    break;
  }
  case Format::Csv:
    out.body << "k,pi,sigma\n";
    for (std::uint64_t k = 1; k <= cfg.n; ++k) out.body << k << ',' << r.pi(k) << ',' << r.sigma(k) << '\n';
    break;
  case Format::Text:
    out.body << "alpha: " << alpha.text << "\nn: " << cfg.n << "\nbuilder: " << to_string(r.builder) << '\n';
    if (r.convergent) out.body << "convergent: " << r.convergent->p << '/' << r.convergent->q << " (index "
                               << r.convergent->index << ", side " << to_string(r.convergent->side) << ")\n";
    out.body << "pi: " << join(r.pi.values()) << "\nsigma: " << join(r.sigma.values()) << '\n';
    out.body << "cycles: " << report::cycles_text(r.signature) << '\n';
    out.body << "lengths: " << report::lengths_text(r.signature) << '\n';
    out.body << "fixed_points: " << join(r.signature.fixed_points) << '\n';
    break;
  }
}

// ---------------------------------------------------------------------------
// scan

void cmd_scan(const RunConfig& cfg, Format fmt, Output& out) {
  const AlphaSpec alpha = parse_alpha(cfg.alpha_spec);
  if (cfg.range_lo == 0 || cfg.range_hi < cfg.range_lo) throw Error(ErrorCode::InvalidArgument, "empty --range");
  Json rows = Json::array();
  for (std::uint64_t n = cfg.range_lo; n <= cfg.range_hi; ++n) {
    const SignatureResult r = signature_of(alpha.stream, n, build_options(cfg));
    std::uint64_t cycle_count = 0;
    for (const auto& kv : r.signature.length_multiset) cycle_count += kv.second;
    rows.push_back({{"n", n},
                    {"builder", std::string(to_string(r.builder))},
                    {"cycle_count", cycle_count},
                    {"lengths", report::lengths_json(r.signature)},
                    {"fixed_count", r.signature.fixed_points.size()},
                    {"longest", r.signature.longest()},
                    {"distinct_lengths", !r.signature.has_repeated_length()}});
  }
  switch (fmt) {
  case Format::Json: emit_json(out, Json{{"alpha", alpha.text}, {"rows", rows}}); break;
  case Format::Csv:
  case Format::Text: {
    const char sep = fmt == Format::Csv ? ',' : '\t';
    out.body << "n" << sep << "builder" << sep << "cycle_count" << sep << "lengths" << sep << "fixed_count" << sep
             << "longest" << sep << "distinct_lengths\n";
    for (const auto& row : rows) {
      std::string lengths;
      for (const auto& [len, count] : row["lengths"].items()) {
        if (!lengths.empty()) lengths += ' ';
        lengths += len + ":" + count.dump();
      }
      out.body << row["n"].get<std::uint64_t>() << sep << row["builder"].get<std::string>() << sep
               << row["cycle_count"].get<std::uint64_t>() << sep << lengths << sep
               << row["fixed_count"].get<std::uint64_t>() << sep << row["longest"].get<std::uint64_t>() << sep
               << (row["distinct_lengths"].get<bool>() ? "true" : "false") << '\n';
    }
    break;
  }
  }
}

// ---------------------------------------------------------------------------
// points

void cmd_points(const RunConfig& cfg, Format fmt, Output& out) {
  const AlphaSpec alpha = parse_alpha(cfg.alpha_spec);
  const SignatureResult r = signature_of(alpha.stream, cfg.n, build_options(cfg));
  const auto rows = report::point_rows(alpha.stream, r.pi, cfg.precision_budget);
  if (fmt == Format::Json) {
    Json arr = Json::array();
    for (const auto& p : rows) arr.push_back({{"k", p.k}, {"k_over_n", p.k_over_n}, {"x", p.x}, {"rank", p.rank}});
    emit_json(out, Json{{"alpha", alpha.text}, {"n", cfg.n}, {"points", arr}});
  } else {
    out.body << report::points_csv(rows);
  }
}

// ---------------------------------------------------------------------------
// verify

struct SuiteResult {
  Json items = Json::array();
  std::vector<std::string> lines;
  bool ok = true;
  std::vector<std::string> notes;
};

void check(SuiteResult& s, bool cond, const std::string& line) {
  s.lines.push_back(std::string(cond ? "PASS " : "FAIL ") + line);
  if (!cond) s.ok = false;
}

SuiteResult suite_fibonacci(const RunConfig& cfg) {
  SuiteResult s;
  for (unsigned n = 1; n <= cfg.max_index; ++n) {
    const FibonacciVerdict v = verify_fibonacci_theorem(n, build_options(cfg));
    Json j = report::verdict_json(v.verdict);
    j["fib_index"] = n;
    j["expected"] = std::string(to_string(v.expected));
    j["conformant"] = v.conformant;
    s.items.push_back(std::move(j));
    check(s, v.conformant,
          "F_" + std::to_string(n) + "=" + v.fib.str() + " expected " + std::string(to_string(v.expected)) + " got " +
              std::string(to_string(v.verdict.case_label)) + " lengths " + report::lengths_text(v.verdict.signature));
  }
  return s;
}

std::size_t suite_max_q(const RunConfig& cfg, std::uint64_t fallback) { return cfg.max_q ? cfg.max_q : fallback; }

SuiteResult suite_quadratic(const RunConfig& cfg) {
  SuiteResult s;
  std::vector<QuadraticSurd> targets;
  if (cfg.alpha_spec.rfind("surd:", 0) == 0 || cfg.alpha_spec == "named:phi" || cfg.alpha_spec == "named:sqrt2") {
    targets.push_back(*parse_alpha(cfg.alpha_spec).stream.surd());
  } else if (cfg.alpha_spec.empty() || cfg.alpha_spec == "all") {
    for (unsigned d = 2; d <= cfg.max_d; ++d)
      if (!is_perfect_square(BigInt(d))) targets.push_back(QuadraticSurd::sqrt(d));
  } else {
    throw Error(ErrorCode::InvalidArgument, "quadratic suite needs a surd alpha or 'all'");
  }
  const std::uint64_t cap = suite_max_q(cfg, 100000);
  for (const auto& x : targets) {
    const QuadraticReport rep = verify_quadratic_theorem(x, cfg.periods, cap, build_options(cfg));
    for (const auto& p : rep.prefixes) {
      Json j{{"alpha", rep.alpha}, {"prefix", p.index}, {"q", report::json_int(p.q)},
             {"status", std::string(to_string(p.status))}};
      if (p.verdict) {
        j["verdict"] = report::verdict_json(*p.verdict);
        check(s, p.verdict->conformant(),
              rep.alpha + " j=" + std::to_string(p.index) + " q=" + p.q.str() + " " +
                  std::string(to_string(p.verdict->case_label)) + " lengths " +
                  report::lengths_text(p.verdict->signature));
      } else {
        s.notes.push_back(rep.alpha + " j=" + std::to_string(p.index) + " q=" + p.q.str() + " skipped (" +
                          std::string(to_string(p.status)) + ")");
      }
      s.items.push_back(std::move(j));
    }
  }
  return s;
}

SuiteResult suite_fixed_points(const RunConfig& cfg) {
  SuiteResult s;
  std::vector<std::uint64_t> rs = cfg.r_values;
  if (rs.empty())
    for (std::uint64_t r = 1; r <= 10; ++r) rs.push_back(r);
  const std::uint64_t cap = suite_max_q(cfg, 100000);
  for (std::uint64_t r : rs) {
    for (const auto& row : fixed_point_completeness_scan(r, cfg.max_m, cap, build_options(cfg))) {
      s.items.push_back({{"r", r},
                         {"m", row.m},
                         {"q_m", report::json_int(row.q_m)},
                         {"generator", row.generator},
                         {"predicted_count", row.predicted_count},
                         {"actual_count", row.actual_count},
                         {"subset", row.subset},
                         {"equal", row.equal}});
      check(s, row.subset,
            "r=" + std::to_string(r) + " m=" + std::to_string(row.m) + " Q_m=" + row.q_m.str() + " multiples of " +
                std::to_string(row.generator) + " fixed (" + std::to_string(row.predicted_count) + " predicted, " +
                std::to_string(row.actual_count) + " actual)");
      if (!row.equal)
        s.notes.push_back("finding: r=" + std::to_string(r) + " m=" + std::to_string(row.m) +
                          " has fixed points beyond the predicted family");
    }
  }
  return s;
}

SuiteResult suite_exchange(const RunConfig& cfg) {
  SuiteResult s;
  const AlphaSpec alpha = parse_alpha(cfg.alpha_spec);
  const AlphaEvaluator eval(alpha.stream, cfg.precision_budget);
  std::size_t last = cfg.depth;
  if (const CFExpansionPeriodic* per = alpha.stream.periodic())
    last = per->period_start() + cfg.periods * per->period_length() - 1;
  const std::uint64_t cap = suite_max_q(cfg, 10000);
  for (std::size_t k = 0; k <= last; ++k) {
    if (!alpha.stream.has(k)) break;
    const Convergent conv = eval.convergent(k);
    if (conv.q > cap) {
      s.notes.push_back("stopped at index " + std::to_string(k) + ": q=" + conv.q.str() + " exceeds " + std::to_string(cap));
      break;
    }
    const ExchangeCertificate cert = exchange_check(alpha.stream, conv, build_options(cfg));
    s.items.push_back({{"index", k},
                       {"p", report::json_int(conv.p)},
                       {"q", report::json_int(conv.q)},
                       {"shift_bound", to_string(cert.shift_bound)},
                       {"min_gap", to_string(cert.min_gap)},
                       {"separated", cert.separated},
                       {"verdict", cert.verdict}});
    check(s, cert.verdict,
          "index " + std::to_string(k) + " " + conv.p.str() + "/" + conv.q.str() + " exact == modular (" +
              std::to_string(cert.mismatches) + " mismatches)");
  }
  return s;
}

SuiteResult suite_identities(const RunConfig& cfg) {
  SuiteResult s;
  const AlphaSpec alpha = parse_alpha(cfg.alpha_spec);
  const auto convs = convergents(alpha.stream, cfg.depth, cfg.precision_budget);
  bool det_ok = true, coupling_ok = true, gcd_ok = true, mono_ok = true;
  for (std::size_t n = 0; n < convs.size(); ++n) {
    const auto& c = convs[n];
    if (n >= 1) {
      try {
        if (check_determinant_identity(convs[n - 1], c) != c.det_sign) det_ok = false;
      } catch (const Error&) {
        det_ok = false;
      }
    }
    if ((c.side == Side::Above) != (c.det_sign == -1)) coupling_ok = false;
    if (gcd(abs(c.p), c.q) != 1) gcd_ok = false;
    if (n >= 2 && !(c.q > convs[n - 1].q)) mono_ok = false;
    s.items.push_back({{"index", n}, {"p", c.p.str()}, {"q", c.q.str()}, {"side", std::string(to_string(c.side))},
                       {"det_sign", c.det_sign}});
  }
  check(s, det_ok, "|p_n q_{n-1} - p_{n-1} q_n| = 1 for n <= " + std::to_string(cfg.depth));
  check(s, coupling_ok, "side = Above exactly when det_sign = -1");
  check(s, gcd_ok, "gcd(p_n, q_n) = 1");
  check(s, mono_ok, "q_n strictly increasing from index 1");

  const CFStream frac = alpha.stream.fractional();
  bool bic_ok = true;
  for (std::size_t n = 0; n <= cfg.depth; ++n)
    if (!check_palindrome_pq_biconditional(frac, n)) bic_ok = false;
  check(s, bic_ok, "palindromic (a_1..a_n) <=> p_n = q_{n-1} on " + frac.label());

  bool cassini_ok = true;
  for (unsigned n = 3; n <= 200; ++n)
    if (!cassini_check(n)) cassini_ok = false;
  check(s, cassini_ok, "Cassini identity for 3 <= n <= 200");

  // Hurwitz is reported, not asserted.
  std::size_t hurwitz_upto = cfg.depth;
  if (const auto len = alpha.stream.length()) hurwitz_upto = std::min(hurwitz_upto, *len >= 3 ? *len - 3 : 0);
  const AlphaEvaluator eval(alpha.stream, cfg.precision_budget);
  std::size_t violations = 0;
  for (const auto& h : hurwitz_scan(eval, hurwitz_upto)) {
    if (!h.satisfies) {
      ++violations;
      s.notes.push_back("Hurwitz bound exceeded at index " + std::to_string(h.index) + " (" + h.p.str() + "/" +
                        h.q.str() + ")");
    }
  }
  s.notes.push_back("Hurwitz bound checked for indices 0.." + std::to_string(hurwitz_upto) + ": " +
                    std::to_string(violations) + " violations");
  return s;
}

void cmd_verify(const RunConfig& cfg, Format fmt, Output& out) {
  SuiteResult s;
  if (cfg.suite == "fibonacci") s = suite_fibonacci(cfg);
  else if (cfg.suite == "quadratic") s = suite_quadratic(cfg);
  else if (cfg.suite == "fixed-points") s = suite_fixed_points(cfg);
  else if (cfg.suite == "exchange") s = suite_exchange(cfg);
  else if (cfg.suite == "identities") s = suite_identities(cfg);
  else throw Error(ErrorCode::InvalidArgument, "unknown suite '" + cfg.suite + "'");

  switch (fmt) {
  case Format::Json: emit_json(out, Json{{"suite", cfg.suite}, {"ok", s.ok}, {"items", s.items}, {"notes", s.notes}}); break;
  case Format::Csv:
    out.body << "status,detail\n";
    for (const auto& l : s.lines) out.body << l.substr(0, 4) << ",\"" << l.substr(5) << "\"\n";
    for (const auto& n : s.notes) out.body << "NOTE,\"" << n << "\"\n";
    break;
  case Format::Text:
    for (const auto& l : s.lines) out.body << l << '\n';
    for (const auto& n : s.notes) out.body << "NOTE " << n << '\n';
    out.body << (s.ok ? "suite " + cfg.suite + ": all checks passed\n" : "suite " + cfg.suite + ": FAILED\n");
    break;
  }
  if (!s.ok) out.status = kAssertionFailure;
}

// ---------------------------------------------------------------------------
// ensemble

void cmd_ensemble(const RunConfig& cfg, Format fmt, Output& out) {
  EnsembleConfig ec;
  ec.seed = cfg.seed;
  ec.sample_count = cfg.samples;
  ec.cf_depth = cfg.cf_depth;
  ec.max_points_per_sample = cfg.max_points;
  ec.validate();
  const BuildOptions opts = build_options(cfg);

  Json rows = Json::array();
  std::vector<std::string> notes;
  std::map<std::uint64_t, std::uint64_t> fixed_hist;
  std::size_t involutions = 0, palindromic = 0, mismatches = 0;
  double longest_sum = 0.0;
  std::vector<std::size_t> per_sample(ec.sample_count, 0);

  for (std::size_t sample = 0; sample < ec.sample_count; ++sample) {
    const CFStream stream = CFStream::gauss_kuzmin(ec, sample);
    const AlphaEvaluator eval(stream, cfg.precision_budget);
    for (std::size_t k = 0; stream.has(k); ++k) {
      const Convergent conv = eval.convergent(k);
      if (conv.q > ec.max_points_per_sample) break;
      if (conv.q > opts.size_limit) {
        notes.push_back("sample " + std::to_string(sample) + " index " + std::to_string(k) + ": q=" + conv.q.str() +
                        " skipped (size limit)");
        break;
      }
      const Permutation pi = build_pi_modular(conv, opts);
      const CycleSignature sig = cycle_decompose(pi.inverse());
      const auto n = conv.q.convert_to<std::uint64_t>();
      const bool involution = sig.longest() <= 2;
      const bool pal = is_palindrome_prefix(stream, k);
      const double longest_frac = static_cast<double>(sig.longest()) / static_cast<double>(n);

      Json row{{"sample", sample},
               {"index", k},
               {"q", report::json_int(conv.q)},
               {"p", report::json_int(conv.p)},
               {"det_sign", conv.det_sign},
               {"lengths", report::lengths_json(sig)},
               {"fixed_count", sig.fixed_points.size()},
               {"longest", sig.longest()},
               {"longest_over_n", fixed6(longest_frac)},
               {"involution", involution},
               {"palindromic", pal}};
      if (pal) {
        ++palindromic;
        const StructureVerdict v = verify_palindrome_proposition(stream, k, opts);
        row["case_label"] = std::string(to_string(v.case_label));
        if (!v.conformant()) ++mismatches;
      }
      rows.push_back(std::move(row));
      ++per_sample[sample];
      ++fixed_hist[sig.fixed_points.size()];
      involutions += involution;
      longest_sum += longest_frac;
    }
  }

  const std::size_t total = rows.size();
  Json hist = Json::object();
  for (const auto& [f, c] : fixed_hist) hist[std::to_string(f)] = c;
  Json agg{{"seed", ec.seed},
           {"samples", ec.sample_count},
           {"cf_depth", ec.cf_depth},
           {"max_points", ec.max_points_per_sample},
           {"rows", total},
           {"rows_per_sample", per_sample},
           {"involution_fraction", fixed6(total ? static_cast<double>(involutions) / total : 0.0)},
           {"mean_longest_over_n", fixed6(total ? longest_sum / total : 0.0)},
           {"fixed_point_histogram", hist},
           {"palindromic_rows", palindromic},
           {"proposition_mismatches", mismatches}};

  switch (fmt) {
  case Format::Json: emit_json(out, Json{{"rows", rows}, {"aggregate", agg}, {"notes", notes}}); break;
  case Format::Csv:
  case Format::Text: {
    const char sep = fmt == Format::Csv ? ',' : '\t';
    out.body << "sample" << sep << "index" << sep << "q" << sep << "det_sign" << sep << "fixed_count" << sep << "longest"
             << sep << "longest_over_n" << sep << "involution" << sep << "palindromic" << sep << "case_label\n";
    for (const auto& r : rows)
      out.body << r["sample"].get<std::size_t>() << sep << r["index"].get<std::size_t>() << sep << r["q"].dump() << sep
               << r["det_sign"].get<int>() << sep << r["fixed_count"].get<std::size_t>() << sep
               << r["longest"].get<std::uint64_t>() << sep << r["longest_over_n"].get<std::string>() << sep
               << (r["involution"].get<bool>() ? "true" : "false") << sep
               << (r["palindromic"].get<bool>() ? "true" : "false") << sep << r.value("case_label", std::string("-"))
               << '\n';
    if (fmt == Format::Text) {
      out.body << "# rows " << total << ", involution fraction " << agg["involution_fraction"].get<std::string>()
               << ", mean longest/n " << agg["mean_longest_over_n"].get<std::string>() << ", palindromic rows "
               << palindromic << ", proposition mismatches " << mismatches << '\n';
      for (const auto& n : notes) out.body << "# " << n << '\n';
    }
    break;
  }
  }
  if (mismatches) out.status = kAssertionFailure;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
  case ErrorCode::SizeLimit:
  case ErrorCode::PrecisionBudgetExceeded:
  case ErrorCode::StreamExhausted:
  case ErrorCode::PeriodNotFound: return kResourceLimit;
  case ErrorCode::IdentityViolation:
  case ErrorCode::InvariantViolation: return kAssertionFailure;
  default: return kUsageError;
  }
}

} // namespace

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Format fmt = cfg.format.value_or(cfg.command == "points" ? Format::Csv : Format::Text);
  Output o;
  try {
    if (cfg.precision_budget == 0) throw Error(ErrorCode::InvalidArgument, "precision budget must be >= 1");
    if (cfg.command == "cf") cmd_cf(cfg, fmt, o);
    else if (cfg.command == "perm") cmd_perm(cfg, fmt, o);
    else if (cfg.command == "scan") cmd_scan(cfg, fmt, o);
    else if (cfg.command == "verify") cmd_verify(cfg, fmt, o);
    else if (cfg.command == "ensemble") cmd_ensemble(cfg, fmt, o);
    else if (cfg.command == "points") cmd_points(cfg, fmt, o);
    else throw Error(ErrorCode::InvalidArgument, "unknown command '" + cfg.command + "'");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }

  if (cfg.out_file.empty()) {
    out << o.body.str();
  } else {
    std::ofstream f(cfg.out_file, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << cfg.out_file << " for writing\n";
      return kUsageError;
    }
    f << o.body.str();
  }
  return o.status;
}

namespace {

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw ParseError(0, "range must look like LO..HI");
  try {
    std::size_t used = 0;
    const auto lo = std::stoull(s.substr(0, dots), &used);
    if (used != dots) throw ParseError(used, "bad range start");
    const std::string hi_s = s.substr(dots + 2);
    const auto hi = std::stoull(hi_s, &used);
    if (used != hi_s.size()) throw ParseError(dots + 2 + used, "bad range end");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParseError(0, "range must look like LO..HI");
  }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Kronecker permutation toolkit: continued fractions, cycle structure, verifiers"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format;
  std::optional<std::size_t> budget;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out_file, "Write output to FILE");
  app.add_option("--precision-budget", budget, "Maximum continued-fraction terms for certified comparisons");
  app.add_option("--size-limit", cfg.size_limit, "Maximum number of points");

  std::string alpha_opt;
  auto add_alpha = [&](CLI::App* sub) { sub->add_option("--alpha", alpha_opt, "alpha: surd:..., named:..., cf:[...], gk:S/I"); };

  auto* cf = app.add_subcommand("cf", "Continued fraction and convergent table");
  add_alpha(cf);
  cf->add_option("--depth", cfg.depth, "Last convergent index");

  auto* perm = app.add_subcommand("perm", "Kronecker permutation and cycle signature for one n");
  add_alpha(perm);
  perm->add_option("--n", cfg.n, "Number of points")->required();

  std::string range;
  auto* scan = app.add_subcommand("scan", "Cycle signatures over a range of n");
  add_alpha(scan);
  scan->add_option("--range", range, "LO..HI")->required();

  auto* verify = app.add_subcommand("verify", "Run a verifier suite");
  verify->add_option("suite", cfg.suite, "fibonacci | quadratic | fixed-points | exchange | identities")
      ->required()
      ->check(CLI::IsMember({"fibonacci", "quadratic", "fixed-points", "exchange", "identities"}));
  add_alpha(verify);
  verify->add_option("--max-index", cfg.max_index, "Largest Fibonacci index");
  verify->add_option("--periods", cfg.periods, "Number of CF periods");
  verify->add_option("--depth", cfg.depth, "Convergent depth");
  verify->add_option("--max-q", cfg.max_q, "Largest convergent denominator to build");
  verify->add_option("--max-d", cfg.max_d, "Largest radicand for the quadratic sweep");
  verify->add_option("--r", cfg.r_values, "Constant coefficients for the fixed-point suite");
  verify->add_option("--max-m", cfg.max_m, "Largest even index for the fixed-point suite");

  auto* ens = app.add_subcommand("ensemble", "Gauss-Kuzmin random irrationals");
  ens->add_option("--seed", cfg.seed);
  ens->add_option("--samples", cfg.samples);
  ens->add_option("--depth", cfg.cf_depth, "CF terms per sample");
  ens->add_option("--max-points", cfg.max_points, "Largest convergent denominator per sample");

  auto* points = app.add_subcommand("points", "CSV dump of the point set");
  add_alpha(points);
  points->add_option("--n", cfg.n, "Number of points")->required();

  cfg.max_q = 0;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  if (!alpha_opt.empty()) cfg.alpha_spec = alpha_opt;
  else if (cfg.command == "verify" && cfg.suite == "quadratic") cfg.alpha_spec = "all";
  if (!format.empty()) cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  if (budget) {
    cfg.precision_budget = *budget;
  } else if (const char* env = std::getenv("KRONPERM_PRECISION_BUDGET")) {
    try {
      cfg.precision_budget = std::stoull(env);
    } catch (const std::logic_error&) {
      err << "error: KRONPERM_PRECISION_BUDGET is not a number\n";
      return kUsageError;
    }
  }
  if (cfg.command == "verify" && cfg.suite == "identities" && !verify->count("--depth")) cfg.depth = 20;
  if (cfg.command == "scan") {
    try {
      std::tie(cfg.range_lo, cfg.range_hi) = parse_range(range);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kUsageError;
    }
  }
  return execute(cfg, out, err);
}

} // namespace kronperm::cli
