#include "kronperm/report.hpp"

#include <sstream>

namespace kronperm::report {

namespace {
constexpr std::uint64_t kMaxExactDouble = std::uint64_t{1} << 53;
}

Json json_int(std::uint64_t v) {
  if (v <= kMaxExactDouble) return Json(v);
  return Json(std::to_string(v));
}

Json json_int(const BigInt& v) {
  if (v >= -BigInt(kMaxExactDouble) && v <= BigInt(kMaxExactDouble)) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

Json convergent_table(const CFStream& stream, const std::vector<Convergent>& convs) {
  Json rows = Json::array();
  for (const Convergent& c : convs) {
    rows.push_back({{"index", c.index},
                    {"a", stream.coefficient(c.index).str()},
                    {"p", c.p.str()},
                    {"q", c.q.str()},
                    {"side", std::string(to_string(c.side))},
                    {"det_sign", c.det_sign}});
  }
  return rows;
}

Json lengths_json(const CycleSignature& sig) {
  Json lengths = Json::object();
  for (const auto& [len, count] : sig.length_multiset) lengths[std::to_string(len)] = json_int(count);
  return lengths;
}

namespace {

Json int_list(const std::vector<std::uint64_t>& v) {
  Json out = Json::array();
  for (std::uint64_t x : v) out.push_back(json_int(x));
  return out;
}

} // namespace

Json signature_json(const std::string& alpha, std::uint64_t n, const SignatureResult& result) {
  Json cycles = Json::array();
  for (const auto& c : result.signature.cycles) cycles.push_back(int_list(c));
  Json out;
  out["alpha"] = alpha;
  out["n"] = json_int(n);
  out["builder"] = std::string(to_string(result.builder));
  out["cycles"] = std::move(cycles);
  out["lengths"] = lengths_json(result.signature);
  out["fixed_points"] = int_list(result.signature.fixed_points);
  return out;
}

Json verdict_json(const StructureVerdict& v) {
  Json out;
  out["alpha"] = v.alpha;
  out["n"] = v.convergent.index;
  out["q"] = json_int(v.convergent.q);
  out["p"] = json_int(v.convergent.p);
  out["det_sign"] = v.convergent.det_sign;
  out["case_label"] = std::string(to_string(v.case_label));
  out["lengths"] = lengths_json(v.signature);
  out["fixed_points"] = int_list(v.signature.fixed_points);
  out["witnesses"] = int_list(v.witnesses);
  return out;
}

std::string fixed_decimal(const BigInt& scaled, unsigned places) {
  const bool negative = scaled < 0;
  std::string digits = BigInt(abs(scaled)).str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return negative ? "-" + out : out;
}

std::vector<PointRow> point_rows(const CFStream& alpha, const Permutation& pi, std::size_t precision_budget) {
  constexpr unsigned kPlaces = 12;
  const BigInt scale = boost::multiprecision::pow(BigInt(10), kPlaces);
  const AlphaEvaluator eval(alpha, precision_budget);
  const std::uint64_t n = pi.size();
  std::vector<PointRow> rows;
  rows.reserve(n);
  for (std::uint64_t k = 1; k <= n; ++k) {
    const BigInt kb(k);
    const BigInt f = eval.floor_affine(kb);
    // round(10^12 (k alpha - f)) = floor(10^12 k alpha - 10^12 f + 1/2); no ties for irrational alpha
    const BigInt x = eval.floor_affine(scale * kb, Rational(-scale * f) + Rational(1, 2));
    const Rational kn(kb, BigInt(n));
    const Rational kn_scaled = kn * Rational(scale) + Rational(1, 2);
    const BigInt kn_rounded = floor_div(boost::multiprecision::numerator(kn_scaled),
                                        boost::multiprecision::denominator(kn_scaled));
    rows.push_back(PointRow{k, fixed_decimal(kn_rounded, kPlaces), fixed_decimal(x, kPlaces), pi(k)});
  }
  return rows;
}

std::string points_csv(const std::vector<PointRow>& rows) {
  std::ostringstream os;
  os << "k,k_over_n,x_k,rank\n";
  for (const auto& r : rows) os << r.k << ',' << r.k_over_n << ',' << r.x << ',' << r.rank << '\n';
  return os.str();
}

std::string lengths_text(const CycleSignature& sig) {
  std::string out;
  for (const auto& [len, count] : sig.length_multiset) {
    if (!out.empty()) out += ',';
    out += std::to_string(len) + ":" + std::to_string(count);
  }
  return out;
}

std::string cycles_text(const CycleSignature& sig) {
  std::string out;
  for (const auto& c : sig.cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i]);
    out += ')';
  }
  return out;
}

} // namespace kronperm::report
