#include "kronperm/cfkit.hpp"

#include "kronperm/error.hpp"

#include <cctype>

namespace kronperm {
namespace {

std::string strip_ws(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

std::uint64_t parse_u64(std::string_view s, std::size_t offset) {
  if (s.empty()) throw ParseError(offset, "expected unsigned integer");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError(offset + i, "expected digit");
    const std::uint64_t digit = static_cast<std::uint64_t>(s[i] - '0');
    if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) throw ParseError(offset, "integer overflow");
    v = v * 10 + digit;
  }
  return v;
}

CFStream parse_cf_list(std::string_view body, std::size_t offset) {
  // body is "[a0;a1,a2,...]" with whitespace already removed
  if (body.empty() || body.front() != '[') throw ParseError(offset, "expected '['");
  if (body.back() != ']') throw ParseError(offset + body.size(), "expected ']'");
  std::vector<BigInt> coeffs;
  std::size_t i = 1;
  const std::size_t end = body.size() - 1;
  while (i < end) {
    const std::size_t start = i;
    while (i < end && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
    if (start == i) throw ParseError(offset + i, "expected coefficient");
    coeffs.emplace_back(std::string(body.substr(start, i - start)));
    if (i == end) break;
    const char sep = body[i];
    const bool ok = coeffs.size() == 1 ? (sep == ';' || sep == ',') : sep == ',';
    if (!ok) throw ParseError(offset + i, coeffs.size() == 1 ? "expected ';'" : "expected ','");
    ++i;
    if (i == end) throw ParseError(offset + i, "expected coefficient");
  }
  if (coeffs.empty()) throw ParseError(offset + 1, "empty coefficient list");
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    if (coeffs[k] == 0) throw ParseError(offset, "coefficient a_" + std::to_string(k) + " must be >= 1");
  return CFStream::from_list(std::move(coeffs));
}

} // namespace

AlphaSpec parse_alpha(std::string_view text) {
  const std::string s = strip_ws(text);
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError(0, "expected '<kind>:' prefix (surd, named, cf, gk)");
  const std::string_view kind = std::string_view(s).substr(0, colon);
  const std::string_view body = std::string_view(s).substr(colon + 1);
  const std::size_t off = colon + 1;

  if (kind == "surd") {
    QuadraticSurd x = [&] {
      try {
        return parse_surd(body);
      } catch (const ParseError& e) {
        throw ParseError(off + e.position(), e.detail());
      }
    }();
    if (x.is_rational()) throw ParseError(off, "alpha must be irrational, got " + x.to_string());
    return {s, CFStream::from_surd(x)};
  }
  if (kind == "named") {
    if (body == "phi") return {s, CFStream::from_surd(QuadraticSurd::make(1, 1, 2, 5))};
    if (body == "sqrt2") return {s, CFStream::from_surd(QuadraticSurd::sqrt(2))};
    if (body == "e") return {s, CFStream::e_pattern()};
    if (body == "pi") return {s, CFStream::pi_table()};
    throw ParseError(off, "unknown constant '" + std::string(body) + "' (phi, sqrt2, e, pi)");
  }
  if (kind == "cf") return {s, parse_cf_list(body, off)};
  if (kind == "gk") {
    const auto slash = body.find('/');
    if (slash == std::string_view::npos) throw ParseError(off + body.size(), "expected '<seed>/<sample>'");
    EnsembleConfig cfg;
    cfg.seed = parse_u64(body.substr(0, slash), off);
    const std::uint64_t sample = parse_u64(body.substr(slash + 1), off + slash + 1);
    cfg.sample_count = sample + 1;
    cfg.cf_depth = kDefaultPrecisionBudget;
    return {s, CFStream::gauss_kuzmin(cfg, sample)};
  }
  throw ParseError(0, "unknown alpha kind '" + std::string(kind) + "'");
}

} // namespace kronperm
