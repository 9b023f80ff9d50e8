#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <string>

namespace kronperm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const BigInt& x) { return x.sign(); }

// Floor division; b must be nonzero.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

// Remainder with the sign of b.
inline BigInt floor_mod(const BigInt& a, const BigInt& b) { return a - floor_div(a, b) * b; }

/// floor(sqrt(n)) for n >= 0.
inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
  if (n < 0) return false;
  BigInt s = isqrt(n);
  if (root) *root = s;
  return s * s == n;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::size_t hash_value(const BigInt& x) {
  const auto& be = x.backend();
  std::size_t h = std::hash<int>{}(x.sign());
  for (std::size_t i = 0; i < be.size(); ++i)
    h ^= std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(be.limbs()[i])) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

inline std::string to_string(const Rational& x) {
  auto n = boost::multiprecision::numerator(x);
  auto d = boost::multiprecision::denominator(x);
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline bool fits_u64(const BigInt& x) { return x >= 0 && x <= std::numeric_limits<std::uint64_t>::max(); }

} // namespace kronperm
