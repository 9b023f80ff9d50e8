#pragma once
// Independent decimal arithmetic used as a cross-check for the exact code.

#include "kronperm/bigint.hpp"
#include "kronperm/surd.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace oracle {

// Expression templates off: `auto` locals must hold values, not lazy expressions.
using Dec = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<100>, boost::multiprecision::et_off>;

inline Dec dec(const kronperm::BigInt& v) { return Dec(v.str()); }

inline Dec value(const kronperm::QuadraticSurd& x) {
  Dec r = dec(x.a());
  if (x.b() != 0) r += dec(x.b()) * boost::multiprecision::sqrt(dec(x.d()));
  return r / dec(x.c());
}

inline Dec value(const kronperm::BigInt& a, const kronperm::BigInt& b, const kronperm::BigInt& c,
                 const kronperm::BigInt& d) {
  return (dec(a) + dec(b) * boost::multiprecision::sqrt(dec(d))) / dec(c);
}

inline Dec frac(const Dec& x) { return x - boost::multiprecision::floor(x); }

inline Dec e_value() { return boost::multiprecision::exp(Dec(1)); }
inline Dec pi_value() { return boost::math::constants::pi<Dec>(); }

} // namespace oracle
