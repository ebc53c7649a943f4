#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

#include "lcmod/error.hpp"

namespace lcmod {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

inline Int pow_int(Int base, std::uint64_t e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Rat pow_rat(const Rat& base, std::int64_t e) {
  if (e >= 0) return Rat(pow_int(num(base), std::uint64_t(e)), pow_int(den(base), std::uint64_t(e)));
  if (base == 0) fail(ErrorKind::Internal, "0 has no negative power");
  return Rat(pow_int(den(base), std::uint64_t(-e)), pow_int(num(base), std::uint64_t(-e)));
}

// floor(log2 n) for n >= 1
inline std::int64_t floor_log2(const Int& n) {
  if (n <= 0) fail(ErrorKind::Internal, "floor_log2 needs n >= 1");
  return std::int64_t(boost::multiprecision::msb(n));
}

inline bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (Int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// v_p(n) for n != 0
inline std::int64_t p_valuation(Int n, const Int& p) {
  if (n == 0) fail(ErrorKind::Internal, "p_valuation of zero");
  std::int64_t v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// v_p of a nonzero rational (negative when p divides the denominator)
inline std::int64_t p_valuation(const Rat& q, const Int& p) {
  if (q == 0) fail(ErrorKind::Internal, "p_valuation of zero");
  return p_valuation(num(q), p) - p_valuation(den(q), p);
}

inline Int mod_reduce(Int a, const Int& m) {
  a %= m;
  if (a < 0) a += m;
  return a;
}

// inverse of a mod m, for gcd(a, m) = 1
inline Int mod_inverse(const Int& a, const Int& m) {
  Int old_r = mod_reduce(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) fail(ErrorKind::NotAUnit, "element not invertible modulo m");
  return mod_reduce(old_s, m);
}

// divides the vector by the gcd of its entries; zero vector stays zero
inline std::vector<Int> primitive_vector(std::vector<Int> v) {
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

// clears denominators and normalizes to a primitive integer vector
inline std::vector<Int> primitive_direction(const std::vector<Rat>& v) {
  Int l = 1;
  for (const Rat& q : v) l = l / gcd_int(l, den(q)) * den(q);
  std::vector<Int> w;
  w.reserve(v.size());
  for (const Rat& q : v) w.push_back(num(q) * (l / den(q)));
  return primitive_vector(std::move(w));
}

}  // namespace lcmod
