#pragma once

#include <cstdint>
#include <string>

#include "lcmod/numeric.hpp"

namespace lcmod {

// Exact coefficient rings: Z, Q, F_p, Z/p^n.
struct CoeffRing {
  enum class Kind { Integers, Rationals, PrimeField, PrimePowerRing };

  Kind kind = Kind::Integers;
  Int p = 0;
  std::uint32_t n = 0;

  static CoeffRing integers() { return CoeffRing{Kind::Integers, 0, 0}; }
  static CoeffRing rationals() { return CoeffRing{Kind::Rationals, 0, 0}; }

  static CoeffRing prime_field(const Int& p) {
    if (!is_prime(p)) fail(ErrorKind::BadParams, "F_p needs a prime p");
    return CoeffRing{Kind::PrimeField, p, 1};
  }

  static CoeffRing prime_power(const Int& p, std::uint32_t n) {
    if (!is_prime(p)) fail(ErrorKind::BadParams, "Z/p^n needs a prime p");
    if (n < 1) fail(ErrorKind::BadParams, "Z/p^n needs n >= 1");
    return CoeffRing{Kind::PrimePowerRing, p, n};
  }

  bool is_finite() const { return kind == Kind::PrimeField || kind == Kind::PrimePowerRing; }
  bool is_field() const { return kind == Kind::Rationals || kind == Kind::PrimeField; }
  bool is_domain() const { return kind != Kind::PrimePowerRing || n == 1; }

  Int modulus() const {
    if (!is_finite()) fail(ErrorKind::Internal, "modulus of an infinite ring");
    return kind == Kind::PrimeField ? p : pow_int(p, n);
  }

  // Canonical representative; rejects values outside the ring.
  Rat normalize(const Rat& c) const {
    switch (kind) {
      case Kind::Rationals:
        return c;
      case Kind::Integers:
        if (!is_integer(c)) fail(ErrorKind::CoefficientOutOfRing, "non-integer coefficient over Z");
        return c;
      case Kind::PrimeField:
      case Kind::PrimePowerRing: {
        const Int m = modulus();
        if (!is_integer(c)) {
          // a/b with gcd(b, m) = 1 is accepted and reduced
          if (gcd_int(den(c), m) != 1)
            fail(ErrorKind::CoefficientOutOfRing, "denominator not invertible modulo " + m.str());
          return Rat(mod_reduce(num(c) * mod_inverse(den(c), m), m));
        }
        return Rat(mod_reduce(num(c), m));
      }
    }
    fail(ErrorKind::Internal, "bad ring kind");
  }

  Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
  Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
  Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
  Rat neg(const Rat& a) const { return normalize(-a); }

  bool is_zero(const Rat& a) const { return normalize(a) == 0; }

  bool is_unit(const Rat& a) const {
    Rat c = normalize(a);
    switch (kind) {
      case Kind::Rationals: return c != 0;
      case Kind::Integers: return c == 1 || c == -1;
      case Kind::PrimeField: return c != 0;
      case Kind::PrimePowerRing: return num(c) % p != 0;
    }
    return false;
  }

  Rat inverse(const Rat& a) const {
    Rat c = normalize(a);
    if (!is_unit(c)) fail(ErrorKind::NotAUnit, "coefficient not invertible in the ring");
    switch (kind) {
      case Kind::Rationals: return Rat(1) / c;
      case Kind::Integers: return c;  // +-1
      default: return Rat(mod_inverse(num(c), modulus()));
    }
  }

  bool operator==(const CoeffRing& o) const { return kind == o.kind && p == o.p && n == o.n; }
  bool operator!=(const CoeffRing& o) const { return !(*this == o); }

  std::string name() const {
    switch (kind) {
      case Kind::Integers: return "Z";
      case Kind::Rationals: return "Q";
      case Kind::PrimeField: return "F_" + p.str();
      case Kind::PrimePowerRing: return "Z/" + modulus().str();
    }
    return "?";
  }
};

}  // namespace lcmod
