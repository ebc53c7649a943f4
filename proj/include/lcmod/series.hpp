#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcmod/laurent.hpp"
#include "lcmod/numeric.hpp"

namespace lcmod {

inline constexpr std::int64_t kDefaultPrecision = 32;

// Local base rings: F_p((t)), Q_p, (Z/p^n)((t)).
struct LocalDatum {
  enum class Kind { EqualChar, MixedChar, TorsionSeries };

  Kind kind = Kind::EqualChar;
  Int p = 2;
  std::uint32_t n = 1;  // only > 1 for TorsionSeries

  static LocalDatum equal_char(const Int& p) {
    if (!is_prime(p)) fail(ErrorKind::BadParams, "F_p((t)) needs a prime p");
    return {Kind::EqualChar, p, 1};
  }
  static LocalDatum mixed_char(const Int& p) {
    if (!is_prime(p)) fail(ErrorKind::BadParams, "Q_p needs a prime p");
    return {Kind::MixedChar, p, 1};
  }
  static LocalDatum torsion_series(const Int& p, std::uint32_t n) {
    if (!is_prime(p)) fail(ErrorKind::BadParams, "(Z/p^n)((t)) needs a prime p");
    if (n < 1) fail(ErrorKind::BadParams, "(Z/p^n)((t)) needs n >= 1");
    return {Kind::TorsionSeries, p, n};
  }

  bool is_field() const { return kind != Kind::TorsionSeries || n == 1; }
  Int residue_size() const { return p; }
  Int digit_modulus() const { return kind == Kind::TorsionSeries ? pow_int(p, n) : p; }
  std::string uniformizer() const { return kind == Kind::MixedChar ? "p" : "t"; }

  // coefficient ring of exact (Laurent polynomial) matrix entries over this base
  CoeffRing entry_ring() const {
    switch (kind) {
      case Kind::EqualChar: return CoeffRing::prime_field(p);
      case Kind::MixedChar: return CoeffRing::rationals();
      case Kind::TorsionSeries: return CoeffRing::prime_power(p, n);
    }
    fail(ErrorKind::Internal, "bad datum");
  }

  bool operator==(const LocalDatum& o) const { return kind == o.kind && p == o.p && n == o.n; }
  bool operator!=(const LocalDatum& o) const { return !(*this == o); }

  std::string name() const {
    switch (kind) {
      case Kind::EqualChar: return "F_" + p.str() + "((t))";
      case Kind::MixedChar: return "Q_" + p.str();
      case Kind::TorsionSeries: return "(Z/" + pow_int(p, n).str() + ")((t))";
    }
    return "?";
  }
};

// Valuation- and precision-tracked element of a local ring. Digits are stored
// from the valuation upward; digits[0] is nonzero unless the value is zero at
// the working precision. `exact` marks values whose stored digits are the
// complete element (a Laurent polynomial in the uniformizer).
class TruncatedSeries {
 public:
  TruncatedSeries() = default;

  static TruncatedSeries zero(const LocalDatum& d, std::int64_t precision = kDefaultPrecision) {
    TruncatedSeries s;
    s.datum_ = d;
    s.precision_ = precision;
    s.valuation_ = precision;
    s.exact_ = true;
    return s;
  }

  static TruncatedSeries from_digits(const LocalDatum& d, std::int64_t valuation,
                                     std::vector<Int> digits, std::int64_t precision,
                                     bool exact = false) {
    TruncatedSeries s;
    s.datum_ = d;
    s.precision_ = precision;
    s.valuation_ = valuation;
    s.digits_ = std::move(digits);
    s.exact_ = exact;
    const Int m = d.digit_modulus();
    for (auto& c : s.digits_) c = mod_reduce(c, m);
    s.normalize();
    return s;
  }

  // integer constant, exact up to the stated precision
  static TruncatedSeries from_int(const LocalDatum& d, const Int& a,
                                  std::int64_t precision = kDefaultPrecision) {
    return from_rational(d, Rat(a), precision);
  }

  // Exact rational scalar. For Q_p this is the p-adic expansion; for the
  // series rings the denominator must be prime to p.
  static TruncatedSeries from_rational(const LocalDatum& d, const Rat& q,
                                       std::int64_t precision = kDefaultPrecision) {
    if (q == 0) return zero(d, precision);
    TruncatedSeries s;
    s.datum_ = d;
    s.precision_ = precision;
    if (d.kind == LocalDatum::Kind::MixedChar) {
      std::int64_t v = p_valuation(q, d.p);
      if (v >= precision) {
        TruncatedSeries z = zero(d, precision);
        z.exact_ = false;  // nonzero value below the working precision
        return z;
      }
      Rat u = q / pow_rat(Rat(d.p), v);
      std::int64_t rel = precision - v;
      Int mod = pow_int(d.p, std::uint64_t(rel));
      Int unit = mod_reduce(num(u) * mod_inverse(den(u), mod), mod);
      s.valuation_ = v;
      s.digits_ = extract_digits(unit, d.p, rel);
      // exact iff the expansion terminates: u a nonnegative integer consumed fully
      s.exact_ = is_integer(u) && num(u) >= 0 && num(u) < mod;
      s.normalize();
      return s;
    }
    // constant in F_p((t)) or (Z/p^n)((t))
    const Int m = d.digit_modulus();
    if (gcd_int(den(q), m) != 1)
      fail(ErrorKind::CoefficientOutOfRing, "denominator not invertible in " + d.name());
    Int c = mod_reduce(num(q) * mod_inverse(den(q), m), m);
    if (c == 0) return zero(d, precision);
    s.valuation_ = 0;
    s.digits_ = {c};
    s.exact_ = true;
    return s;
  }

  // Exact univariate Laurent polynomial in the uniformizer.
  static TruncatedSeries from_laurent(const LocalDatum& d, const LaurentPoly& f,
                                      std::int64_t precision = kDefaultPrecision) {
    if (f.rank() != 1) fail(ErrorKind::RankMismatch, "series entry needs a univariate polynomial");
    if (f.is_zero()) return zero(d, precision);
    if (d.kind == LocalDatum::Kind::MixedChar) {
      // polynomial in p over Q evaluates to an exact rational
      Rat val = 0;
      for (const auto& [e, c] : f.terms()) {
        std::int64_t k = std::int64_t(e[0]);
        val += c * pow_rat(Rat(d.p), k);
      }
      return from_rational(d, val, precision);
    }
    const Int m = d.digit_modulus();
    std::int64_t v = std::int64_t(f.t_valuation());
    std::int64_t top = std::int64_t(f.max_degree());
    TruncatedSeries s;
    s.datum_ = d;
    s.precision_ = precision;
    s.valuation_ = v;
    bool truncated = false;
    for (std::int64_t k = v; k <= top; ++k) {
      if (k >= precision) {
        if (f.coeff_at(Int(k)) != 0) truncated = true;
        continue;
      }
      s.digits_.push_back(mod_reduce(num(f.coeff_at(Int(k))), m));
    }
    s.exact_ = !truncated;
    s.normalize();
    return s;
  }

  const LocalDatum& datum() const { return datum_; }
  std::int64_t precision() const { return precision_; }
  bool exact() const { return exact_; }
  const std::vector<Int>& digits() const { return digits_; }

  bool is_zero() const { return digits_.empty(); }            // zero at working precision
  bool is_exact_zero() const { return digits_.empty() && exact_; }

  // true valuation when a leading digit is visible; exact zero reports +infinity
  // (empty); an inexact apparent zero reports "unknown" (also empty) but can be
  // told apart via is_zero()/exact().
  std::optional<std::int64_t> valuation() const {
    if (digits_.empty()) return std::nullopt;
    return valuation_;
  }

  std::int64_t valuation_or(std::int64_t fallback) const {
    return digits_.empty() ? fallback : valuation_;
  }

  Int digit(std::int64_t k) const {  // coefficient of pi^k
    if (digits_.empty() || k < valuation_ || k >= valuation_ + std::int64_t(digits_.size())) return 0;
    return digits_[std::size_t(k - valuation_)];
  }

  TruncatedSeries truncated_to(std::int64_t new_precision) const {
    TruncatedSeries s = *this;
    if (new_precision >= precision_) return s;
    s.precision_ = new_precision;
    if (!s.digits_.empty()) {
      std::int64_t keep = new_precision - s.valuation_;
      if (keep <= 0) {
        if (!s.digits_.empty()) s.exact_ = false;
        s.digits_.clear();
        s.valuation_ = new_precision;
      } else if (keep < std::int64_t(s.digits_.size())) {
        s.digits_.resize(std::size_t(keep));
        s.exact_ = false;
      }
    }
    s.normalize();
    return s;
  }

  TruncatedSeries operator-() const {
    if (is_zero()) return *this;
    TruncatedSeries s = *this;
    if (datum_.kind == LocalDatum::Kind::MixedChar) {
      std::int64_t rel = rel_len();
      Int mod = pow_int(datum_.p, std::uint64_t(rel));
      s.digits_ = extract_digits(mod_reduce(-pack(), mod), datum_.p, rel);
      s.exact_ = false;  // -u has an infinite expansion for finite positive u
    } else {
      const Int m = datum_.digit_modulus();
      for (auto& c : s.digits_) c = mod_reduce(-c, m);
    }
    s.normalize();
    return s;
  }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    check_same(o);
    std::int64_t prec = std::min(precision_, o.precision_);
    if (is_zero()) return o.truncated_to(prec);
    if (o.is_zero()) return truncated_to(prec);
    std::int64_t v = std::min(valuation_, o.valuation_);
    TruncatedSeries s;
    s.datum_ = datum_;
    s.precision_ = prec;
    s.valuation_ = v;
    s.exact_ = exact_ && o.exact_;
    std::int64_t len = prec - v;
    if (datum_.kind == LocalDatum::Kind::MixedChar) {
      Int mod = pow_int(datum_.p, std::uint64_t(len));
      Int a = shifted_pack(v, len), b = o.shifted_pack(v, len);
      s.digits_ = extract_digits(mod_reduce(a + b, mod), datum_.p, len);
    } else {
      const Int m = datum_.digit_modulus();
      s.digits_.assign(std::size_t(len), Int(0));
      for (std::int64_t k = 0; k < len; ++k)
        s.digits_[std::size_t(k)] = mod_reduce(digit(v + k) + o.digit(v + k), m);
    }
    s.normalize();
    return s;
  }

  TruncatedSeries operator-(const TruncatedSeries& o) const { return *this + (-o); }

  TruncatedSeries operator*(const TruncatedSeries& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) {
      std::int64_t prec = std::min(precision_ + o.valuation_or(o.precision_),
                                   o.precision_ + valuation_or(precision_));
      TruncatedSeries z = zero(datum_, prec);
      z.exact_ = exact_ && o.exact_;
      return z;
    }
    std::int64_t v = valuation_ + o.valuation_;
    std::int64_t prec = std::min(precision_ + o.valuation_, o.precision_ + valuation_);
    TruncatedSeries s;
    s.datum_ = datum_;
    s.precision_ = prec;
    s.valuation_ = v;
    std::int64_t len = prec - v;
    if (len <= 0) {
      s.digits_.clear();
      s.valuation_ = prec;
      s.exact_ = false;
      return s;
    }
    bool trunc = false;
    if (datum_.kind == LocalDatum::Kind::MixedChar) {
      Int mod = pow_int(datum_.p, std::uint64_t(len));
      Int prod = pack() * o.pack();
      trunc = prod >= mod;
      s.digits_ = extract_digits(mod_reduce(prod, mod), datum_.p, len);
    } else {
      const Int m = datum_.digit_modulus();
      s.digits_.assign(std::size_t(len), Int(0));
      for (std::size_t i = 0; i < digits_.size(); ++i)
        for (std::size_t j = 0; j < o.digits_.size(); ++j) {
          std::int64_t k = std::int64_t(i) + std::int64_t(j);
          if (k >= len) {
            if (digits_[i] * o.digits_[j] % m != 0) trunc = true;
            continue;
          }
          s.digits_[std::size_t(k)] = mod_reduce(s.digits_[std::size_t(k)] + digits_[i] * o.digits_[j], m);
        }
    }
    s.exact_ = exact_ && o.exact_ && !trunc;
    s.normalize();
    return s;
  }

  TruncatedSeries scaled_by_uniformizer(std::int64_t k) const {  // multiply by pi^k
    TruncatedSeries s = *this;
    s.valuation_ += k;
    s.precision_ += k;
    return s;
  }

  bool is_unit_at_leading_digit() const {
    if (digits_.empty()) return false;
    return datum_.kind == LocalDatum::Kind::TorsionSeries ? digits_[0] % datum_.p != 0
                                                          : digits_[0] != 0;
  }

  // unit_invert: leading digit must be invertible. Result precision is
  // precision - 2*valuation.
  TruncatedSeries invert() const {
    if (is_zero()) fail(ErrorKind::NotAUnit, "cannot invert zero at working precision");
    if (!is_unit_at_leading_digit())
      fail(ErrorKind::NotAUnit, "leading coefficient is not a unit in " + datum_.name());
    std::int64_t prec = precision_ - 2 * valuation_;
    std::int64_t len = precision_ - valuation_;  // relative precision carries over
    if (len <= 0) fail(ErrorKind::PrecisionExhausted, "no digits left to invert");
    TruncatedSeries s;
    s.datum_ = datum_;
    s.valuation_ = -valuation_;
    s.precision_ = prec;
    if (datum_.kind == LocalDatum::Kind::MixedChar) {
      Int mod = pow_int(datum_.p, std::uint64_t(len));
      s.digits_ = extract_digits(mod_inverse(pack(), mod), datum_.p, len);
    } else {
      const Int m = datum_.digit_modulus();
      Int inv0 = mod_inverse(digits_[0], m);
      std::vector<Int> w(std::size_t(len), Int(0));
      w[0] = inv0;
      for (std::int64_t k = 1; k < len; ++k) {
        Int acc = 0;
        for (std::int64_t i = 1; i <= k && i < std::int64_t(digits_.size()); ++i)
          acc += digits_[std::size_t(i)] * w[std::size_t(k - i)];
        w[std::size_t(k)] = mod_reduce(-inv0 * acc, m);
      }
      s.digits_ = std::move(w);
    }
    // exact only for plain monomials c * pi^v with c invertible and c^-1 * c = 1
    s.exact_ = exact_ && digits_.size() == 1 &&
               mod_reduce(digits_[0] * s.digits_[0], datum_.digit_modulus()) == 1 &&
               s.digits_.size() >= 1;
    if (s.exact_) s.digits_.resize(1);
    s.normalize();
    return s;
  }

  // Inversion of an arbitrary unit of (Z/p^n)((t)): some digit is a unit mod p.
  // Writes the value as t^j * (w_reg + w_neg) with w_neg nilpotent mod p^n.
  TruncatedSeries invert_general() const {
    if (datum_.kind != LocalDatum::Kind::TorsionSeries || is_unit_at_leading_digit())
      return invert();
    if (is_zero()) fail(ErrorKind::NotAUnit, "cannot invert zero at working precision");
    std::int64_t j = -1;
    for (std::size_t i = 0; i < digits_.size(); ++i)
      if (digits_[i] % datum_.p != 0) {
        j = std::int64_t(i);
        break;
      }
    if (j < 0) fail(ErrorKind::NotAUnit, "no unit digit: element lies in (p)");
    // b = value * t^{-(valuation + j)}: digits as ours, valuation -j
    TruncatedSeries b = *this;
    b.valuation_ = -j;
    b.precision_ = precision_ - valuation_ - j;
    TruncatedSeries reg = b;  // digits from index j on
    reg.digits_.erase(reg.digits_.begin(), reg.digits_.begin() + std::ptrdiff_t(j));
    reg.valuation_ = 0;
    TruncatedSeries negpart = b;  // digits before index j, all divisible by p
    negpart.digits_.resize(std::size_t(j));
    negpart.normalize();
    TruncatedSeries g = reg.invert();
    TruncatedSeries x = g * negpart;
    TruncatedSeries acc = g;
    TruncatedSeries term = g;
    for (std::uint32_t k = 1; k < datum_.n; ++k) {
      term = -(term * x);
      acc = acc + term;
    }
    acc.valuation_ -= valuation_ + j;
    acc.precision_ -= valuation_ + j;
    acc.exact_ = false;
    acc.normalize();
    return acc;
  }

  bool operator==(const TruncatedSeries& o) const {
    return datum_ == o.datum_ && is_zero() == o.is_zero() &&
           (is_zero() || (valuation_ == o.valuation_ && digits_ == o.digits_));
  }

  // agreement of all digits below the smaller precision
  bool agrees_with(const TruncatedSeries& o) const {
    std::int64_t prec = std::min(precision_, o.precision_);
    std::int64_t lo = std::min(valuation_or(prec), o.valuation_or(prec));
    for (std::int64_t k = lo; k < prec; ++k)
      if (digit(k) != o.digit(k)) return false;
    return true;
  }

  std::string to_string() const {
    if (is_zero()) return exact_ ? "0" : "O(" + pi_pow(precision_) + ")";
    std::string s;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (digits_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      std::int64_t k = valuation_ + std::int64_t(i);
      if (k == 0)
        s += digits_[i].str();
      else if (digits_[i] == 1)
        s += pi_pow(k);
      else
        s += digits_[i].str() + "*" + pi_pow(k);
    }
    if (!exact_) s += " + O(" + pi_pow(precision_) + ")";
    return s;
  }

 private:
  std::string pi_pow(std::int64_t k) const {
    std::string u = datum_.uniformizer();
    if (k == 1) return u;
    return u + "^" + std::to_string(k);
  }

  void check_same(const TruncatedSeries& o) const {
    if (datum_ != o.datum_) fail(ErrorKind::Internal, "mixed local data in series arithmetic");
  }

  std::int64_t rel_len() const { return std::int64_t(digits_.size()); }

  Int pack() const {  // digits as an integer in base p (MixedChar only)
    Int a = 0;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) a = a * datum_.p + *it;
    return a;
  }

  Int shifted_pack(std::int64_t base_val, std::int64_t len) const {
    Int a = 0;
    for (std::int64_t k = base_val + len - 1; k >= base_val; --k) a = a * datum_.p + digit(k);
    return a;
  }

  static std::vector<Int> extract_digits(Int a, const Int& p, std::int64_t len) {
    std::vector<Int> d;
    d.reserve(std::size_t(len));
    for (std::int64_t i = 0; i < len; ++i) {
      d.push_back(a % p);
      a /= p;
    }
    return d;
  }

  void normalize() {
    while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
    std::size_t lead = 0;
    while (lead < digits_.size() && digits_[lead] == 0) ++lead;
    if (lead > 0) {
      digits_.erase(digits_.begin(), digits_.begin() + std::ptrdiff_t(lead));
      valuation_ += std::int64_t(lead);
    }
    if (digits_.empty()) valuation_ = precision_;
  }

  LocalDatum datum_;
  std::int64_t valuation_ = 0;
  std::int64_t precision_ = kDefaultPrecision;
  std::vector<Int> digits_;
  bool exact_ = false;
};

}  // namespace lcmod
