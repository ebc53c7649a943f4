#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lcmod/series.hpp"

namespace lcmod {

// ---------- residue polynomials over F_p ----------

struct FpPoly {
  Int p = 2;
  std::vector<Int> c;  // low degree first, reduced mod p, no trailing zeros

  FpPoly() = default;
  FpPoly(Int prime, std::vector<Int> coeffs) : p(std::move(prime)), c(std::move(coeffs)) {
    for (auto& x : c) x = mod_reduce(x, p);
    strip();
  }

  void strip() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return int(c.size()) - 1; }
  Int coeff(int k) const { return (k >= 0 && k < int(c.size())) ? c[std::size_t(k)] : Int(0); }

  static FpPoly zero(const Int& p) { return FpPoly(p, {}); }
  static FpPoly constant(const Int& p, const Int& a) { return FpPoly(p, {a}); }

  FpPoly operator+(const FpPoly& o) const {
    std::vector<Int> r(std::max(c.size(), o.c.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
    return FpPoly(p, std::move(r));
  }

  FpPoly operator-(const FpPoly& o) const {
    std::vector<Int> r(std::max(c.size(), o.c.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
    return FpPoly(p, std::move(r));
  }

  FpPoly operator*(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return zero(p);
    std::vector<Int> r(c.size() + o.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return FpPoly(p, std::move(r));
  }

  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const {
    if (d.is_zero()) fail(ErrorKind::Internal, "FpPoly division by zero");
    FpPoly r = *this;
    std::vector<Int> q(std::size_t(std::max(0, degree() - d.degree() + 1)), Int(0));
    Int lead_inv = mod_inverse(d.c.back(), p);
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int k = r.degree() - d.degree();
      Int f = mod_reduce(r.c.back() * lead_inv, p);
      q[std::size_t(k)] = f;
      for (std::size_t i = 0; i < d.c.size(); ++i)
        r.c[std::size_t(k) + i] = mod_reduce(r.c[std::size_t(k) + i] - f * d.c[i], p);
      r.strip();
    }
    return {FpPoly(p, std::move(q)), r};
  }

  // inverse modulo y^k (constant term must be nonzero)
  FpPoly inverse_mod_yk(int k) const {
    if (is_zero() || c[0] == 0) fail(ErrorKind::Internal, "series inverse needs a unit constant term");
    std::vector<Int> w(std::size_t(k), Int(0));
    Int inv0 = mod_inverse(c[0], p);
    w[0] = inv0;
    for (int m = 1; m < k; ++m) {
      Int acc = 0;
      for (int i = 1; i <= m && i < int(c.size()); ++i) acc += c[std::size_t(i)] * w[std::size_t(m - i)];
      w[std::size_t(m)] = mod_reduce(-inv0 * acc, p);
    }
    return FpPoly(p, std::move(w));
  }

  bool operator==(const FpPoly& o) const { return p == o.p && c == o.c; }
  bool operator<(const FpPoly& o) const { return c < o.c; }
};

inline FpPoly fp_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Int inv = mod_inverse(a.c.back(), a.p);
    for (auto& x : a.c) x = mod_reduce(x * inv, a.p);
  }
  return a;
}

inline FpPoly fp_derivative(const FpPoly& f) {
  if (f.c.size() <= 1) return FpPoly::zero(f.p);
  std::vector<Int> r(f.c.size() - 1);
  for (std::size_t i = 1; i < f.c.size(); ++i) r[i - 1] = mod_reduce(f.c[i] * Int(i), f.p);
  return FpPoly(f.p, std::move(r));
}

// Monic irreducibles over F_p up to the given degree, sieved in increasing
// degree and lexicographic order (desk scale: small p and degree).
inline std::vector<FpPoly> fp_irreducibles_up_to(const Int& p, int max_degree) {
  std::vector<FpPoly> irr;
  const std::uint64_t pu = p.convert_to<std::uint64_t>();
  for (int deg = 1; deg <= max_degree; ++deg) {
    std::vector<Int> cs(std::size_t(deg) + 1, Int(0));
    cs.back() = 1;
    while (true) {
      FpPoly g(p, cs);
      bool reducible = false;
      for (const auto& h : irr) {
        if (2 * h.degree() > deg) break;
        if (g.divmod(h).second.is_zero()) {
          reducible = true;
          break;
        }
      }
      if (!reducible) irr.push_back(g);
      std::size_t pos = 0;
      while (pos < std::size_t(deg)) {
        cs[pos] += 1;
        if (cs[pos] < Int(pu)) break;
        cs[pos] = 0;
        ++pos;
      }
      if (pos == std::size_t(deg)) break;
    }
  }
  return irr;
}

// Deterministic factorization over F_p by trial division against the sieve.
inline std::vector<std::pair<FpPoly, int>> fp_factorize(FpPoly f) {
  std::vector<std::pair<FpPoly, int>> out;
  if (f.degree() < 1) return out;
  Int lead_inv = mod_inverse(f.c.back(), f.p);
  for (auto& x : f.c) x = mod_reduce(x * lead_inv, f.p);
  for (const auto& g : fp_irreducibles_up_to(f.p, f.degree() / 2)) {
    if (f.degree() < 1) break;
    int mult = 0;
    while (f.degree() >= g.degree()) {
      auto [q, r] = f.divmod(g);
      if (!r.is_zero()) break;
      f = q;
      ++mult;
    }
    if (mult > 0) out.emplace_back(g, mult);
  }
  if (f.degree() >= 1) out.emplace_back(f, 1);  // leftover cofactor is irreducible
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// ---------- polynomials over a local ring ----------

class LocalPoly {
 public:
  LocalPoly() = default;
  LocalPoly(LocalDatum d, std::vector<TruncatedSeries> coeffs)
      : datum_(std::move(d)), c_(std::move(coeffs)) {
    strip();
  }

  static LocalPoly zero(const LocalDatum& d) { return LocalPoly(d, {}); }

  const LocalDatum& datum() const { return datum_; }
  const std::vector<TruncatedSeries>& coeffs() const { return c_; }
  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const TruncatedSeries& coeff_ref(int k) const { return c_[std::size_t(k)]; }
  TruncatedSeries coeff(int k) const {
    return (k >= 0 && k < int(c_.size())) ? c_[std::size_t(k)] : TruncatedSeries::zero(datum_);
  }

  bool is_monic() const {
    if (is_zero()) return false;
    const auto& l = c_.back();
    return !l.is_zero() && l.valuation_or(1) == 0 && l.digits().size() == 1 && l.digits()[0] == 1;
  }

  LocalPoly operator+(const LocalPoly& o) const {
    std::vector<TruncatedSeries> r;
    int n = std::max(degree(), o.degree());
    for (int k = 0; k <= n; ++k) r.push_back(coeff(k) + o.coeff(k));
    return LocalPoly(datum_, std::move(r));
  }

  LocalPoly operator-(const LocalPoly& o) const {
    std::vector<TruncatedSeries> r;
    int n = std::max(degree(), o.degree());
    for (int k = 0; k <= n; ++k) r.push_back(coeff(k) - o.coeff(k));
    return LocalPoly(datum_, std::move(r));
  }

  LocalPoly operator*(const LocalPoly& o) const {
    if (is_zero() || o.is_zero()) return zero(datum_);
    std::vector<TruncatedSeries> r(std::size_t(degree() + o.degree() + 1),
                                   TruncatedSeries::zero(datum_));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return LocalPoly(datum_, std::move(r));
  }

  LocalPoly scaled(const TruncatedSeries& s) const {
    std::vector<TruncatedSeries> r;
    for (const auto& a : c_) r.push_back(a * s);
    return LocalPoly(datum_, std::move(r));
  }

  // division by a monic divisor
  std::pair<LocalPoly, LocalPoly> divmod_monic(const LocalPoly& d) const {
    if (!d.is_monic()) fail(ErrorKind::NonMonic, "divisor must be monic");
    std::vector<TruncatedSeries> rem;
    for (const auto& a : c_) rem.push_back(a);
    std::vector<TruncatedSeries> q(
        std::size_t(std::max(0, degree() - d.degree() + 1)), TruncatedSeries::zero(datum_));
    for (int k = int(rem.size()) - 1; k >= d.degree(); --k) {
      TruncatedSeries f = rem[std::size_t(k)];
      if (f.is_zero()) continue;
      q[std::size_t(k - d.degree())] = f;
      for (int i = 0; i <= d.degree(); ++i) {
        std::size_t idx = std::size_t(k - d.degree() + i);
        rem[idx] = rem[idx] - f * d.coeff(i);
      }
    }
    rem.resize(std::size_t(std::max(0, d.degree())), TruncatedSeries::zero(datum_));
    return {LocalPoly(datum_, std::move(q)), LocalPoly(datum_, std::move(rem))};
  }

  // multiply each coefficient's argument: g(y) = f(pi^c y) * pi^{shift}
  LocalPoly scale_variable(std::int64_t c, std::int64_t shift) const {
    std::vector<TruncatedSeries> r;
    for (std::size_t i = 0; i < c_.size(); ++i)
      r.push_back(c_[i].scaled_by_uniformizer(c * std::int64_t(i) + shift));
    return LocalPoly(datum_, std::move(r));
  }

  // reversed polynomial x^n f(1/x); requires nonzero constant term
  LocalPoly reversed() const {
    std::vector<TruncatedSeries> r(c_.rbegin(), c_.rend());
    return LocalPoly(datum_, std::move(r));
  }

  std::int64_t min_precision() const {
    std::int64_t m = INT64_MAX;
    for (const auto& a : c_) m = std::min(m, a.precision());
    return m;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      if (c_[std::size_t(k)].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c_[std::size_t(k)].to_string() + ")";
      if (k > 0) s += "*x^" + std::to_string(k);
    }
    return s;
  }

 private:
  void strip() {
    while (!c_.empty() && c_.back().is_exact_zero()) c_.pop_back();
  }

  LocalDatum datum_;
  std::vector<TruncatedSeries> c_;
};

// ---------- Newton polygon ----------

// Lower convex hull of (i, v(a_i)); slopes are root valuations (the negatives
// of the hull segment slopes), listed increasing with multiplicities summing
// to the degree.
struct NewtonPolygon {
  std::vector<std::pair<std::int64_t, std::int64_t>> breakpoints;  // (index, valuation)
  std::vector<std::pair<Rat, std::int64_t>> slopes;                // (root valuation, multiplicity)
};

inline NewtonPolygon newton_polygon(const LocalPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "newton polygon of zero");
  const int n = f.degree();
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;  // known points
  std::vector<std::pair<std::int64_t, std::int64_t>> unknown;  // (index, precision bound)
  for (int i = 0; i <= n; ++i) {
    const auto& a = f.coeff_ref(i);
    if (auto v = a.valuation())
      pts.emplace_back(i, *v);
    else if (!a.is_exact_zero())
      unknown.emplace_back(i, a.precision());
  }
  if (pts.empty() || pts.front().first != 0 || pts.back().first != n)
    fail(ErrorKind::PrecisionExhausted,
         "leading or constant coefficient has no certified valuation");

  // lower hull, left to right
  std::vector<std::pair<std::int64_t, std::int64_t>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // keep b only if it lies strictly below segment (a, pt)
      Int lhs = Int(b.second - a.second) * Int(pt.first - a.first);
      Int rhs = Int(pt.second - a.second) * Int(b.first - a.first);
      if (lhs < rhs) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }

  // coefficients with unknown valuation must lie strictly above the hull
  for (const auto& [i, prec] : unknown) {
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
      if (hull[k].first <= i && i <= hull[k + 1].first) {
        // hull value at i times (x2-x1): v1*(x2-i) + v2*(i-x1)
        Int num = Int(hull[k].second) * Int(hull[k + 1].first - i) +
                  Int(hull[k + 1].second) * Int(i - hull[k].first);
        Int den_i = Int(hull[k + 1].first - hull[k].first);
        if (Int(prec) * den_i <= num)
          fail(ErrorKind::PrecisionExhausted,
               "coefficient " + std::to_string(i) + " indistinguishable from the polygon");
      }
    }
  }

  NewtonPolygon np;
  np.breakpoints = hull;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    Rat hull_slope(Int(hull[k + 1].second - hull[k].second), Int(hull[k + 1].first - hull[k].first));
    np.slopes.emplace_back(-hull_slope, hull[k + 1].first - hull[k].first);
  }
  std::reverse(np.slopes.begin(), np.slopes.end());  // root valuations increasing
  return np;
}

// ---------- Hensel lifting ----------

namespace detail {

inline FpPoly residue_poly(const LocalPoly& f, std::int64_t level) {
  const Int p = f.datum().p;
  std::vector<Int> cs;
  for (int i = 0; i <= f.degree(); ++i) cs.push_back(f.coeff_ref(i).digit(level));
  return FpPoly(p, std::move(cs));
}

inline TruncatedSeries series_from_fp(const LocalDatum& d, const Int& digit, std::int64_t level,
                                      std::int64_t prec) {
  if (digit == 0) {
    auto z = TruncatedSeries::zero(d, prec);
    return z;
  }
  return TruncatedSeries::from_digits(d, level, {digit}, prec, true);
}

// Lift f = G*H from the coprime residue factorization G0 (monic, y^k) and H0.
// f must have integral coefficients and monic leading term. Returns (G, H).
inline std::pair<LocalPoly, LocalPoly> hensel_lift(const LocalPoly& f, const FpPoly& g0,
                                                   const FpPoly& h0) {
  const LocalDatum& d = f.datum();
  const std::int64_t prec = f.min_precision();
  if (prec <= 1) fail(ErrorKind::PrecisionExhausted, "not enough digits for Hensel lifting");
  const int n = f.degree();
  const int k = g0.degree();

  // Bezout: A*g0 + B*h0 = 1 mod p with g0 = y^k, h0(0) a unit
  FpPoly B = h0.inverse_mod_yk(k);                         // deg < k
  FpPoly one = FpPoly::constant(f.datum().p, Int(1));
  FpPoly A_num = one - (B * h0);
  // A = (1 - B*h0) / y^k
  std::vector<Int> acoef;
  for (int i = k; i <= A_num.degree(); ++i) acoef.push_back(A_num.coeff(i));
  FpPoly A(f.datum().p, std::move(acoef));

  auto lift_fp = [&](const FpPoly& fp, std::int64_t level) {
    std::vector<TruncatedSeries> cs;
    for (int i = 0; i <= fp.degree(); ++i) cs.push_back(series_from_fp(d, fp.coeff(i), level, prec));
    return LocalPoly(d, std::move(cs));
  };

  LocalPoly G = lift_fp(g0, 0);
  LocalPoly H = lift_fp(h0, 0);
  for (std::int64_t m = 1; m < prec; ++m) {
    LocalPoly E = f - G * H;
    FpPoly e = residue_poly(E, m);
    if (e.is_zero()) continue;
    FpPoly u = (B * e).divmod(g0).second;          // deg < k
    FpPoly w = (e - (h0 * u)).divmod(g0).first;    // exact by construction
    if (!(e - (h0 * u)).divmod(g0).second.is_zero())
      fail(ErrorKind::Internal, "hensel correction not divisible");
    G = G + lift_fp(u, m);
    H = H + lift_fp(w, m);
  }
  return {G, H};
}

}  // namespace detail

// One factor of a slope factorization. `slopes` usually has a single entry;
// a combined ramified block lists every slope it holds.
struct SlopeFactor {
  std::vector<std::pair<Rat, std::int64_t>> slopes;
  LocalPoly factor;
  bool ramified = false;

  const Rat& slope() const { return slopes.front().first; }
  std::int64_t multiplicity() const {
    std::int64_t m = 0;
    for (const auto& [s, k] : slopes) m += k;
    return m;
  }
};

namespace detail {

// Split off slopes > c from slopes <= c at an integral cut c.
// Returns (upper, lower) with upper holding the root valuations > c.
inline std::pair<LocalPoly, LocalPoly> split_at_cut(const LocalPoly& f, std::int64_t c) {
  const int n = f.degree();
  // mu = min_i (v(a_i) + c*i)
  std::int64_t mu = INT64_MAX;
  for (int i = 0; i <= n; ++i) {
    auto v = f.coeff_ref(i).valuation();
    if (v) mu = std::min(mu, *v + c * std::int64_t(i));
  }
  LocalPoly F = f.scale_variable(c, -mu);
  FpPoly Fbar = detail::residue_poly(F, 0);
  // Fbar = y^k1 * w with w(0) != 0
  int k1 = 0;
  while (k1 <= Fbar.degree() && Fbar.coeff(k1) == 0) ++k1;
  if (k1 > Fbar.degree()) fail(ErrorKind::Internal, "empty residue at cut");
  std::vector<Int> wc;
  for (int i = k1; i <= Fbar.degree(); ++i) wc.push_back(Fbar.coeff(i));
  FpPoly w(f.datum().p, std::move(wc));
  FpPoly g0(f.datum().p, [&] {
    std::vector<Int> v(std::size_t(k1) + 1, Int(0));
    v.back() = 1;
    return v;
  }());
  if (k1 == 0) fail(ErrorKind::Internal, "cut does not separate");

  auto [G, H] = detail::hensel_lift(F, g0, w);
  (void)H;
  // unscale G: upper(x) = pi^{c*k1} G(x/pi^c)
  std::vector<TruncatedSeries> gc;
  for (int i = 0; i <= G.degree(); ++i)
    gc.push_back(G.coeff(i).scaled_by_uniformizer(c * (std::int64_t(k1) - std::int64_t(i))));
  LocalPoly upper(f.datum(), std::move(gc));
  auto [lower, rem] = f.divmod_monic(upper);
  for (const auto& r : rem.coeffs())
    if (!r.is_zero() && r.valuation_or(0) < r.precision() - 1 && r.digits().size() > 1)
      fail(ErrorKind::PrecisionExhausted, "factor division left a visible remainder");
  return {upper, lower};
}

}  // namespace detail

// Normalize to monic by the inverse of the leading unit.
inline LocalPoly monicize(const LocalPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "monicize of zero");
  const auto& lead = f.coeffs().back();
  if (lead.is_zero()) fail(ErrorKind::PrecisionExhausted, "leading coefficient invisible");
  if (f.is_monic()) return f;
  TruncatedSeries inv = f.datum().kind == LocalDatum::Kind::TorsionSeries
                            ? lead.invert_general()
                            : lead.invert();
  LocalPoly g = f.scaled(inv);
  // force the leading coefficient to an exact one
  auto cs = g.coeffs();
  cs.back() = TruncatedSeries::from_int(f.datum(), 1, cs.back().precision());
  return LocalPoly(f.datum(), std::move(cs));
}

// Newton-polygon slope factorization over F_p((t)) or Q_p.
// Factors with integral slopes are fully separated; non-integral slopes are
// flagged ramified and never split below a single slope. Adjacent non-integral
// slopes with no integral cut between them stay in one combined block.
inline std::vector<SlopeFactor> slope_factorize(const LocalPoly& f_in) {
  if (f_in.datum().kind == LocalDatum::Kind::TorsionSeries)
    fail(ErrorKind::UnsupportedDescriptor, "slope factorization over a torsion ring");
  LocalPoly f = monicize(f_in);
  if (!f.coeff_ref(0).valuation())
    fail(f.coeff_ref(0).is_exact_zero() ? ErrorKind::ZeroPolynomial : ErrorKind::PrecisionExhausted,
         "constant term must be nonzero (invertible action)");

  std::vector<SlopeFactor> out;
  std::vector<LocalPoly> work{f};
  while (!work.empty()) {
    LocalPoly r = std::move(work.back());
    work.pop_back();
    if (r.degree() == 0) continue;
    NewtonPolygon np = newton_polygon(r);
    if (np.slopes.size() == 1) {
      SlopeFactor sf;
      sf.slopes = np.slopes;
      sf.ramified = !is_integer(np.slopes[0].first);
      sf.factor = std::move(r);
      out.push_back(std::move(sf));
      continue;
    }
    // find the lowest i with an integral cut c, s_i <= c < s_{i+1}
    bool cut_found = false;
    for (std::size_t i = 0; i + 1 < np.slopes.size() && !cut_found; ++i) {
      const Rat& lo = np.slopes[i].first;
      const Rat& hi = np.slopes[i + 1].first;
      // smallest integer >= lo
      Int c = num(lo) / den(lo);
      if (Rat(c) < lo) c += 1;
      if (Rat(c) < hi) {
        auto [upper, lower] = detail::split_at_cut(r, c.convert_to<std::int64_t>());
        work.push_back(std::move(upper));
        work.push_back(std::move(lower));
        cut_found = true;
      }
    }
    if (!cut_found) {
      // all slopes are squeezed between consecutive integers: one ramified block
      SlopeFactor sf;
      sf.slopes = np.slopes;
      sf.ramified = true;
      sf.factor = std::move(r);
      out.push_back(std::move(sf));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SlopeFactor& a, const SlopeFactor& b) { return a.slope() < b.slope(); });
  return out;
}

}  // namespace lcmod
