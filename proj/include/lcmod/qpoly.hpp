#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "lcmod/numeric.hpp"

namespace lcmod {

// Dense univariate polynomial over Q, coefficients low degree first.
struct QPoly {
  std::vector<Rat> c;

  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { strip(); }

  static QPoly zero() { return QPoly(); }
  static QPoly constant(const Rat& a) { return QPoly({a}); }
  static QPoly x() { return QPoly({Rat(0), Rat(1)}); }

  void strip() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return int(c.size()) - 1; }  // -1 for zero
  const Rat& lead() const { return c.back(); }

  Rat coeff(int k) const { return (k >= 0 && k < int(c.size())) ? c[std::size_t(k)] : Rat(0); }

  Rat eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
  }

  QPoly operator+(const QPoly& o) const {
    std::vector<Rat> r(std::max(c.size(), o.c.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
    return QPoly(std::move(r));
  }

  QPoly operator-() const {
    QPoly r = *this;
    for (auto& a : r.c) a = -a;
    return r;
  }

  QPoly operator-(const QPoly& o) const { return *this + (-o); }

  QPoly operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> r(c.size() + o.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return QPoly(std::move(r));
  }

  QPoly scaled(const Rat& a) const {
    QPoly r = *this;
    for (auto& x : r.c) x *= a;
    r.strip();
    return r;
  }

  QPoly monic() const {
    if (is_zero()) fail(ErrorKind::Internal, "monic of zero polynomial");
    return scaled(Rat(1) / lead());
  }

  // (quotient, remainder) with deg r < deg d
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
    if (d.is_zero()) fail(ErrorKind::Internal, "division by zero polynomial");
    QPoly r = *this;
    std::vector<Rat> q(std::size_t(std::max(0, degree() - d.degree() + 1)), Rat(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int k = r.degree() - d.degree();
      Rat f = r.lead() / d.lead();
      q[std::size_t(k)] = f;
      for (std::size_t i = 0; i < d.c.size(); ++i) r.c[std::size_t(k) + i] -= f * d.c[i];
      r.strip();
    }
    return {QPoly(std::move(q)), r};
  }

  QPoly derivative() const {
    if (c.size() <= 1) return QPoly();
    std::vector<Rat> r(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * Rat(Int(i));
    return QPoly(std::move(r));
  }

  // x^deg * p(1/x)
  QPoly reversed() const {
    std::vector<Rat> r(c.rbegin(), c.rend());
    return QPoly(std::move(r));
  }

  bool operator==(const QPoly& o) const { return c == o.c; }
};

inline QPoly qpoly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

inline QPoly qpoly_exact_div(const QPoly& a, const QPoly& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) fail(ErrorKind::Internal, "inexact polynomial division");
  return q;
}

// Yun's square-free decomposition: f = prod g_i^i (up to the leading constant).
inline std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
  std::vector<std::pair<QPoly, int>> out;
  if (f.degree() <= 0) return out;
  QPoly a = f.monic();
  QPoly g = qpoly_gcd(a, a.derivative());
  if (g.degree() == 0) {
    out.emplace_back(a, 1);
    return out;
  }
  QPoly w = qpoly_exact_div(a, g);
  QPoly y = qpoly_exact_div(a.derivative(), g);
  QPoly z = y - w.derivative();
  int i = 1;
  while (!z.is_zero()) {
    QPoly gi = qpoly_gcd(w, z);
    if (gi.degree() > 0) out.emplace_back(gi, i);
    w = qpoly_exact_div(w, gi);
    y = qpoly_exact_div(z, gi);
    z = y - w.derivative();
    ++i;
  }
  if (w.degree() > 0) out.emplace_back(w.monic(), i);
  return out;
}

namespace detail {

inline int sgn(const Rat& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

inline int sign_at(const QPoly& p, const Rat& x) { return sgn(p.eval(x)); }

// sign of p at +infinity / -infinity
inline int sign_at_pinf(const QPoly& p) { return p.is_zero() ? 0 : sgn(p.lead()); }
inline int sign_at_ninf(const QPoly& p) {
  if (p.is_zero()) return 0;
  int s = sgn(p.lead());
  return (p.degree() % 2 == 0) ? s : -s;
}

inline int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// signed remainder sequence starting from (a, b)
inline std::vector<QPoly> sturm_sequence(QPoly a, QPoly b) {
  std::vector<QPoly> seq;
  seq.push_back(std::move(a));
  if (!b.is_zero()) seq.push_back(std::move(b));
  while (seq.size() >= 2 && !seq.back().is_zero()) {
    QPoly r = -(seq[seq.size() - 2].divmod(seq.back()).second);
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

}  // namespace detail

// Number of distinct real roots of square-free f in the open interval (a, b);
// f(a) != 0 and f(b) != 0 are required.
inline int count_real_roots_open(const QPoly& f, const Rat& a, const Rat& b) {
  if (f.degree() <= 0) return 0;
  if (f.eval(a) == 0 || f.eval(b) == 0) fail(ErrorKind::Internal, "interval endpoint is a root");
  auto seq = detail::sturm_sequence(f, f.derivative());
  std::vector<int> sa, sb;
  for (const auto& p : seq) {
    sa.push_back(detail::sign_at(p, a));
    sb.push_back(detail::sign_at(p, b));
  }
  return detail::variations(sa) - detail::variations(sb);
}

inline int count_real_roots(const QPoly& f) {
  if (f.degree() <= 0) return 0;
  auto seq = detail::sturm_sequence(f, f.derivative());
  std::vector<int> sn, sp;
  for (const auto& p : seq) {
    sn.push_back(detail::sign_at_ninf(p));
    sp.push_back(detail::sign_at_pinf(p));
  }
  return detail::variations(sn) - detail::variations(sp);
}

// Cauchy index of b/a over the whole real line.
inline int cauchy_index(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  auto seq = detail::sturm_sequence(a, b);
  std::vector<int> sn, sp;
  for (const auto& p : seq) {
    sn.push_back(detail::sign_at_ninf(p));
    sp.push_back(detail::sign_at_pinf(p));
  }
  return detail::variations(sn) - detail::variations(sp);
}

// For square-free real P with no roots on the imaginary axis:
// (number of roots with Re < 0) - (number with Re > 0).
inline int lhp_minus_rhp(const QPoly& P) {
  int n = P.degree();
  if (n <= 0) return 0;
  // P(iy) = A(y) + i B(y)
  std::vector<Rat> ac(P.c.size(), Rat(0)), bc(P.c.size(), Rat(0));
  for (int k = 0; k <= n; ++k) {
    switch (k % 4) {
      case 0: ac[std::size_t(k)] = P.c[std::size_t(k)]; break;
      case 1: bc[std::size_t(k)] = P.c[std::size_t(k)]; break;
      case 2: ac[std::size_t(k)] = -P.c[std::size_t(k)]; break;
      case 3: bc[std::size_t(k)] = -P.c[std::size_t(k)]; break;
    }
  }
  QPoly A{std::move(ac)}, B{std::move(bc)};
  A.strip();
  B.strip();
  return (n % 2 == 0) ? -cauchy_index(A, B) : cauchy_index(B, A);
}

struct DiskCounts {
  std::int64_t inside = 0;   // |root| < 1
  std::int64_t on = 0;       // |root| = 1
  std::int64_t outside = 0;  // |root| > 1
};

namespace detail {

// counts for a square-free polynomial
inline DiskCounts disk_counts_squarefree(QPoly g) {
  DiskCounts dc;
  // roots at 0 lie inside
  std::size_t k = 0;
  while (k < g.c.size() && g.c[k] == 0) ++k;
  if (k > 0) {
    dc.inside += std::int64_t(k);
    g.c.erase(g.c.begin(), g.c.begin() + std::ptrdiff_t(k));
  }
  if (g.degree() <= 0) return dc;
  // roots at +-1 lie on the circle
  for (Rat r : {Rat(1), Rat(-1)}) {
    if (g.eval(r) == 0) {
      dc.on += 1;
      g = qpoly_exact_div(g, QPoly({-r, Rat(1)}));
    }
  }
  if (g.degree() <= 0) return dc;

  // reciprocal part s: roots closed under x -> 1/x
  QPoly s = qpoly_gcd(g, g.reversed());
  QPoly u = qpoly_exact_div(g, s);

  if (s.degree() > 0) {
    int m = s.degree();
    if (m % 2 != 0) fail(ErrorKind::Internal, "odd reciprocal part after removing +-1 roots");
    // self-reciprocity (up to sign) must hold; sign -1 would force s(1) = 0
    // z = x + 1/x turns s into T with deg T = m/2; on-circle pairs <-> real z in (-2, 2)
    std::vector<QPoly> V;  // V_j(z) = x^j + x^-j
    V.push_back(QPoly::constant(Rat(2)));
    V.push_back(QPoly::x());
    for (int j = 2; j <= m / 2; ++j) V.push_back(QPoly::x() * V[std::size_t(j - 1)] - V[std::size_t(j - 2)]);
    QPoly T = QPoly::constant(s.coeff(m / 2));
    for (int j = 1; j <= m / 2; ++j) T = T + V[std::size_t(j)].scaled(s.coeff(m / 2 + j));
    int on_pairs = count_real_roots_open(T, Rat(-2), Rat(2));
    dc.on += 2 * on_pairs;
    std::int64_t off = m - 2 * on_pairs;  // reciprocal pairs off the circle, half each side
    dc.inside += off / 2;
    dc.outside += off / 2;
  }

  if (u.degree() > 0) {
    // u has no roots on the circle and no reciprocal pairs;
    // x = (w+1)/(w-1) maps the open disk to the left half-plane
    int m = u.degree();
    QPoly wp1({Rat(1), Rat(1)}), wm1({Rat(-1), Rat(1)});
    QPoly U = QPoly::zero();
    QPoly pw = QPoly::constant(Rat(1));  // (w+1)^j
    std::vector<QPoly> lows(std::size_t(m + 1));
    lows[0] = QPoly::constant(Rat(1));
    for (int j = 1; j <= m; ++j) lows[std::size_t(j)] = lows[std::size_t(j - 1)] * wm1;
    for (int j = 0; j <= m; ++j) {
      U = U + (pw * lows[std::size_t(m - j)]).scaled(u.coeff(j));
      pw = pw * wp1;
    }
    if (U.degree() != m) fail(ErrorKind::Internal, "Moebius transform degree drop");
    int diff = lhp_minus_rhp(U);
    std::int64_t in = (m + diff) / 2;
    dc.inside += in;
    dc.outside += m - in;
  }
  return dc;
}

}  // namespace detail

// Exact root location relative to the unit circle, with multiplicity.
inline DiskCounts unit_circle_counts(const QPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "unit_circle_counts of zero");
  DiskCounts dc;
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    DiskCounts d = detail::disk_counts_squarefree(g);
    dc.inside += d.inside * mult;
    dc.on += d.on * mult;
    dc.outside += d.outside * mult;
  }
  return dc;
}

}  // namespace lcmod
