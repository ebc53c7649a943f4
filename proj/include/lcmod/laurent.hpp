#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcmod/coeff.hpp"
#include "lcmod/numeric.hpp"

namespace lcmod {

// Exponent vector of a monomial in d variables (a group element of Z^d).
using Exponents = std::vector<Int>;

struct LexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

// Rational character chi in Hom(Z^d, Q).
struct Character {
  std::vector<Rat> entries;

  Character() = default;
  explicit Character(std::vector<Rat> e) : entries(std::move(e)) {}

  int rank() const { return int(entries.size()); }
  bool is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const Rat& q) { return q == 0; });
  }

  Rat dot(const Exponents& e) const {
    if (e.size() != entries.size()) fail(ErrorKind::RankMismatch, "character/exponent rank mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += entries[i] * Rat(e[i]);
    return s;
  }

  bool operator==(const Character& o) const { return entries == o.entries; }
};

// Multivariate Laurent polynomial over an exact coefficient ring.
// Terms are kept in lexicographic exponent order with no zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() : rank_(0), ring_(CoeffRing::integers()) {}
  LaurentPoly(int rank, CoeffRing ring) : rank_(rank), ring_(std::move(ring)) {}

  // laurent_normalize: sums duplicate exponents, drops zeros, reduces into the ring.
  static LaurentPoly normalize(int rank, const CoeffRing& ring,
                               const std::vector<std::pair<Exponents, Rat>>& raw) {
    LaurentPoly f(rank, ring);
    for (const auto& [e, c] : raw) {
      if (int(e.size()) != rank) fail(ErrorKind::RankMismatch, "exponent vector of wrong length");
      f.add_term(e, c);
    }
    return f;
  }

  static LaurentPoly zero(int rank, const CoeffRing& ring) { return LaurentPoly(rank, ring); }

  static LaurentPoly constant(int rank, const CoeffRing& ring, const Rat& c) {
    LaurentPoly f(rank, ring);
    f.add_term(Exponents(std::size_t(rank), 0), c);
    return f;
  }

  static LaurentPoly monomial(int rank, const CoeffRing& ring, const Exponents& e, const Rat& c) {
    if (int(e.size()) != rank) fail(ErrorKind::RankMismatch, "exponent vector of wrong length");
    LaurentPoly f(rank, ring);
    f.add_term(e, c);
    return f;
  }

  int rank() const { return rank_; }
  const CoeffRing& ring() const { return ring_; }
  const std::map<Exponents, Rat, LexLess>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_monomial() const { return terms_.size() == 1; }

  // single term with a unit coefficient (the invertible elements of ring[Q])
  bool is_unit_monomial() const {
    return terms_.size() == 1 && ring_.is_unit(terms_.begin()->second);
  }

  Rat coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Exponents& e, const Rat& c) {
    if (int(e.size()) != rank_) fail(ErrorKind::RankMismatch, "exponent vector of wrong length");
    auto it = terms_.find(e);
    Rat s = ring_.normalize(it == terms_.end() ? c : it->second + c);
    if (s == 0) {
      if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
      terms_.emplace(e, s);
    } else {
      it->second = s;
    }
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r(rank_, ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, ring_.neg(c));
    return r;
  }

  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

  LaurentPoly operator*(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r(rank_, ring_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        auto e = Exponents(std::size_t(rank_));
        for (int i = 0; i < rank_; ++i) e[std::size_t(i)] = e1[std::size_t(i)] + e2[std::size_t(i)];
        r.add_term(e, c1 * c2);
      }
    return r;
  }

  LaurentPoly scaled(const Rat& c) const {
    LaurentPoly r(rank_, ring_);
    for (const auto& [e, cc] : terms_) r.add_term(e, cc * c);
    return r;
  }

  // monomial shift: multiply by x^e
  LaurentPoly shifted(const Exponents& e) const {
    LaurentPoly r(rank_, ring_);
    for (const auto& [e1, c] : terms_) {
      auto e2 = Exponents(std::size_t(rank_));
      for (int i = 0; i < rank_; ++i) e2[std::size_t(i)] = e1[std::size_t(i)] + e[std::size_t(i)];
      r.terms_.emplace(e2, c);
    }
    return r;
  }

  bool operator==(const LaurentPoly& o) const {
    return rank_ == o.rank_ && ring_ == o.ring_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // char_value: min of <chi, e> over the support; empty optional encodes +infinity
  // for the zero polynomial.
  std::optional<Rat> char_value(const Character& chi) const {
    if (chi.rank() != rank_) fail(ErrorKind::RankMismatch, "character rank mismatch");
    std::optional<Rat> m;
    for (const auto& [e, c] : terms_) {
      Rat v = chi.dot(e);
      if (!m || v < *m) m = v;
    }
    return m;
  }

  // ----- univariate (rank 1) helpers -----

  // t-adic valuation: smallest exponent in the support (rank 1, nonzero)
  Int t_valuation() const {
    require_rank1();
    if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "valuation of zero polynomial");
    return terms_.begin()->first[0];
  }

  Int max_degree() const {
    require_rank1();
    if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "degree of zero polynomial");
    return terms_.rbegin()->first[0];
  }

  Rat coeff_at(const Int& deg) const {
    require_rank1();
    return coeff(Exponents{deg});
  }

  static LaurentPoly univar(const CoeffRing& ring, std::vector<std::pair<Int, Rat>> tcoeffs) {
    LaurentPoly f(1, ring);
    for (auto& [d, c] : tcoeffs) f.add_term(Exponents{d}, c);
    return f;
  }

  std::string to_string(const std::vector<std::string>& vars = {}) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (int i = 0; i < rank_; ++i) {
        if (e[std::size_t(i)] == 0) continue;
        std::string v = std::size_t(i) < vars.size() ? vars[std::size_t(i)]
                        : rank_ == 1               ? "t"
                                                   : "x" + std::to_string(i + 1);
        mono += (mono.empty() ? "" : "*") + v;
        if (e[std::size_t(i)] != 1) mono += "^" + e[std::size_t(i)].str();
      }
      std::string cs;
      if (mono.empty())
        cs = rat_str(c);
      else if (c == 1)
        cs = mono;
      else if (c == -1)
        cs = "-" + mono;
      else
        cs = rat_str(c) + "*" + mono;
      if (!first && cs[0] != '-') s += "+";
      s += cs;
      first = false;
    }
    return s;
  }

  static std::string rat_str(const Rat& q) {
    return is_integer(q) ? num(q).str() : num(q).str() + "/" + den(q).str();
  }

 private:
  void check_compatible(const LaurentPoly& o) const {
    if (rank_ != o.rank_) fail(ErrorKind::RankMismatch, "polynomial ranks differ");
    if (ring_ != o.ring_) fail(ErrorKind::CoefficientOutOfRing, "coefficient rings differ");
  }
  void require_rank1() const {
    if (rank_ != 1) fail(ErrorKind::RankMismatch, "univariate operation on rank != 1");
  }

  int rank_;
  CoeffRing ring_;
  std::map<Exponents, Rat, LexLess> terms_;
};

}  // namespace lcmod
