#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "lcmod/laurent.hpp"

namespace lcmod {

using IVec = std::vector<Int>;

inline Int ivec_dot(const IVec& a, const Exponents& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IVec ivec_add(const IVec& a, const IVec& b) {
  IVec r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

inline IVec ivec_neg(IVec a) {
  for (auto& x : a) x = -x;
  return a;
}

inline bool ivec_is_zero(const IVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

inline IVec cross3(const IVec& a, const IVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Integer basis of { x in Q^d : <x, v> = 0 for all v }, scaled primitive.
inline std::vector<IVec> integer_kernel_basis(const std::vector<IVec>& vecs, int d) {
  // rational row reduction of the constraint matrix
  std::vector<std::vector<Rat>> rows;
  for (const auto& v : vecs) {
    std::vector<Rat> r(v.begin(), v.end());
    rows.push_back(std::move(r));
  }
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < d && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][std::size_t(col)] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Rat lead = rows[rank][std::size_t(col)];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      Rat f = rows[r][std::size_t(col)];
      if (f == 0) continue;
      for (int c = 0; c < d; ++c) rows[r][std::size_t(c)] -= f * rows[rank][std::size_t(c)];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<IVec> basis;
  std::set<int> pivots(pivot_col.begin(), pivot_col.end());
  for (int free_col = 0; free_col < d; ++free_col) {
    if (pivots.count(free_col)) continue;
    std::vector<Rat> x(std::size_t(d), Rat(0));
    x[std::size_t(free_col)] = 1;
    for (std::size_t r = 0; r < rank; ++r)
      x[std::size_t(pivot_col[r])] = -rows[r][std::size_t(free_col)];
    basis.push_back(primitive_direction(x));
  }
  return basis;
}

// A face of a Newton polytope: its support points, dimension, the polytope
// vertices it contains, generators of its closed normal cone, and the
// initial form of the source polynomial on it.
struct NewtonFace {
  std::vector<Exponents> support;
  int dim = 0;
  std::vector<std::size_t> vertex_ids;
  std::vector<IVec> normal_generators;
  LaurentPoly initial_form;
};

class NewtonPolytope {
 public:
  // Face enumeration by exact normal-direction search; d <= 3 only.
  explicit NewtonPolytope(const LaurentPoly& m) : rank_(m.rank()), source_(m) {
    if (m.is_zero()) fail(ErrorKind::ZeroPolynomial, "newton_polytope of zero polynomial");
    if (rank_ < 1 || rank_ > 3) fail(ErrorKind::RankTooLarge, "newton_polytope supports 1 <= d <= 3");
    for (const auto& [e, c] : m.terms()) support_.push_back(e);
    build();
  }

  int rank() const { return rank_; }
  const std::vector<Exponents>& support() const { return support_; }
  const std::vector<Exponents>& vertices() const { return vertices_; }
  const std::vector<NewtonFace>& faces() const { return faces_; }
  const std::vector<IVec>& lineality() const { return lineality_; }
  int affine_dim() const { return affine_dim_; }

  // argmin support of a rational character
  std::vector<Exponents> argmin(const Character& chi) const {
    std::vector<Exponents> out;
    std::optional<Rat> best;
    for (const auto& e : support_) {
      Rat v = chi.dot(e);
      if (!best || v < *best) {
        best = v;
        out.clear();
      }
      if (v == *best) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
  }

  // the unique face on which chi attains its minimum
  const NewtonFace& locate(const Character& chi) const {
    auto t = argmin(chi);
    auto it = face_by_support_.find(t);
    if (it == face_by_support_.end()) fail(ErrorKind::Internal, "argmin set is not a face");
    return faces_[it->second];
  }

  // chi lies in the closed normal cone of the face iff its argmin contains the face
  bool normal_cone_contains(const NewtonFace& f, const Character& chi) const {
    auto t = argmin(chi);
    return std::includes(t.begin(), t.end(), f.support.begin(), f.support.end(), LexLess{});
  }

 private:
  using Support = std::vector<Exponents>;

  static int affine_dim_of(const std::vector<IVec>& diffs, int d) {
    // rank of the difference set via rational elimination
    std::vector<std::vector<Rat>> rows;
    for (const auto& v : diffs) rows.emplace_back(v.begin(), v.end());
    int rank = 0;
    for (int col = 0; col < d && rank < int(rows.size()); ++col) {
      int piv = rank;
      while (piv < int(rows.size()) && rows[std::size_t(piv)][std::size_t(col)] == 0) ++piv;
      if (piv == int(rows.size())) continue;
      std::swap(rows[std::size_t(rank)], rows[std::size_t(piv)]);
      for (int r = 0; r < int(rows.size()); ++r) {
        if (r == rank) continue;
        Rat f = rows[std::size_t(r)][std::size_t(col)] / rows[std::size_t(rank)][std::size_t(col)];
        if (f == 0) continue;
        for (int c = 0; c < d; ++c)
          rows[std::size_t(r)][std::size_t(c)] -= f * rows[std::size_t(rank)][std::size_t(c)];
      }
      ++rank;
    }
    return rank;
  }

  Support argmin_int(const IVec& n) const {
    Support out;
    std::optional<Int> best;
    for (const auto& e : support_) {
      Int v = ivec_dot(n, e);
      if (!best || v < *best) {
        best = v;
        out.clear();
      }
      if (v == *best) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
  }

  void build() {
    const int d = rank_;
    std::sort(support_.begin(), support_.end(), LexLess{});

    std::vector<IVec> diffs;
    for (std::size_t i = 1; i < support_.size(); ++i) {
      auto v = IVec(std::size_t(d));
      for (int c = 0; c < d; ++c) v[std::size_t(c)] = support_[i][std::size_t(c)] - support_[0][std::size_t(c)];
      diffs.push_back(std::move(v));
    }
    affine_dim_ = affine_dim_of(diffs, d);
    lineality_ = integer_kernel_basis(diffs, d);

    // candidate relative facet normals
    std::set<IVec> cand;
    auto add_cand = [&](IVec v) {
      if (ivec_is_zero(v)) return;
      v = primitive_vector(std::move(v));
      cand.insert(v);
      cand.insert(ivec_neg(v));
    };
    auto diff_of = [&](std::size_t i, std::size_t j) {
      auto v = IVec(std::size_t(d));
      for (int c = 0; c < d; ++c) v[std::size_t(c)] = support_[i][std::size_t(c)] - support_[j][std::size_t(c)];
      return v;
    };
    const std::size_t ns = support_.size();
    if (affine_dim_ == 1) {
      for (std::size_t i = 1; i < ns; ++i) add_cand(diff_of(i, 0));
    } else if (affine_dim_ == 2) {
      if (d == 2) {
        for (std::size_t i = 0; i < ns; ++i)
          for (std::size_t j = i + 1; j < ns; ++j) {
            IVec v = diff_of(i, j);
            add_cand({-v[1], v[0]});
          }
      } else {  // planar support in rank 3: in-plane edge normals
        IVec plane_normal;
        for (std::size_t i = 1; i < ns && plane_normal.empty(); ++i)
          for (std::size_t j = i + 1; j < ns; ++j) {
            IVec n = cross3(diff_of(i, 0), diff_of(j, 0));
            if (!ivec_is_zero(n)) {
              plane_normal = primitive_vector(n);
              break;
            }
          }
        for (std::size_t i = 0; i < ns; ++i)
          for (std::size_t j = i + 1; j < ns; ++j) add_cand(cross3(diff_of(i, j), plane_normal));
      }
    } else if (affine_dim_ == 3) {
      for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = i + 1; j < ns; ++j)
          for (std::size_t k = j + 1; k < ns; ++k) add_cand(cross3(diff_of(j, i), diff_of(k, i)));
    }

    // facets: argmin faces of codimension one inside the affine hull
    std::map<Support, IVec> facet_normal;
    for (const auto& n : cand) {
      Support t = argmin_int(n);
      if (t.size() == support_.size()) continue;
      std::vector<IVec> tdiffs;
      for (std::size_t i = 1; i < t.size(); ++i) {
        auto v = IVec(std::size_t(d));
        for (int c = 0; c < d; ++c) v[std::size_t(c)] = t[i][std::size_t(c)] - t[0][std::size_t(c)];
        tdiffs.push_back(std::move(v));
      }
      if (affine_dim_of(tdiffs, d) == affine_dim_ - 1) facet_normal.emplace(std::move(t), n);
    }

    // all faces: facet supports closed under intersection, plus the whole polytope
    std::set<Support> face_supports;
    face_supports.insert(support_);
    for (const auto& [t, n] : facet_normal) face_supports.insert(t);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Support> cur(face_supports.begin(), face_supports.end());
      for (std::size_t i = 0; i < cur.size(); ++i)
        for (std::size_t j = i + 1; j < cur.size(); ++j) {
          Support inter;
          std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(), cur[j].end(),
                                std::back_inserter(inter), LexLess{});
          if (!inter.empty() && !face_supports.count(inter)) {
            face_supports.insert(inter);
            grew = true;
          }
        }
    }

    // keep those candidate supports that are argmin sets, and assemble faces
    for (const auto& t : face_supports) {
      std::vector<IVec> gens;
      auto sum = IVec(std::size_t(d), Int(0));
      for (const auto& [ft, fn] : facet_normal)
        if (std::includes(ft.begin(), ft.end(), t.begin(), t.end(), LexLess{})) {
          gens.push_back(fn);
          sum = ivec_add(sum, fn);
        }
      if (t != support_ && argmin_int(sum) != t) continue;

      NewtonFace f;
      f.support = t;
      std::vector<IVec> tdiffs;
      for (std::size_t i = 1; i < t.size(); ++i) {
        auto v = IVec(std::size_t(d));
        for (int c = 0; c < d; ++c) v[std::size_t(c)] = t[i][std::size_t(c)] - t[0][std::size_t(c)];
        tdiffs.push_back(std::move(v));
      }
      f.dim = affine_dim_of(tdiffs, d);
      for (const auto& l : lineality_) {
        f.normal_generators.push_back(l);
        f.normal_generators.push_back(ivec_neg(l));
      }
      for (auto& g : gens) f.normal_generators.push_back(std::move(g));
      LaurentPoly init(rank_, source_.ring());
      for (const auto& e : t) init.add_term(e, source_.coeff(e));
      f.initial_form = std::move(init);
      faces_.push_back(std::move(f));
    }

    std::sort(faces_.begin(), faces_.end(), [](const NewtonFace& a, const NewtonFace& b) {
      if (a.dim != b.dim) return a.dim < b.dim;
      return std::lexicographical_compare(a.support.begin(), a.support.end(), b.support.begin(),
                                          b.support.end(), LexLess{});
    });

    for (const auto& f : faces_)
      if (f.dim == 0) vertices_.push_back(f.support[0]);

    for (std::size_t i = 0; i < faces_.size(); ++i) {
      for (std::size_t vi = 0; vi < vertices_.size(); ++vi)
        if (std::binary_search(faces_[i].support.begin(), faces_[i].support.end(), vertices_[vi],
                               LexLess{}))
          faces_[i].vertex_ids.push_back(vi);
      face_by_support_.emplace(faces_[i].support, i);
    }
  }

  struct SupportLess {
    bool operator()(const std::vector<Exponents>& a, const std::vector<Exponents>& b) const {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), LexLess{});
    }
  };

  int rank_;
  LaurentPoly source_;
  std::vector<Exponents> support_;
  std::vector<Exponents> vertices_;
  std::vector<NewtonFace> faces_;
  std::vector<IVec> lineality_;
  int affine_dim_ = 0;
  std::map<std::vector<Exponents>, std::size_t, SupportLess> face_by_support_;
};

inline NewtonPolytope newton_polytope(const LaurentPoly& m) { return NewtonPolytope(m); }

}  // namespace lcmod
