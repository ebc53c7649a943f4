#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lcmod/polytope.hpp"

using namespace lcmod;

namespace {

LaurentPoly make(int rank, const CoeffRing& ring,
                 std::vector<std::pair<std::vector<long>, long>> terms) {
  std::vector<std::pair<Exponents, Rat>> raw;
  for (auto& [e, c] : terms) {
    Exponents ev;
    for (long x : e) ev.push_back(Int(x));
    raw.emplace_back(ev, Rat(c));
  }
  return LaurentPoly::normalize(rank, ring, raw);
}

bool has_ray(const std::vector<IVec>& gens, std::vector<long> v) {
  IVec iv;
  for (long x : v) iv.push_back(Int(x));
  return std::find(gens.begin(), gens.end(), iv) != gens.end();
}

}  // namespace

TEST_CASE("segment polytope of x-2") {
  auto z = CoeffRing::integers();
  auto f = make(1, z, {{{1}, 1}, {{0}, -2}});
  NewtonPolytope np(f);
  REQUIRE(np.vertices().size() == 2);
  CHECK(np.vertices()[0] == Exponents{Int(0)});
  CHECK(np.vertices()[1] == Exponents{Int(1)});

  // faces: two vertices and the whole segment
  REQUIRE(np.faces().size() == 3);
  const auto& v0 = np.locate(Character({Rat(1)}));
  CHECK(v0.support == std::vector<Exponents>{{Int(0)}});
  CHECK(v0.initial_form.coeff({Int(0)}) == -2);  // initial form at chi=+1 is the constant -2
  const auto& v1 = np.locate(Character({Rat(-1)}));
  CHECK(v1.support == std::vector<Exponents>{{Int(1)}});
  CHECK(v1.initial_form.is_monomial());
  CHECK(has_ray(v0.normal_generators, {1}));
  CHECK(has_ray(v1.normal_generators, {-1}));
}

TEST_CASE("standard triangle 1+x+y over F_2") {
  auto f2 = CoeffRing::prime_field(Int(2));
  auto f = make(2, f2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
  NewtonPolytope np(f);
  REQUIRE(np.vertices().size() == 3);

  // edge normal cones are the rays (0,1), (1,0), (-1,-1)
  int edges = 0;
  bool r01 = false, r10 = false, rm = false;
  for (const auto& face : np.faces()) {
    if (face.dim != 1) continue;
    ++edges;
    REQUIRE(face.normal_generators.size() == 1);
    r01 |= has_ray(face.normal_generators, {0, 1});
    r10 |= has_ray(face.normal_generators, {1, 0});
    rm |= has_ray(face.normal_generators, {-1, -1});
    CHECK(face.initial_form.term_count() == 2);
  }
  CHECK(edges == 3);
  CHECK(r01);
  CHECK(r10);
  CHECK(rm);

  // vertex cones have two generators each
  for (const auto& face : np.faces())
    if (face.dim == 0) CHECK(face.normal_generators.size() == 2);
}

TEST_CASE("constant polynomial has point polytope with full normal cone") {
  auto z = CoeffRing::integers();
  auto f = make(2, z, {{{0, 0}, 7}});
  NewtonPolytope np(f);
  CHECK(np.vertices().size() == 1);
  REQUIRE(np.faces().size() == 1);
  // normal cone = all of Q^*: lineality basis of rank 2, stored as +- pairs
  CHECK(np.faces()[0].normal_generators.size() == 4);
  CHECK(np.normal_cone_contains(np.faces()[0], Character({Rat(3), Rat(-5)})));
}

TEST_CASE("degenerate planar support in rank 3") {
  auto z = CoeffRing::integers();
  // support {(0,0,0), (1,0,0), (0,1,0)}: a triangle inside z=0
  auto f = make(3, z, {{{0, 0, 0}, 1}, {{1, 0, 0}, 1}, {{0, 1, 0}, 2}});
  NewtonPolytope np(f);
  CHECK(np.affine_dim() == 2);
  REQUIRE(np.lineality().size() == 1);
  CHECK(np.lineality()[0] == IVec{Int(0), Int(0), Int(1)});
  CHECK(np.vertices().size() == 3);
  // every face's normal cone contains the lineality direction both ways
  for (const auto& face : np.faces()) {
    CHECK(np.normal_cone_contains(face, Character({Rat(0), Rat(0), Rat(1)})));
    CHECK(np.normal_cone_contains(face, Character({Rat(0), Rat(0), Rat(-1)})));
  }
}

TEST_CASE("3d simplex 1+x+y+z") {
  auto z = CoeffRing::integers();
  auto f = make(3, z, {{{0, 0, 0}, 1}, {{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}});
  NewtonPolytope np(f);
  CHECK(np.affine_dim() == 3);
  CHECK(np.vertices().size() == 4);
  int nv = 0, ne = 0, nf = 0, nw = 0;
  for (const auto& face : np.faces()) {
    if (face.dim == 0) ++nv;
    if (face.dim == 1) ++ne;
    if (face.dim == 2) ++nf;
    if (face.dim == 3) ++nw;
  }
  CHECK(nv == 4);
  CHECK(ne == 6);
  CHECK(nf == 4);
  CHECK(nw == 1);
}

TEST_CASE("normal fan covers Q^* and face location is unique (sampled)") {
  auto z = CoeffRing::integers();
  auto f = make(2, z,
                {{{0, 0}, 3}, {{2, 0}, 1}, {{0, 2}, 5}, {{1, 1}, -2}, {{-1, -1}, 7}, {{2, 2}, 1}});
  NewtonPolytope np(f);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Character chi({Rat(std::int64_t(rng() % 21) - 10, 1 + std::int64_t(rng() % 3)),
                   Rat(std::int64_t(rng() % 21) - 10, 1 + std::int64_t(rng() % 3))});
    const auto& face = np.locate(chi);  // throws if the argmin set were not a face
    CHECK(np.normal_cone_contains(face, chi));
    // the located face is the unique one whose cone contains chi in its relative interior:
    // any other face containing chi in its closed cone must be a subface
    for (const auto& other : np.faces()) {
      if (np.normal_cone_contains(other, chi)) {
        CHECK(std::includes(face.support.begin(), face.support.end(), other.support.begin(),
                            other.support.end(), LexLess{}));
      }
    }
  }
}

TEST_CASE("polytope rejects zero and high rank") {
  auto z = CoeffRing::integers();
  CHECK_THROWS_AS(NewtonPolytope(LaurentPoly::zero(1, z)), Error);
  auto f4 = LaurentPoly::normalize(4, z, {{{Int(0), Int(0), Int(0), Int(0)}, Rat(1)}});
  CHECK_THROWS_AS(NewtonPolytope(f4), Error);
}
