#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lcmod/coeff.hpp"
#include "lcmod/laurent.hpp"
#include "lcmod/numeric.hpp"
#include "lcmod/qpoly.hpp"

using namespace lcmod;

TEST_CASE("integer helpers") {
  CHECK(floor_log2(Int(1)) == 0);
  CHECK(floor_log2(Int(2)) == 1);
  CHECK(floor_log2(Int(9)) == 3);  // log2(3^2) = 3.17
  CHECK(p_valuation(Int(24), Int(2)) == 3);
  CHECK(p_valuation(Rat(3, 4), Int(2)) == -2);
  CHECK(mod_inverse(Int(3), Int(8)) == 3);
  CHECK(primitive_vector({Int(4), Int(-6)}) == std::vector<Int>{2, -3});
  CHECK(primitive_direction({Rat(1, 2), Rat(-3, 4)}) == std::vector<Int>{2, -3});
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int(97)));
  CHECK_FALSE(is_prime(Int(91)));
}

TEST_CASE("coefficient rings") {
  auto z4 = CoeffRing::prime_power(Int(2), 2);
  CHECK(z4.normalize(Rat(5)) == 1);
  CHECK(z4.is_unit(Rat(3)));
  CHECK_FALSE(z4.is_unit(Rat(2)));
  CHECK(z4.inverse(Rat(3)) == 3);  // 3*3 = 9 = 1 mod 4

  auto f5 = CoeffRing::prime_field(Int(5));
  CHECK(f5.inverse(Rat(2)) == 3);
  CHECK(f5.normalize(Rat(1, 2)) == 3);  // 1/2 = 3 mod 5

  auto z = CoeffRing::integers();
  CHECK(z.is_unit(Rat(-1)));
  CHECK_FALSE(z.is_unit(Rat(2)));
  CHECK_THROWS_AS(z.normalize(Rat(1, 2)), Error);

  CHECK_THROWS_AS(CoeffRing::prime_field(Int(6)), Error);
}

TEST_CASE("laurent_normalize") {
  auto z = CoeffRing::integers();
  // cancellation
  auto f = LaurentPoly::normalize(1, z, {{{Int(1)}, Rat(1)}, {{Int(1)}, Rat(-1)}});
  CHECK(f.is_zero());
  // modular reduction: 5 = 1 in Z/4
  auto z4 = CoeffRing::prime_power(Int(2), 2);
  auto g = LaurentPoly::normalize(1, z4, {{{Int(0)}, Rat(5)}});
  CHECK(g.term_count() == 1);
  CHECK(g.coeff({Int(0)}) == 1);
  // two independent terms in lex order
  auto h = LaurentPoly::normalize(2, z, {{{Int(1), Int(0)}, Rat(2)}, {{Int(0), Int(1)}, Rat(3)}});
  CHECK(h.term_count() == 2);
  auto it = h.terms().begin();
  CHECK(it->first == Exponents{Int(0), Int(1)});
  CHECK(it->second == 3);
  // wrong rank
  CHECK_THROWS_AS(LaurentPoly::normalize(2, z, {{{Int(1)}, Rat(1)}}), Error);
}

TEST_CASE("char_value") {
  auto z = CoeffRing::integers();
  auto m1 = LaurentPoly::univar(z, {{Int(-1), Rat(2)}});  // 2 x^-1
  CHECK(*m1.char_value(Character({Rat(1)})) == -1);

  auto m2 = LaurentPoly::normalize(2, z, {{{Int(1), Int(1)}, Rat(1)}, {{Int(2), Int(0)}, Rat(1)}});
  CHECK(*m2.char_value(Character({Rat(1), Rat(-1)})) == 0);

  auto m0 = LaurentPoly::zero(1, z);
  CHECK_FALSE(m0.char_value(Character({Rat(1)})).has_value());  // +infinity
}

TEST_CASE("char_value valuation property on random products") {
  auto f3 = CoeffRing::prime_field(Int(3));
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    auto rnd_poly = [&](int nterms) {
      std::vector<std::pair<Exponents, Rat>> raw;
      for (int i = 0; i < nterms; ++i) {
        Exponents e{Int(std::int64_t(rng() % 9) - 4), Int(std::int64_t(rng() % 9) - 4)};
        raw.emplace_back(e, Rat(Int(1 + rng() % 2)));
      }
      return LaurentPoly::normalize(2, f3, raw);
    };
    auto a = rnd_poly(3), b = rnd_poly(3);
    if (a.is_zero() || b.is_zero()) continue;
    Character chi({Rat(Int(std::int64_t(rng() % 7) - 3)), Rat(Int(std::int64_t(rng() % 7) - 3))});
    auto va = a.char_value(chi), vb = b.char_value(chi), vab = (a * b).char_value(chi);
    REQUIRE(vab.has_value());  // product over a domain is nonzero
    CHECK(*vab == *va + *vb);
    auto vsum = (a + b).char_value(chi);
    if (vsum) {
      CHECK(*vsum >= std::min(*va, *vb));
      if (*va != *vb) CHECK(*vsum == std::min(*va, *vb));
    }
  }
}

TEST_CASE("qpoly basics") {
  QPoly f({Rat(2), Rat(-3), Rat(1)});  // x^2 - 3x + 2
  auto [q, r] = f.divmod(QPoly({Rat(-1), Rat(1)}));
  CHECK(r.is_zero());
  CHECK(q == QPoly({Rat(-2), Rat(1)}));
  CHECK(f.eval(Rat(3)) == 2);
  CHECK(qpoly_gcd(f, QPoly({Rat(-1), Rat(1)})) == QPoly({Rat(-1), Rat(1)}));

  auto sq = squarefree_decomposition(QPoly({Rat(4), Rat(-8), Rat(5), Rat(-1)}).scaled(Rat(-1)));
  // -(x-1)(x-2)^2 scaled to monic: (x-1)(x-2)^2
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].second == 1);
  CHECK(sq[1].second == 2);
}

TEST_CASE("real root counting") {
  QPoly f({Rat(-2), Rat(0), Rat(1)});  // x^2 - 2
  CHECK(count_real_roots(f) == 2);
  CHECK(count_real_roots_open(f, Rat(0), Rat(2)) == 1);
  CHECK(count_real_roots_open(f, Rat(-2), Rat(0)) == 1);
  CHECK(count_real_roots_open(f, Rat(2), Rat(3)) == 0);
}

TEST_CASE("half-plane root counts (calibration set)") {
  // frozen from the numeric oracle: (poly coefficients low->high, nL - nR)
  CHECK(lhp_minus_rhp(QPoly({Rat(1), Rat(1)})) == 1);                     // z+1
  CHECK(lhp_minus_rhp(QPoly({Rat(-1), Rat(1)})) == -1);                   // z-1
  CHECK(lhp_minus_rhp(QPoly({Rat(1), Rat(1), Rat(1)})) == 2);             // z^2+z+1
  CHECK(lhp_minus_rhp(QPoly({Rat(1), Rat(-1), Rat(1)})) == -2);           // z^2-z+1
  CHECK(lhp_minus_rhp(QPoly({Rat(1), Rat(0), Rat(0), Rat(1)})) == -1);    // z^3+1
  CHECK(lhp_minus_rhp(QPoly({Rat(2), Rat(3), Rat(1)})) == 2);             // z^2+3z+2
}

TEST_CASE("unit circle counts (frozen oracle values)") {
  auto counts = [](std::vector<Rat> c) { return unit_circle_counts(QPoly(std::move(c))); };

  auto toral = counts({Rat(1), Rat(-3), Rat(1)});  // x^2-3x+1
  CHECK(toral.inside == 1);
  CHECK(toral.on == 0);
  CHECK(toral.outside == 1);

  auto rot = counts({Rat(1), Rat(0), Rat(1)});  // x^2+1
  CHECK(rot.inside == 0);
  CHECK(rot.on == 2);
  CHECK(rot.outside == 0);

  auto plastic = counts({Rat(-1), Rat(-1), Rat(0), Rat(1)});  // x^3-x-1
  CHECK(plastic.inside == 2);
  CHECK(plastic.on == 0);
  CHECK(plastic.outside == 1);

  auto salem = counts({Rat(1), Rat(-1), Rat(-1), Rat(-1), Rat(1)});  // x^4-x^3-x^2-x+1
  CHECK(salem.inside == 1);
  CHECK(salem.on == 2);
  CHECK(salem.outside == 1);

  // (x-2)^2 (x-1/2)
  auto mult = counts({Rat(-2), Rat(6), Rat(-9, 2), Rat(1)});
  CHECK(mult.inside == 1);
  CHECK(mult.on == 0);
  CHECK(mult.outside == 2);

  // boundary roots at +-1 with multiplicity: (x-1)^2 (x+1)
  auto pm = counts({Rat(1), Rat(-1), Rat(-1), Rat(1)});
  CHECK(pm.on == 3);

  // golden ratio: x^2 - x - 1
  auto golden = counts({Rat(-1), Rat(-1), Rat(1)});
  CHECK(golden.inside == 1);
  CHECK(golden.outside == 1);

  // roots at zero count as inside: x^2 (x-3)
  auto zz = counts({Rat(0), Rat(0), Rat(-3), Rat(1)});
  CHECK(zz.inside == 2);
  CHECK(zz.outside == 1);
}
