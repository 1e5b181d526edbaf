#include <doctest.h>

#include "solv/matrix.hpp"
#include "solv/mpoly.hpp"
#include "solv/numberfield.hpp"
#include "solv/poly.hpp"
#include "solv/spectral.hpp"

using namespace solv;

TEST_CASE("rational helpers canonicalize") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-3, -6) == rat(1, 2));
  CHECK(to_string(rat(-1, 2)) == "-1/2");
  CHECK(to_string(rat(4, 2)) == "2");
  CHECK(parse_rat("7/3") == rat(7, 3));
  CHECK_THROWS_AS(rat(1, 0), ArithmeticError);
}

TEST_CASE("integer polynomial arithmetic") {
  ZPoly p = ZPoly::of({-1, 0, 1});  // x^2 - 1
  CHECK(p == ZPoly::of({-1, 1}) * ZPoly::of({1, 1}));
  CHECK(p.eval(Int(3)) == 8);
  CHECK(p.divide_exact(ZPoly::of({1, 1})) == ZPoly::of({-1, 1}));
  CHECK_THROWS(ZPoly::of({1, 1, 1}).divide_exact(ZPoly::of({1, 1})));
  CHECK(ZPoly::of({0, 1}).pow(3) == ZPoly::of({0, 0, 0, 1}));
}

TEST_CASE("Sturm root counting") {
  CHECK(count_real_roots(ZPoly::of({-2, 0, 1})) == 2);        // x^2 - 2
  CHECK(count_real_roots(ZPoly::of({-1, 0, -1, 1})) == 1);    // x^3 - x^2 - 1
  CHECK(count_real_roots(ZPoly::of({1, 0, 1})) == 0);         // x^2 + 1
  CHECK(count_positive_real_roots(ZPoly::of({-2, 0, 1})) == 1);
}

TEST_CASE("real root isolation") {
  // (x - 1)^2 (x + 2)
  ZPoly p = ZPoly::of({-1, 1}).pow(2) * ZPoly::of({2, 1});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].lo <= -2);
  CHECK(roots[0].hi >= -2);
  CHECK(roots[0].mult == 1);
  CHECK(roots[1].lo <= 1);
  CHECK(roots[1].hi >= 1);
  CHECK(roots[1].mult == 2);
}

TEST_CASE("factorization over the integers") {
  ZPoly irred = ZPoly::of({-1, 0, -1, 1});
  FactoredPoly f = factor_over_integers(irred);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first == irred);
  CHECK(f.expand() == irred);

  ZPoly split = ZPoly::of({-1, 1}) * ZPoly::of({1, -3, 1});
  FactoredPoly g = factor_over_integers(split);
  CHECK(g.factors.size() == 2);
  CHECK(g.expand() == split);

  // no rational root and degree > 4 is out of scope
  CHECK_THROWS_AS(factor_over_integers(ZPoly::of({1, 1, 0, 0, 0, 1})), DomainError);
}

TEST_CASE("factor round-trips on a corpus") {
  std::vector<ZPoly> corpus = {
      ZPoly::of({-1, 0, -1, 1}),
      ZPoly::of({1, 6, -5, 1}),
      ZPoly::of({-1, 2, -1, 1}),
      ZPoly::of({-1, 0, 0, 1}),
      ZPoly::of({4, 0, -5, 0, 1}),
      ZPoly::of({0, 0, 2, 3}),
  };
  for (const ZPoly& p : corpus) CHECK(factor_over_integers(p).expand() == p);
}

TEST_CASE("characteristic polynomial of a companion matrix") {
  ZPoly p = ZPoly::of({-1, 0, -1, 1});
  CHECK(char_poly(companion(p)) == p);
  CHECK(char_poly(identity_int(3)) == ZPoly::of({-1, 1}).pow(3));
}

TEST_CASE("exact linear algebra") {
  RatMat m = RatMat::Constant(3, 3, Rat(0));
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 1) = 1;
  m(2, 0) = 1;
  m(2, 1) = 2;  // row 2 equals row 0
  CHECK(rank(m) == 2);
  RatMat k = kernel_basis(m);
  CHECK(k.cols() == 1);
  for (Eigen::Index i = 0; i < 3; ++i) {
    Rat s = 0;
    for (Eigen::Index j = 0; j < 3; ++j) s += m(i, j) * k(j, 0);
    CHECK(s == 0);
  }

  IntMat a(2, 2);
  a << 2, 1, 1, 1;
  CHECK(det(a) == 1);
  RatMat inv = inverse(to_rat(a));
  CHECK(RatMat(inv * to_rat(a)) == to_rat(identity_int(2)));

  RatVec b(2);
  b << Rat(1), Rat(0);
  RatVec x = solve(to_rat(a), b);
  CHECK(x(0) == 1);
  CHECK(x(1) == -1);
}

TEST_CASE("quadratic field arithmetic") {
  auto fld = std::make_shared<const NumberField>(ZPoly::of({-1, -1, 1}));  // x^2-x-1
  NFElem t = NFElem::generator(fld);
  CHECK(t * t == t + NFElem(Rat(1)));
  CHECK(t * t.inv() == NFElem(Rat(1)));
  CHECK(t.inv() == t - NFElem(Rat(1)));
  // mixing plain rationals with field elements
  CHECK(NFElem(rat(1, 2)) + t == t + NFElem(rat(1, 2)));
}

TEST_CASE("cubic field arithmetic and the real embedding") {
  auto fld = std::make_shared<const NumberField>(ZPoly::of({-1, 0, -1, 1}));
  NFElem t = NFElem::generator(fld);
  CHECK(t * t * t == t * t + NFElem(Rat(1)));
  CHECK(t * t.inv() == NFElem(Rat(1)));
  REQUIRE(fld->real_roots().size() == 1);
  RealEmbedding emb(fld, fld->real_roots()[0]);
  CHECK(emb.sign(t - NFElem(Rat(1))) > 0);   // the real root exceeds 1
  CHECK(emb.sign(t - NFElem(Rat(2))) < 0);   // and is below 2
  CHECK(emb.sign(NFElem(Rat(0))) == 0);
}

TEST_CASE("multivariate polynomial identities") {
  MPoly a = MPoly::var(0), b = MPoly::var(1);
  CHECK((a + b) * (a - b) == a * a - b * b);
  CHECK((a + b).eval({rat(1, 2), rat(1, 3)}) == rat(5, 6));
  // reduce a^2 -> 1 - b^2 sends a^2 + b^2 to 1
  CHECK((a * a + b * b).reduce_square(0, MPoly(1) - b * b) == MPoly(1));
  CHECK((a * b).substitute(0, MPoly(0) - a) == MPoly(0) - a * b);
}

TEST_CASE("spectral profile of small unimodular matrices") {
  SpectralProfile id = spectral_profile(identity_int(3));
  CHECK(id.is_identity);
  CHECK(id.eigenspace_rank_at_1 == 3);

  IntMat u(3, 3);
  u << 1, 1, 0, 0, 1, 1, 0, 0, 1;
  SpectralProfile su = spectral_profile(u);
  CHECK(su.is_unipotent);
  CHECK_FALSE(su.is_identity);
  CHECK(su.eigenspace_rank_at_1 == 1);

  SpectralProfile sc = spectral_profile(companion(ZPoly::of({-1, 0, -1, 1})));
  CHECK(sc.real_roots.size() == 1);
  CHECK(sc.complex_pairs.size() == 1);
  CHECK_FALSE(sc.complex_pairs[0].on_unit_circle);
  CHECK_FALSE(sc.has_root_one());

  IntMat rot(2, 2);
  rot << 0, 1, -1, 0;
  SpectralProfile sr = spectral_profile(rot);
  REQUIRE(sr.complex_pairs.size() == 1);
  CHECK(sr.complex_pairs[0].on_unit_circle);
  CHECK(sr.complex_pairs[0].root_of_unity_order == 4);

  IntMat bad(2, 2);
  bad << 2, 0, 0, 1;
  CHECK_THROWS_AS(spectral_profile(bad), Error);
}
