#include <doctest.h>

#include <cstdint>

#include "solv/classify.hpp"
#include "solv/models.hpp"
#include "solv/poly.hpp"

using namespace solv;

namespace {

IntMat block_rotation(Eta eta) {
  IntMat m = identity_int(3);
  IntMat a = hyperelliptic_rotation(eta);
  m.topLeftCorner(2, 2) = a;
  return m;
}

/// Deterministic unimodular conjugator built from elementary shears.
struct ShearRng {
  std::uint64_t s;
  explicit ShearRng(std::uint64_t seed) : s(seed ? seed : 1) {}
  std::uint64_t next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 17;
  }
  IntMat unimodular(int n) {
    IntMat p = identity_int(n);
    for (int step = 0; step < 6; ++step) {
      int i = static_cast<int>(next() % static_cast<std::uint64_t>(n));
      int j = static_cast<int>(next() % static_cast<std::uint64_t>(n));
      if (i == j) continue;
      IntMat e = identity_int(n);
      e(i, j) = (next() % 2 == 0) ? 1 : -1;
      p = IntMat(p * e);
    }
    return p;
  }
};

IntMat int_inverse(const IntMat& p) {
  RatMat iv = inverse(to_rat(p));
  IntMat out(p.rows(), p.cols());
  for (Eigen::Index i = 0; i < p.rows(); ++i)
    for (Eigen::Index j = 0; j < p.cols(); ++j) out(i, j) = iv(i, j).get_num();
  return out;
}

}  // namespace

TEST_CASE("type II classification on the reference corpus") {
  CHECK(classify_type_II(identity_int(3)).cls ==
        SurfaceClass{SurfaceTag::ComplexTorus, std::nullopt});

  CHECK(classify_type_II(block_rotation(Eta::Pi)).cls ==
        SurfaceClass{SurfaceTag::Hyperelliptic, Eta::Pi});
  CHECK(classify_type_II(block_rotation(Eta::TwoPiOver3)).cls ==
        SurfaceClass{SurfaceTag::Hyperelliptic, Eta::TwoPiOver3});
  CHECK(classify_type_II(block_rotation(Eta::PiOver2)).cls ==
        SurfaceClass{SurfaceTag::Hyperelliptic, Eta::PiOver2});
  CHECK(classify_type_II(block_rotation(Eta::PiOver3)).cls ==
        SurfaceClass{SurfaceTag::Hyperelliptic, Eta::PiOver3});

  CHECK(classify_type_II(companion(ZPoly::of({-1, 0, -1, 1}))).cls.tag ==
        SurfaceTag::InoueS0);

  IntMat u2(3, 3);
  u2 << 1, 1, 0, 0, 1, 1, 0, 0, 1;
  CHECK(classify_type_II(u2).cls.tag == SurfaceTag::NilmanifoldB2);
  IntMat u1(3, 3);
  u1 << 1, 1, 0, 0, 1, 0, 0, 0, 1;
  CHECK(classify_type_II(u1).cls.tag == SurfaceTag::PrimaryKodaira);

  // (x - 1)(x^2 - 3x + 1): root 1 plus a positive pair
  CHECK(classify_type_II(companion(ZPoly::of({-1, 4, -4, 1}))).cls.tag ==
        SurfaceTag::T2BundleRealRoots);
  // x^3 - 5x^2 + 6x - 1: three distinct positive roots, none equal to 1
  CHECK(classify_type_II(companion(ZPoly::of({-1, 6, -5, 1}))).cls.tag ==
        SurfaceTag::T3BundleRealRoots);
}

TEST_CASE("type II first Betti numbers") {
  CHECK(classify_type_II(identity_int(3)).b1 == 4);
  CHECK(classify_type_II(block_rotation(Eta::PiOver2)).b1 == 2);
  CHECK(classify_type_II(companion(ZPoly::of({-1, 0, -1, 1}))).b1 == 1);
  IntMat u1(3, 3);
  u1 << 1, 1, 0, 0, 1, 0, 0, 0, 1;
  CHECK(classify_type_II(u1).b1 == 3);
  CHECK(classify_type_II(companion(ZPoly::of({-1, 4, -4, 1}))).b1 == 2);
  CHECK(classify_type_II(companion(ZPoly::of({-1, 6, -5, 1}))).b1 == 1);
}

TEST_CASE("type II finite cover hints") {
  // roots 1, and a negative pair: (x - 1)(x^2 + 3x + 1)
  ClassificationReport r = classify_type_II(companion(ZPoly::of({-1, -2, 2, 1})));
  CHECK(r.cls.tag == SurfaceTag::OtherNotEnumerated);
  CHECK_FALSE(r.admits_complex);
  REQUIRE(r.finite_cover_hint.has_value());
  CHECK(r.finite_cover_hint->first == 2);
  CHECK(r.finite_cover_hint->second.tag == SurfaceTag::T2BundleRealRoots);

  // non-diagonalizable double root -1
  IntMat m(3, 3);
  m << -1, 1, 0, 0, -1, 0, 0, 0, 1;
  ClassificationReport r2 = classify_type_II(m);
  CHECK(r2.cls.tag == SurfaceTag::OtherNotEnumerated);
  REQUIRE(r2.finite_cover_hint.has_value());
  // the square is unipotent with rank(A^2 - I) = 1
  CHECK(r2.finite_cover_hint->second.tag == SurfaceTag::PrimaryKodaira);
}

TEST_CASE("type III classification on the reference corpus") {
  IntMat i2 = identity_int(2);
  CHECK(classify_type_III(1, i2, 1).cls.tag == SurfaceTag::PrimaryKodaira);
  CHECK(classify_type_III(1, i2, 1).b1 == 3);

  IntMat mi2 = -identity_int(2);
  ClassificationReport sk = classify_type_III(1, mi2, 1);
  CHECK(sk.cls == SurfaceClass{SurfaceTag::SecondaryKodaira, Eta::Pi});
  CHECK(sk.b1 == 1);

  IntMat r3(2, 2);
  r3 << 0, 1, -1, -1;
  CHECK(classify_type_III(1, r3, 1).cls ==
        SurfaceClass{SurfaceTag::SecondaryKodaira, Eta::TwoPiOver3});

  IntMat anosov(2, 2);
  anosov << 2, 1, 1, 1;
  ClassificationReport sp = classify_type_III(1, anosov, 1);
  CHECK(sp.cls.tag == SurfaceTag::InoueSPlus);
  CHECK(sp.b1 == 1);
  CHECK(sp.kodaira == KodairaDim::MinusInfinity);

  IntMat fib(2, 2);
  fib << 1, 1, 1, 0;
  ClassificationReport sm = classify_type_III(1, fib, -1);
  CHECK(sm.cls.tag == SurfaceTag::InoueSMinus);
  CHECK(sm.b1 == 1);
}

TEST_CASE("type III finite cover hints") {
  IntMat refl(2, 2);
  refl << 1, 0, 0, -1;
  ClassificationReport r = classify_type_III(1, refl, -1);
  CHECK(r.cls.tag == SurfaceTag::OtherNotEnumerated);
  REQUIRE(r.finite_cover_hint.has_value());
  CHECK(r.finite_cover_hint->second.tag == SurfaceTag::PrimaryKodaira);

  IntMat neg(2, 2);
  neg << -2, -1, -1, -1;
  ClassificationReport r2 = classify_type_III(1, neg, 1);
  CHECK(r2.cls.tag == SurfaceTag::OtherNotEnumerated);
  REQUIRE(r2.finite_cover_hint.has_value());
  CHECK(r2.finite_cover_hint->second.tag == SurfaceTag::InoueSPlus);
}

TEST_CASE("Kaehler admission is torus or hyperelliptic only") {
  CHECK(admits_kaehler({SurfaceTag::ComplexTorus, std::nullopt}));
  CHECK(admits_kaehler({SurfaceTag::Hyperelliptic, Eta::Pi}));
  CHECK_FALSE(admits_kaehler({SurfaceTag::PrimaryKodaira, std::nullopt}));
  CHECK_FALSE(admits_kaehler({SurfaceTag::InoueS0, std::nullopt}));
  CHECK_FALSE(admits_kaehler({SurfaceTag::SecondaryKodaira, Eta::Pi}));
}

TEST_CASE("classification is invariant under unimodular conjugation") {
  std::vector<IntMat> corpus = {identity_int(3), block_rotation(Eta::PiOver2),
                                companion(ZPoly::of({-1, 0, -1, 1})),
                                companion(ZPoly::of({-1, 6, -5, 1}))};
  IntMat u1(3, 3);
  u1 << 1, 1, 0, 0, 1, 0, 0, 0, 1;
  corpus.push_back(u1);
  ShearRng rng(42);
  for (const IntMat& a : corpus) {
    ClassificationReport base = classify_type_II(a);
    for (int trial = 0; trial < 20; ++trial) {
      IntMat p = rng.unimodular(3);
      IntMat conj = IntMat(IntMat(p * a) * int_inverse(p));
      ClassificationReport r = classify_type_II(conj);
      CHECK(r.cls == base.cls);
      CHECK(r.b1 == base.b1);
    }
  }
}

TEST_CASE("small SL(2,Z) scan is exhaustive over enumerated type III classes") {
  // no (B, eps) with small entries may classify to a type II only class
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) {
          IntMat m(2, 2);
          m << a, b, c, d;
          Int dt = det(m);
          if (dt != 1 && dt != -1) continue;
          ClassificationReport r =
              classify_type_III(1, m, static_cast<int>(dt.get_si()));
          CHECK(r.cls.tag != SurfaceTag::InoueS0);
          CHECK(r.cls.tag != SurfaceTag::ComplexTorus);
          CHECK(r.cls.tag != SurfaceTag::Hyperelliptic);
        }
}

TEST_CASE("orbifold Euler number trichotomy") {
  auto [v1, t1] = orbifold_euler({2, {2, 3, 7}});
  CHECK(v1 == rat(-1, 42));
  CHECK(t1 == OrbifoldType::Hyperbolic);
  auto [v2, t2] = orbifold_euler({0, {}});
  CHECK(v2 == 0);
  CHECK(t2 == OrbifoldType::Flat);
  auto [v3, t3] = orbifold_euler({2, {2, 2}});
  CHECK(v3 == 1);
  CHECK(t3 == OrbifoldType::Spherical);
  CHECK_THROWS_AS(orbifold_euler({2, {1}}), InvalidInput);
}

TEST_CASE("homogeneous surface table shape") {
  auto rows = homogeneous_surface_table();
  REQUIRE(rows.size() == 10);
  int solv = 0;
  for (const auto& r : rows)
    if (r.model == "Solvmanifold") ++solv;
  CHECK(solv == 5);
  CHECK(rows[9].kodaira == "1");
}
