#include <doctest.h>

#include "solv/liealg.hpp"

using namespace solv;

namespace {

LieAlgebra cat(CatalogTag t) {
  CatalogId id;
  id.tag = t;
  return catalog(id).algebra;
}

}  // namespace

TEST_CASE("bracket storage is antisymmetric") {
  LieAlgebra g(3);
  g.set_bracket(1, 0, {Rat(0), Rat(0), Rat(1)});  // [X2, X1] = X3
  auto v = g.bracket_basis(0, 1);
  CHECK(v(2) == -1);
  CHECK(g.bracket_basis(1, 0)(2) == 1);
  CHECK(g.ad(0)(2, 1) == -1);
}

TEST_CASE("catalog satisfies Jacobi and unimodularity") {
  for (const CatalogId& id : catalog_all_ids()) {
    CatalogEntry e = catalog(id);
    CAPTURE(e.name);
    CHECK(e.algebra.jacobi_ok());
    CHECK(is_unimodular(e.algebra));
    CHECK(is_solvable(e.algebra));
  }
}

TEST_CASE("derived series dimensions") {
  CHECK(derived_series_dims(cat(CatalogTag::Torus4)) == std::vector<int>{4, 0});
  CHECK(derived_series_dims(cat(CatalogTag::Hyperelliptic4)) ==
        std::vector<int>{4, 2, 0});
  CHECK(derived_series_dims(cat(CatalogTag::PrimaryKodaira4)) ==
        std::vector<int>{4, 1, 0});
  CHECK(derived_series_dims(cat(CatalogTag::Example5)) == std::vector<int>{6, 4, 0});
}

TEST_CASE("nilpotency inside the catalog") {
  CHECK(is_nilpotent(cat(CatalogTag::Torus4)));
  CHECK(is_nilpotent(cat(CatalogTag::PrimaryKodaira4)));
  CHECK_FALSE(is_nilpotent(cat(CatalogTag::Hyperelliptic4)));
  CHECK_FALSE(is_nilpotent(cat(CatalogTag::SecondaryKodaira4)));
  CHECK_FALSE(is_nilpotent(cat(CatalogTag::Example5)));
}

TEST_CASE("completely solvable verdicts") {
  CHECK(is_completely_solvable(cat(CatalogTag::Torus4)).verdict == Cert::True);
  CHECK(is_completely_solvable(cat(CatalogTag::PrimaryKodaira4)).verdict ==
        Cert::True);
  CHECK(is_completely_solvable(cat(CatalogTag::InoueSpm4)).verdict == Cert::True);
  CHECK(is_completely_solvable(cat(CatalogTag::Example5)).verdict == Cert::True);
  CHECK(is_completely_solvable(cat(CatalogTag::Hyperelliptic4)).verdict ==
        Cert::False);
  CHECK(is_completely_solvable(cat(CatalogTag::SecondaryKodaira4)).verdict ==
        Cert::False);
  CHECK(is_completely_solvable(cat(CatalogTag::InoueS0)).verdict == Cert::False);
}

TEST_CASE("completely solvable certificate is a genuine flag") {
  EigenTypeResult r = is_completely_solvable(cat(CatalogTag::Example5));
  REQUIRE(r.verdict == Cert::True);
  if (r.certificate.full_flag) {
    const auto& ideals = r.certificate.ideals;
    REQUIRE_FALSE(ideals.empty());
    for (std::size_t i = 1; i < ideals.size(); ++i)
      CHECK(ideals[i].cols() == ideals[i - 1].cols() + 1);
  }
}

TEST_CASE("rigid type verdicts") {
  CHECK(is_rigid_type(cat(CatalogTag::Torus4)).verdict == Cert::True);
  CHECK(is_rigid_type(cat(CatalogTag::PrimaryKodaira4)).verdict == Cert::True);
  CHECK(is_rigid_type(cat(CatalogTag::Hyperelliptic4)).verdict == Cert::True);
  CHECK(is_rigid_type(cat(CatalogTag::SecondaryKodaira4)).verdict == Cert::True);
  CHECK(is_rigid_type(cat(CatalogTag::Example4)).verdict == Cert::True);
  CHECK(is_rigid_type(cat(CatalogTag::InoueSpm4)).verdict == Cert::False);
  CHECK(is_rigid_type(cat(CatalogTag::Example5)).verdict == Cert::False);
  CHECK(is_rigid_type(cat(CatalogTag::InoueS0)).verdict == Cert::False);
}

TEST_CASE("rigid type respects the sign of the scaling parameter") {
  // a = 0 makes the semisimple part a pure rotation
  CatalogId id;
  id.tag = CatalogTag::InoueS0;
  id.a = 0;
  id.b = 1;
  CHECK(is_rigid_type(catalog(id).algebra).verdict == Cert::True);
}

TEST_CASE("symbolic catalog entries satisfy Jacobi") {
  CHECK(catalog_inoue_spm_symbolic(false).first.jacobi_ok());
  CHECK(catalog_inoue_spm_symbolic(true).first.jacobi_ok());
  CHECK(catalog_inoue_s0_symbolic().jacobi_ok());
}

TEST_CASE("structure constant input validation") {
  CHECK_THROWS_AS(liealg_from_triples(3, {{1, 1, {Rat(0), Rat(0), Rat(1)}}}),
                  InvalidInput);
  CHECK_THROWS_AS(liealg_from_triples(3, {{1, 4, {Rat(0), Rat(0), Rat(1)}}}),
                  InvalidInput);
  CHECK_THROWS_AS(liealg_from_triples(3, {{1, 2, {Rat(1)}}}), InvalidInput);
  LieAlgebra g = liealg_from_triples(3, {{1, 2, {Rat(0), Rat(0), Rat(1)}}});
  CHECK(g.bracket_basis(0, 1)(2) == 1);
}

TEST_CASE("Example4 sizes scale the dimension") {
  CatalogId id;
  id.tag = CatalogTag::Example4;
  id.k = 2;
  id.l = 3;
  CatalogEntry e = catalog(id);
  CHECK(e.algebra.dim == 2 * (2 + 3));
  CHECK(e.algebra.jacobi_ok());
  CHECK(is_unimodular(e.algebra));
}
