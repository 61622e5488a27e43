#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace lck;
using namespace lck::test;

namespace {

LieAlgebra heis() { return catalog_get("heisenberg").algebra; }
LieAlgebra sl2r() { return catalog_get("sl2r").algebra; }
LieAlgebra su2() { return catalog_get("su2").algebra; }

}  // namespace

TEST_CASE("bracket: bilinear extension of the table") {
  LieAlgebra g = heis();  // X1, Y1, Z with [X1, Y1] = -Z
  CHECK(g.bracket(v({1, 0, 0}), v({0, 1, 0})) == v({0, 0, -1}));
  LieAlgebra s = sl2r();
  CHECK(s.bracket(v({0, 0, 1}), v({1, 0, 0})) == v({0, 1, 0}));  // [Z,X] = Y
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    Vec a = rng.vec(3);
    CHECK(vec_is_zero(s.bracket(a, a)));
    Vec b = rng.vec(3);
    CHECK(s.bracket(a, b) == vec_scale(-1, s.bracket(b, a)));
  }
  CHECK_THROWS_AS(g.bracket(v({1, 0}), v({0, 1, 0})), ValidationError);
}

TEST_CASE("jacobi defect") {
  CHECK(jacobi_defect(heis()).empty());
  CHECK(jacobi_defect(sl2r()).empty());
  // [e1,e2] = e3, [e1,e3] = e1: cyclic sum on (1,2,3) is
  // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = [e3,e3] + 0 + [-e1,e2] = -e3.
  BracketTable t;
  t.emplace(std::make_pair(0, 1), v({0, 0, 1}));
  t.emplace(std::make_pair(0, 2), v({1, 0, 0}));
  LieAlgebra bad = LieAlgebra::build({"e1", "e2", "e3"}, t, false);
  auto defects = jacobi_defect(bad);
  REQUIRE(defects.size() == 1);
  CHECK(defects[0].defect == v({0, 0, -1}));
  CHECK_THROWS_AS(LieAlgebra::build({"e1", "e2", "e3"}, t, true), ValidationError);
  CHECK_THROWS_AS(LieAlgebra::build({"a", "a"}, {}, false), InputError);
}

TEST_CASE("unimodularity") {
  CHECK(is_unimodular(heis()));
  CHECK(is_unimodular(sl2r()));
  BracketTable t;  // [e1, e2] = e2: trace(ad e1) = 1
  t.emplace(std::make_pair(0, 1), v({0, 1}));
  CHECK_FALSE(is_unimodular(LieAlgebra::build({"e1", "e2"}, t, true)));
}

TEST_CASE("center") {
  Subspace zh = center(heis());
  CHECK(zh.dim() == 1);
  CHECK(zh.contains(v({0, 0, 1})));
  CHECK(center(sl2r()).dim() == 0);
  LieAlgebra rx = catalog_get("r_times_sl2r").algebra;
  Subspace zr = center(rx);
  CHECK(zr.dim() == 1);
  CHECK(zr.contains(v({1, 0, 0, 0})));  // T
}

TEST_CASE("series") {
  auto lcs = series(heis(), SeriesKind::LowerCentral);
  REQUIRE(lcs.size() == 3);
  CHECK(lcs[0].dim() == 3);
  CHECK(lcs[1].dim() == 1);
  CHECK(lcs[1].contains(v({0, 0, 1})));
  CHECK(lcs[2].dim() == 0);
  auto der = series(sl2r(), SeriesKind::Derived);
  REQUIRE(der.size() == 2);  // stabilizes at g, repeated once to mark it
  CHECK(der[0].dim() == 3);
  CHECK(der[1].dim() == 3);
  for (auto kind : {SeriesKind::Derived, SeriesKind::LowerCentral}) {
    auto ab = series(LieAlgebra::abelian(4), kind);
    REQUIRE(ab.size() == 2);
    CHECK(ab[0].dim() == 4);
    CHECK(ab[1].dim() == 0);
  }
  CHECK(is_nilpotent(heis()));
  CHECK_FALSE(is_solvable(sl2r()));
  CHECK(is_solvable(catalog_get("kodaira_secondary").algebra));
  CHECK_FALSE(is_nilpotent(catalog_get("kodaira_secondary").algebra));
}

TEST_CASE("killing form") {
  CHECK(killing_form(su2()) == Mat::identity(3) * Scalar(-2));
  Mat b = killing_form(sl2r());
  Mat expected(3, 3);
  expected.at(0, 0) = 2;
  expected.at(1, 1) = 2;
  expected.at(2, 2) = -2;
  CHECK(b == expected);
  CHECK(killing_form(LieAlgebra::abelian(3)).is_zero());
}

TEST_CASE("killing form is ad-invariant, sampled") {
  Rng rng(17);
  for (const auto* name : {"su2", "sl2r", "kodaira_secondary"}) {
    LieAlgebra g = catalog_get(name).algebra;
    Mat b = killing_form(g);
    for (int trial = 0; trial < 10; ++trial) {
      Vec x = rng.vec(g.dim()), y = rng.vec(g.dim()), z = rng.vec(g.dim());
      Scalar lhs = dot(mat_vec(b, g.bracket(x, y)), z);
      Scalar rhs = dot(mat_vec(b, y), g.bracket(x, z));
      CHECK(lhs + rhs == 0);
    }
  }
}

TEST_CASE("semisimplicity by the Cartan criterion") {
  CHECK(is_semisimple(su2()));
  CHECK(is_semisimple(sl2r()));
  CHECK_FALSE(is_semisimple(heis()));
  LieAlgebra r_su2 = catalog_get("r_times_su2").algebra;
  CHECK_FALSE(is_semisimple(r_su2));
  // Killing kernel is exactly the R factor
  auto ns = null_space(killing_form(r_su2));
  REQUIRE(ns.size() == 1);
  CHECK(Subspace::span(4, ns).contains(v({1, 0, 0, 0})));
}

TEST_CASE("direct sum") {
  LieAlgebra a = direct_sum(LieAlgebra::abelian(1, "T"), heis());
  CHECK(a.dim() == 4);
  CHECK(center(a).dim() == 2);
  CHECK(is_unimodular(a));
  LieAlgebra b = direct_sum(LieAlgebra::abelian(1), LieAlgebra::abelian(1));
  CHECK(b.dim() == 2);
  CHECK(b.basis_names() == std::vector<std::string>{"e1", "e1'"});
  CHECK(jacobi_defect(b).empty());
  LieAlgebra r_sl2 = direct_sum(LieAlgebra::abelian(1, "T"), sl2r());
  CHECK(r_sl2.same_table(catalog_get("r_times_sl2r").algebra));
}

TEST_CASE("direct sum preserves unimodularity and adds centers, randomized") {
  Rng rng(23);
  std::vector<std::string> names = {"heisenberg", "su2", "sl2r", "kodaira_secondary"};
  for (int trial = 0; trial < 12; ++trial) {
    LieAlgebra g1 = catalog_get(names[rng.index(names.size())]).algebra;
    LieAlgebra g2 = catalog_get(names[rng.index(names.size())]).algebra;
    LieAlgebra s = direct_sum(g1, g2);
    CHECK(jacobi_defect(s).empty());
    CHECK(is_unimodular(s) == (is_unimodular(g1) && is_unimodular(g2)));
    CHECK(center(s).dim() == center(g1).dim() + center(g2).dim());
  }
}

TEST_CASE("change of basis and permutation") {
  LieAlgebra g = sl2r();
  Rng rng(31);
  Mat p = rng.invertible(3);
  LieAlgebra h = change_basis(g, p, {"a", "b", "c"});
  CHECK(jacobi_defect(h).empty());
  CHECK(is_unimodular(h));
  CHECK(killing_form(h) == p.transposed() * killing_form(g) * p);
  LieAlgebra back = change_basis(h, rref(Mat::identity(3)), {"a", "b", "c"});
  CHECK(back.same_table(h));
  LieAlgebra perm = permute_basis(g, {2, 0, 1});
  CHECK(perm.basis_names() == std::vector<std::string>{"Z", "X", "Y"});
  CHECK(perm.bracket(v({1, 0, 0}), v({0, 1, 0})) == v({0, 0, 1}));  // [Z,X] = Y
}

TEST_CASE("subalgebra and central quotient") {
  LieAlgebra g = heis();
  Subspace span_xz = Subspace::span(3, {v({1, 0, 0}), v({0, 0, 1})});
  LieAlgebra sub = subalgebra_on(g, span_xz);
  CHECK(sub.dim() == 2);
  CHECK(sub.table().empty());
  Subspace span_xy = Subspace::span(3, {v({1, 0, 0}), v({0, 1, 0})});
  CHECK_THROWS_AS(subalgebra_on(g, span_xy), ValidationError);

  CentralQuotient cq = quotient_by_central(g, v({0, 0, 1}));
  CHECK(cq.algebra.dim() == 2);
  CHECK(cq.algebra.table().empty());
  CHECK_THROWS_AS(quotient_by_central(g, v({1, 0, 0})), ValidationError);
  CHECK_THROWS_AS(quotient_by_central(su2(), v({0, 0, 1})), ValidationError);
}

TEST_CASE("largest invariant subspace") {
  LieAlgebra g = sl2r();
  CHECK(largest_invariant_subspace(g, Subspace::span(3, {v({0, 0, 1})})).dim() == 0);
  CHECK(largest_invariant_subspace(g, Subspace::full(3)).dim() == 3);
  LieAlgebra k = catalog_get("kodaira_secondary").algebra;
  // span{Z} is a central ideal inside span{Z, W}
  Subspace zw = Subspace::span(4, {v({0, 0, 1, 0}), v({0, 0, 0, 1})});
  Subspace ideal = largest_invariant_subspace(k, zw);
  CHECK(ideal.dim() == 1);
  CHECK(ideal.contains(v({0, 0, 1, 0})));
}
