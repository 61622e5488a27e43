#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace lck;
using namespace lck::test;

namespace {

std::vector<CatalogEntry> all_entries() {
  std::vector<CatalogEntry> out;
  out.push_back(catalog_get("abelian", {{"n", Scalar(3)}}));
  for (int k = 1; k <= 3; ++k) out.push_back(catalog_get("heisenberg", {{"k", Scalar(k)}}));
  out.push_back(catalog_get("su2"));
  out.push_back(catalog_get("sl2r"));
  for (int k = 1; k <= 2; ++k) out.push_back(catalog_get("r_times_heisenberg", {{"k", Scalar(k)}}));
  out.push_back(catalog_get("r_times_su2"));
  out.push_back(catalog_get("r_times_sl2r"));
  for (int k = 1; k <= 2; ++k) out.push_back(catalog_get("complex_space", {{"k", Scalar(k)}}));
  out.push_back(catalog_get("kodaira_primary"));
  out.push_back(catalog_get("kodaira_secondary"));
  for (auto [a, b, c] : {std::array<const char*, 3>{"0", "0", "1"}, {"1", "0", "2"},
                         {"1", "1", "1"}, {"0", "0", "-1"}, {"1/2", "-1/3", "2"}})
    out.push_back(catalog_get("omega_psi", {{"a", q(a)}, {"b", q(b)}, {"c", q(c)}}));
  out.push_back(catalog_get("gl2r_mod"));
  return out;
}

}  // namespace

TEST_CASE("every expected verdict is reproduced by the named predicate") {
  for (const CatalogEntry& e : all_entries()) {
    CAPTURE(e.name);
    for (const auto& [predicate, expected] : e.expected) {
      CAPTURE(predicate);
      CHECK(evaluate_predicate(e, predicate) == expected);
    }
  }
}

TEST_CASE("catalog basics") {
  CHECK(catalog_get("heisenberg", {{"k", Scalar(1)}}).algebra.dim() == 3);
  CHECK(catalog_get("heisenberg", {{"k", Scalar(4)}}).algebra.dim() == 9);
  CHECK(catalog_get("omega_psi", {{"a", Scalar(0)}, {"b", Scalar(0)}, {"c", Scalar(1)}})
            .expected.at("vaisman") == "true");
  CHECK(catalog_get("kodaira_secondary").expected.at("nijenhuis") == "empty");
  CHECK_THROWS_AS(catalog_get("no_such_algebra"), InputError);
  CHECK_THROWS_AS(catalog_get("heisenberg", {{"k", Scalar(0)}}), InputError);
  CHECK_THROWS_AS(catalog_get("heisenberg", {{"k", Scalar(1, 2)}}), InputError);
  for (const auto& name : catalog_names()) CHECK_NOTHROW(catalog_get(name));
}

TEST_CASE("positive definiteness of the omega_psi family over a rational grid") {
  std::vector<Scalar> values = {q("-2"), q("-1"), q("-1/2"), q("0"), q("1/2"), q("1"), q("2")};
  std::vector<Scalar> cs = {q("-1"), q("0"), q("1/2"), q("1"), q("13/10"), q("2")};
  int checked = 0;
  for (const Scalar& a : values)
    for (const Scalar& b : values)
      for (const Scalar& c : cs) {
        CatalogEntry e = catalog_get("omega_psi", {{"a", a}, {"b", b}, {"c", c}});
        bool expected = c > 0 && c * c > a * a + b * b;
        CHECK(is_positive_definite(e.hermitian->metric) == expected);
        ++checked;
      }
  CHECK(checked >= 100);
  // boundary: c^2 = a^2 + b^2 exactly (3-4-5 triple) is not positive definite
  CatalogEntry edge = catalog_get("omega_psi", {{"a", q("3/5")}, {"b", q("4/5")}, {"c", q("1")}});
  CHECK_FALSE(is_positive_definite(edge.hermitian->metric));
}
