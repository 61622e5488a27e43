// Acceptance suite: reproduces the toolkit's defining computations end to end
// and prints one PASS/FAIL line per criterion.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "lck/io.hpp"

#include "helpers.hpp"

using namespace lck;
using namespace lck::test;
namespace fs = std::filesystem;

namespace {

struct Runner {
  int failures = 0;
  void run(int number, const std::string& description, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << description;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
  }
};

HermitianData omega_psi(const Scalar& a, const Scalar& b, const Scalar& c) {
  return *catalog_get("omega_psi", {{"a", a}, {"b", b}, {"c", c}}).hermitian;
}

std::vector<std::array<Scalar, 3>> triple_samples() {
  std::vector<Scalar> vals = {q("0"), q("1"), q("-1"), q("1/2"), q("-2/3"), q("3")};
  std::vector<std::array<Scalar, 3>> out;
  for (const Scalar& a : vals)
    for (const Scalar& b : vals) {
      out.push_back({a, b, q("2")});
      out.push_back({a, b, q("4")});
      out.push_back({a, b, q("-3/2")});
    }
  return out;
}

// (u - c)^2 - s, squared; coefficients of u^0..u^4.
std::vector<Scalar> phi_a_coeffs(const Scalar& c, const Scalar& s) {
  std::vector<Scalar> quad = {c * c - s, -2 * c, Scalar(1)};
  std::vector<Scalar> out(5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i + j] += quad[i] * quad[j];
  return out;
}

int cli_run(const std::string& cli, const std::string& args) {
  std::string cmd = cli + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

}  // namespace

int main() {
  Runner r;

  r.run(1, "characteristic polynomial of the metric family is {(u-c)^2 - (a^2+b^2)}^2",
        [](std::string& detail) {
          auto samples = triple_samples();
          int count = 0;
          for (const auto& [a, b, c] : samples) {
            if (count >= 20) break;
            ++count;
            auto p = char_poly(omega_psi(a, b, c).metric);
            if (p != phi_a_coeffs(c, a * a + b * b)) {
              detail = "mismatch at (" + scalar_str(a) + "," + scalar_str(b) + "," + scalar_str(c) + ")";
              return false;
            }
          }
          return count == 20;
        });

  r.run(2, "positive definiteness holds exactly on c > 0, c^2 > a^2 + b^2 (grid of 100+ points)",
        [](std::string& detail) {
          std::vector<Scalar> vals = {q("-2"), q("-1"), q("-1/2"), q("0"), q("1/2"), q("1"), q("2")};
          std::vector<Scalar> cs = {q("-1"), q("0"), q("1/2"), q("1"), q("13/10"), q("2")};
          int count = 0;
          auto check_one = [&](const Scalar& a, const Scalar& b, const Scalar& c) {
            ++count;
            bool expected = c > 0 && c * c > a * a + b * b;
            if (is_positive_definite(omega_psi(a, b, c).metric) != expected) {
              detail = "mismatch at (" + scalar_str(a) + "," + scalar_str(b) + "," + scalar_str(c) + ")";
              return false;
            }
            return true;
          };
          for (const Scalar& a : vals)
            for (const Scalar& b : vals)
              for (const Scalar& c : cs)
                if (!check_one(a, b, c)) return false;
          // exact boundary and near-boundary probes
          if (!check_one(q("3/5"), q("4/5"), q("1"))) return false;       // c^2 = a^2 + b^2
          if (!check_one(q("3/5"), q("4/5"), q("101/100"))) return false; // just inside
          if (!check_one(q("3/5"), q("4/5"), q("99/100"))) return false;  // just outside
          if (!check_one(q("1"), q("0"), q("1"))) return false;           // boundary again
          return count >= 100;
        });

  r.run(3, "Vaisman criterion: vaisman iff a = b = 0, witness (Z,Z) defect -(2/D)(a^2+b^2)",
        [](std::string& detail) {
          int valid = 0;
          for (const auto& [a, b, c] : triple_samples()) {
            if (!(c > 0 && c * c > a * a + b * b)) continue;
            ++valid;
            LcKReport rep = check_lck(omega_psi(a, b, c));
            if (!rep.lck()) {
              detail = "l.c.K. axioms fail on a valid sample";
              return false;
            }
            bool expect_vaisman = (a == 0 && b == 0);
            if (rep.vaisman != expect_vaisman) {
              detail = "vaisman verdict wrong at (" + scalar_str(a) + "," + scalar_str(b) + "," +
                       scalar_str(c) + ")";
              return false;
            }
            if (!expect_vaisman) {
              Scalar d = c * c - a * a - b * b;
              bool found = false;
              for (auto [i, j, val] : rep.killing_defects)
                if (i == 3 && j == 3) found = (val == Scalar(-2) * (a * a + b * b) / d);
              if (!found) {
                detail = "missing or wrong (Z,Z) witness";
                return false;
              }
            }
          }
          if (valid < 50) {
            detail = "only " + std::to_string(valid) + " valid samples";
            return false;
          }
          return true;
        });

  r.run(4, "Lee data: xi = (1/D)(cT + bX - aY) and g(xi,xi) = c/D on 20 samples",
        [](std::string& detail) {
          int count = 0;
          for (const auto& [a, b, c] : triple_samples()) {
            Scalar d = c * c - a * a - b * b;
            if (d == 0 || count >= 20) continue;
            ++count;
            HermitianData h = omega_psi(a, b, c);
            LcKReport rep = check_lck(h);
            if (!rep.lck_identity) {
              detail = "no Lee form on a nondegenerate sample";
              return false;
            }
            auto [xi, norm] = lee_field(h, rep.theta);
            if (xi != Vec{c / d, b / d, -a / d, Scalar(0)} || norm != c / d) {
              detail = "Lee data wrong at (" + scalar_str(a) + "," + scalar_str(b) + "," +
                       scalar_str(c) + ")";
              return false;
            }
          }
          return count == 20;
        });

  r.run(5, "modification of R x heisenberg by phi_W reaches the secondary table; both Vaisman with theta = w",
        [](std::string& detail) {
          HermitianData prim = *catalog_get("kodaira_primary").hermitian;
          Mat ad_w(4, 4);
          ad_w.at(1, 0) = -1;
          ad_w.at(0, 1) = 1;
          Mat coeffs(4, 1);
          coeffs.at(3, 0) = 1;
          ModificationMap map{{ad_w}, coeffs};
          ModifiedAlgebra out = modify(prim, map);
          if (!out.algebra.same_table(catalog_get("kodaira_secondary").algebra)) {
            detail = "modified structure constants differ";
            return false;
          }
          KForm omega = KForm::monomial(4, {0, 1}, 1) + KForm::monomial(4, {2, 3}, 1);
          for (const LieAlgebra& g : {prim.algebra, out.algebra}) {
            LeeSolve lee = solve_lee_form(g, omega);
            if (!lee.ok() || lee.theta != KForm::basis_dual(4, 3)) {
              detail = "Lee form is not w";
              return false;
            }
          }
          return check_lck(prim).vaisman && check_lck(out.hermitian).vaisman;
        });

  r.run(6, "modification laws: involution and composition on 100 randomized valid maps",
        [](std::string& detail) {
          Rng rng(2024);
          std::vector<std::string> names = {"kodaira_primary", "r_times_su2", "r_times_sl2r",
                                            "r_times_heisenberg"};
          int done = 0;
          int attempts = 0;
          while (done < 100 && ++attempts < 4000) {
            HermitianData h = *catalog_get(names[rng.index(names.size())]).hermitian;
            auto m1 = random_modification_map(h, rng);
            auto m2 = random_modification_map(h, rng);
            if (!m1 || !m2) continue;
            ModificationMap m2s{m1->generators, m2->coeffs};
            if (!validate_modification(h, *m1).all_pass()) continue;
            if (!validate_modification(h, m2s).all_pass()) continue;
            ++done;
            ModifiedAlgebra once = modify(h, *m1);
            if (is_unimodular(once.algebra) != is_unimodular(h.algebra)) {
              detail = "unimodularity not preserved";
              return false;
            }
            if (!modify(once.hermitian, m1->negated()).algebra.same_table(h.algebra)) {
              detail = "involution fails";
              return false;
            }
            if (!modify(once.hermitian, m2s).algebra.same_table(modify(h, m1->plus(m2s)).algebra)) {
              detail = "composition fails";
              return false;
            }
          }
          if (done < 100) detail = "only " + std::to_string(done) + " valid maps generated";
          return done >= 100;
        });

  r.run(7, "quantization: C^k -> heisenberg(k), quotient round trip, delta sums, unimodularity transfer",
        [](std::string& detail) {
          for (int k = 1; k <= 4; ++k) {
            CentralExtensionData ext =
                quantize(*catalog_get("complex_space", {{"k", Scalar(k)}}).kahler, "Z");
            LieAlgebra heis = catalog_get("heisenberg", {{"k", Scalar(k)}}).algebra;
            if (!ext.total.same_table(heis) || ext.total.basis_names() != heis.basis_names()) {
              detail = "quantize(C^" + std::to_string(k) + ") is not heisenberg";
              return false;
            }
            if (is_unimodular(ext.total) != is_unimodular(ext.base.algebra)) {
              detail = "unimodularity transfer fails";
              return false;
            }
            SasakiData s = *catalog_get("heisenberg", {{"k", Scalar(k)}}).sasaki;
            CentralExtensionData back = quantize(kahler_quotient(s), "Z");
            if (!back.total.same_table(s.algebra)) {
              detail = "quantize after quotient is not the identity";
              return false;
            }
          }
          auto ext1 = quantize(*catalog_get("complex_space").kahler, "Z");
          CentralExtensionData sum = delta_sum(ext1, ext1);
          if (!sum.total.same_table(catalog_get("heisenberg", {{"k", Scalar(2)}}).algebra)) {
            detail = "delta_sum(h1, h1) is not heisenberg(2)";
            return false;
          }
          if (!sum.base.algebra.same_table(direct_sum(ext1.base.algebra, ext1.base.algebra))) {
            detail = "delta_sum base is not the direct sum of bases";
            return false;
          }
          if (is_unimodular(sum.total) != is_unimodular(sum.base.algebra)) {
            detail = "unimodularity transfer fails on the delta sum";
            return false;
          }
          return true;
        });

  r.run(8, "canonical Vaisman structure passes for every catalog Sasaki entry and b in {-2,-1,0,1/2,1,3}",
        [](std::string& detail) {
          std::vector<std::pair<std::string, std::map<std::string, Scalar>>> entries = {
              {"heisenberg", {{"k", Scalar(1)}}},
              {"heisenberg", {{"k", Scalar(2)}}},
              {"su2", {}},
              {"sl2r", {}}};
          for (const auto& [name, params] : entries)
            for (const char* bs : {"-2", "-1", "0", "1/2", "1", "3"}) {
              HermitianData h = canonical_vaisman(*catalog_get(name, params).sasaki, q(bs));
              LcKReport rep = check_lck(h);
              if (!rep.vaisman || rep.theta != KForm::basis_dual(h.algebra.dim(), 0)) {
                detail = name + " at b = " + bs;
                return false;
              }
            }
          return true;
        });

  r.run(9, "classification: the catalog Vaisman algebras land on their named types",
        [](std::string& detail) {
          auto expect = [&](const char* name, std::map<std::string, Scalar> params,
                            const std::string& tag) {
            ClassifyResult res = classify_vaisman(*catalog_get(name, params).hermitian);
            if (!res.ok || res.verdict.tag() != tag) {
              detail = std::string(name) + " -> " + (res.ok ? res.verdict.tag() : res.error_kind);
              return false;
            }
            return true;
          };
          return expect("r_times_heisenberg", {{"k", Scalar(1)}}, "HEISENBERG(1)") &&
                 expect("r_times_heisenberg", {{"k", Scalar(2)}}, "HEISENBERG(2)") &&
                 expect("r_times_su2", {}, "SU2") && expect("r_times_sl2r", {}, "SL2R") &&
                 expect("kodaira_secondary", {}, "HEISENBERG(1)");
        });

  r.run(10, "calculus soundness: d^2 = 0 up to top degree; Jacobi iff d^2 = 0 on 50 valid + 50 invalid tables",
        [](std::string& detail) {
          for (const auto& name : catalog_names()) {
            LieAlgebra g = catalog_get(name).algebra;
            const int n = g.dim();
            // all basis monomials of all degrees
            std::function<bool(std::vector<int>&, int)> all = [&](std::vector<int>& idx, int start) {
              if (!idx.empty()) {
                KForm f = KForm::monomial(n, idx, 1);
                if (!ce_d(g, ce_d(g, f)).is_zero()) return false;
              }
              if (static_cast<int>(idx.size()) == n) return true;
              for (int i = start; i < n; ++i) {
                idx.push_back(i);
                if (!all(idx, i + 1)) return false;
                idx.pop_back();
              }
              return true;
            };
            std::vector<int> idx;
            if (!all(idx, 0)) {
              detail = "d^2 != 0 on " + name;
              return false;
            }
          }
          auto d2_on_basis_oneforms_vanishes = [](const LieAlgebra& g) {
            for (int k = 0; k < g.dim(); ++k)
              if (!ce_d(g, ce_d(g, KForm::basis_dual(g.dim(), k))).is_zero()) return false;
            return true;
          };
          Rng rng(77);
          std::vector<std::string> base = {"heisenberg", "su2", "sl2r", "kodaira_secondary"};
          int valid_seen = 0, invalid_seen = 0;
          while (valid_seen < 50 || invalid_seen < 50) {
            LieAlgebra g0 = catalog_get(base[rng.index(base.size())]).algebra;
            const int n = g0.dim();
            LieAlgebra g = change_basis(g0, rng.invertible(n), g0.basis_names());
            if (valid_seen < 50) {
              ++valid_seen;
              if (!jacobi_defect(g).empty() || !d2_on_basis_oneforms_vanishes(g)) {
                detail = "valid table: defect empty and d^2 = 0 must both hold";
                return false;
              }
            }
            if (invalid_seen < 50) {
              BracketTable t = g.table();
              int i = rng.index(n - 1);
              int j = i + 1 + rng.index(n - i - 1);
              Vec coeffs = t.count({i, j}) ? t[{i, j}] : Vec(n);
              coeffs[rng.index(n)] += rng.nonzero_rational();
              t[{i, j}] = coeffs;
              LieAlgebra bad = LieAlgebra::build(g.basis_names(), t, false);
              if (jacobi_defect(bad).empty()) continue;  // perturbation stayed a Lie algebra
              ++invalid_seen;
              if (d2_on_basis_oneforms_vanishes(bad)) {
                detail = "invalid table with d^2 = 0 on basis 1-forms";
                return false;
              }
            }
          }
          return true;
        });

  r.run(11, "Sasaki axioms: catalog data passes; targeted perturbations fail the intended item",
        [](std::string& detail) {
          for (int k = 1; k <= 3; ++k)
            if (!check_sasaki(*catalog_get("heisenberg", {{"k", Scalar(k)}}).sasaki).all_pass()) {
              detail = "heisenberg(" + std::to_string(k) + ")";
              return false;
            }
          for (const auto* name : {"su2", "sl2r"})
            if (!check_sasaki(*catalog_get(name).sasaki).all_pass()) {
              detail = name;
              return false;
            }
          for (const auto* name : {"heisenberg", "su2", "sl2r"}) {
            SasakiData scaled = *catalog_get(name).sasaki;
            scaled.eta = vec_scale(2, scaled.eta);
            StructureReport rep = check_sasaki(scaled);
            if (rep.passed("reeb") || !rep.passed("contact") || !rep.passed("metric")) {
              detail = std::string("scaled eta on ") + name;
              return false;
            }
            SasakiData broken = *catalog_get(name).sasaki;
            broken.metric.at(0, 0) += 1;
            StructureReport rep2 = check_sasaki(broken);
            // the metric-free axioms must stay green; the Killing item also
            // stays green exactly when eta is central (heisenberg)
            if (rep2.passed("metric") || !rep2.passed("contact") || !rep2.passed("reeb") ||
                !rep2.passed("tensor")) {
              detail = std::string("broken metric on ") + name;
              return false;
            }
            if (std::string(name) == "heisenberg" && !rep2.passed("killing_cr")) {
              detail = "broken metric on heisenberg disturbed the Killing item";
              return false;
            }
          }
          return true;
        });

  r.run(12, "CLI contract: catalog exports round trip; exit codes 0/1/2 on the three scenario files",
        [](std::string& detail) {
          for (const auto& name : catalog_names()) {
            AlgebraBundle b = bundle_from_catalog(catalog_get(name));
            std::string text = serialize_bundle(b);
            AlgebraBundle re = parse_bundle(text);
            if (serialize_bundle(re) != text) {
              detail = "round trip differs for " + name;
              return false;
            }
          }
          const char* cli = std::getenv("LCK_CLI");
          if (!cli) {
            detail = "LCK_CLI not set";
            return false;
          }
          fs::path dir = fs::temp_directory_path() / "lck_acceptance";
          fs::create_directories(dir);
          auto write = [&](const std::string& fname, const std::string& text) {
            std::ofstream out(dir / fname);
            out << text;
            return (dir / fname).string();
          };
          std::string vaisman_file = write(
              "omega_psi_0_0_1.json",
              serialize_bundle(bundle_from_catalog(catalog_get(
                  "omega_psi", {{"a", Scalar(0)}, {"b", Scalar(0)}, {"c", Scalar(1)}}))));
          std::string non_vaisman_file = write(
              "omega_psi_1_0_2.json",
              serialize_bundle(bundle_from_catalog(catalog_get(
                  "omega_psi", {{"a", Scalar(1)}, {"b", Scalar(0)}, {"c", Scalar(2)}}))));
          std::string broken_file = write("broken.json", R"({
            "name": "broken",
            "dim": 2,
            "basis": ["a", "b"],
            "brackets": [{"i": 0, "j": 1, "terms": [{"k": 0, "coeff": "1/0"}]}]
          })");
          int c0 = cli_run(cli, "check " + vaisman_file + " --structure vaisman");
          int c1 = cli_run(cli, "check " + non_vaisman_file + " --structure vaisman");
          int c2 = cli_run(cli, "check " + broken_file + " --structure vaisman");
          if (c0 != 0 || c1 != 1 || c2 != 2) {
            detail = "exit codes " + std::to_string(c0) + "/" + std::to_string(c1) + "/" +
                     std::to_string(c2) + ", expected 0/1/2";
            return false;
          }
          return true;
        });

  if (r.failures == 0) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::cout << r.failures << " criteria failed\n";
  return 1;
}
