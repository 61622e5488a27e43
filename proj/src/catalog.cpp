#include "lck/catalog.hpp"

namespace lck {

namespace {

int int_param(const std::map<std::string, Scalar>& params, const std::string& key, int fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  if (denominator(it->second) != 1)
    throw InputError("catalog: parameter \"" + key + "\" must be an integer");
  Integer n = numerator(it->second);
  if (n < 1 || n > 64) throw InputError("catalog: parameter \"" + key + "\" out of range [1, 64]");
  return static_cast<int>(n);
}

Scalar rat_param(const std::map<std::string, Scalar>& params, const std::string& key,
                 const Scalar& fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

LieAlgebra heisenberg_algebra(int k) {
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) {
    names.push_back("X" + std::to_string(i));
    names.push_back("Y" + std::to_string(i));
  }
  names.push_back("Z");
  const int n = 2 * k + 1;
  BracketTable table;
  for (int i = 0; i < k; ++i) {
    Vec v(n);
    v[n - 1] = -1;
    table.emplace(std::make_pair(2 * i, 2 * i + 1), v);
  }
  return LieAlgebra::build(std::move(names), std::move(table), false);
}

SasakiData heisenberg_sasaki(int k) {
  LieAlgebra g = heisenberg_algebra(k);
  const int n = 2 * k + 1;
  Vec eta(n);
  eta[n - 1] = 1;
  Mat jt(n, n);
  for (int i = 0; i < k; ++i) {
    jt.at(2 * i + 1, 2 * i) = -1;  // Jt X_i = -Y_i
    jt.at(2 * i, 2 * i + 1) = 1;   // Jt Y_i = X_i
  }
  return {g, KForm::basis_dual(n, n - 1), eta, jt, Mat::identity(n)};
}

LieAlgebra su2_algebra() {
  BracketTable table;
  table.emplace(std::make_pair(0, 1), Vec{0, 0, 1});   // [e1,e2] = e3
  table.emplace(std::make_pair(1, 2), Vec{1, 0, 0});   // [e2,e3] = e1
  table.emplace(std::make_pair(0, 2), Vec{0, -1, 0});  // [e1,e3] = -e2
  return LieAlgebra::build({"e1", "e2", "e3"}, std::move(table), false);
}

SasakiData su2_sasaki() {
  LieAlgebra g = su2_algebra();
  Mat jt(3, 3);
  jt.at(1, 0) = 1;   // Jt e1 = e2
  jt.at(0, 1) = -1;  // Jt e2 = -e1
  return {g, KForm::basis_dual(3, 2), Vec{0, 0, 1}, jt, Mat::identity(3)};
}

LieAlgebra sl2r_algebra() {
  BracketTable table;
  table.emplace(std::make_pair(0, 1), Vec{0, 0, -1});  // [X,Y] = -Z
  table.emplace(std::make_pair(0, 2), Vec{0, -1, 0});  // [X,Z] = -Y
  table.emplace(std::make_pair(1, 2), Vec{1, 0, 0});   // [Y,Z] = X
  return LieAlgebra::build({"X", "Y", "Z"}, std::move(table), false);
}

SasakiData sl2r_sasaki() {
  LieAlgebra g = sl2r_algebra();
  Mat jt(3, 3);
  jt.at(1, 0) = -1;  // Jt X = -Y
  jt.at(0, 1) = 1;   // Jt Y = X
  return {g, KForm::basis_dual(3, 2), Vec{0, 0, 1}, jt, Mat::identity(3)};
}

KahlerAlgebraData complex_space_data(int k) {
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) {
    names.push_back("X" + std::to_string(i));
    names.push_back("Y" + std::to_string(i));
  }
  LieAlgebra g = LieAlgebra::build(std::move(names), {}, false);
  const int n = 2 * k;
  Mat j(n, n);
  KForm omega(n, 2);
  for (int i = 0; i < k; ++i) {
    j.at(2 * i + 1, 2 * i) = -1;
    j.at(2 * i, 2 * i + 1) = 1;
    omega.add_term({2 * i, 2 * i + 1}, 1);
  }
  return {g, Subspace(n), j, omega};
}

HermitianData kodaira_data(bool secondary) {
  BracketTable table;
  table.emplace(std::make_pair(0, 1), Vec{0, 0, -1, 0});  // [X,Y] = -Z
  if (secondary) {
    table.emplace(std::make_pair(0, 3), Vec{0, 1, 0, 0});   // [X,W] = Y
    table.emplace(std::make_pair(1, 3), Vec{-1, 0, 0, 0});  // [Y,W] = -X
  }
  LieAlgebra g = LieAlgebra::build({"X", "Y", "Z", "W"}, std::move(table), false);
  Mat j(4, 4);
  j.at(1, 0) = -1;  // JX = -Y
  j.at(0, 1) = 1;   // JY = X
  j.at(3, 2) = -1;  // JZ = -W
  j.at(2, 3) = 1;   // JW = Z
  return {g, Mat::identity(4), j};
}

LieAlgebra r_times_sl2r_algebra() {
  LieAlgebra t_line = LieAlgebra::build({"T"}, {}, false);
  return direct_sum(t_line, sl2r_algebra());
}

HermitianData omega_psi_data(const Scalar& a, const Scalar& b, const Scalar& c) {
  LieAlgebra g = r_times_sl2r_algebra();  // basis T, X, Y, Z
  Mat j(4, 4);
  j.at(2, 1) = -1;  // JX = -Y
  j.at(1, 2) = 1;   // JY = X
  j.at(3, 0) = 1;   // JT = Z
  j.at(0, 3) = -1;  // JZ = -T
  KForm psi(4, 1);
  psi.add_term({1}, a);
  psi.add_term({2}, b);
  psi.add_term({3}, c);
  KForm omega = wedge(psi, KForm::basis_dual(4, 0)) + ce_d(g, psi);
  Mat metric = j.transposed() * matrix_of_two_form(omega);
  return {g, metric, j};
}

LieAlgebra gl2r_mod_algebra() {
  // R x gl(2,R): T and W central, X, Y, Z spanning sl(2,R).
  BracketTable table;
  table.emplace(std::make_pair(1, 2), Vec{0, 0, 0, -1, 0});  // [X,Y] = -Z
  table.emplace(std::make_pair(1, 3), Vec{0, 0, -1, 0, 0});  // [X,Z] = -Y
  table.emplace(std::make_pair(2, 3), Vec{0, 1, 0, 0, 0});   // [Y,Z] = X
  return LieAlgebra::build({"T", "X", "Y", "Z", "W"}, std::move(table), false);
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"abelian",       "heisenberg",        "su2",
          "sl2r",          "r_times_heisenberg", "r_times_su2",
          "r_times_sl2r",  "complex_space",      "kodaira_primary",
          "kodaira_secondary", "omega_psi",      "gl2r_mod"};
}

CatalogEntry catalog_get(const std::string& name, const std::map<std::string, Scalar>& params) {
  CatalogEntry e;
  e.name = name;
  e.params = params;
  if (name == "abelian") {
    int n = int_param(params, "n", 1);
    e.algebra = LieAlgebra::abelian(n);
    e.expected = {{"jacobi", "pass"},
                  {"unimodular", "true"},
                  {"nilpotent", "true"},
                  {"center_dim", std::to_string(n)}};
    e.notes = "abelian algebra of dimension n";
  } else if (name == "heisenberg") {
    int k = int_param(params, "k", 1);
    SasakiData s = heisenberg_sasaki(k);
    e.algebra = s.algebra;
    e.sasaki = s;
    e.expected = {{"jacobi", "pass"},    {"unimodular", "true"}, {"nilpotent", "true"},
                  {"center_dim", "1"},   {"sasaki", "pass"},     {"semisimple", "false"}};
    e.notes = "Heisenberg algebra with its standard contact structure";
  } else if (name == "su2") {
    SasakiData s = su2_sasaki();
    e.algebra = s.algebra;
    e.sasaki = s;
    e.kahler = sasaki_pair_data(s);
    e.expected = {{"jacobi", "pass"},   {"unimodular", "true"}, {"semisimple", "true"},
                  {"center_dim", "0"},  {"sasaki", "pass"},     {"nilpotent", "false"},
                  {"kahler", "pass"}};
    e.notes = "su(2) with cyclic brackets; Sasaki metric is -1/2 times the Killing form";
  } else if (name == "sl2r") {
    SasakiData s = sl2r_sasaki();
    e.algebra = s.algebra;
    e.sasaki = s;
    e.kahler = sasaki_pair_data(s);
    e.expected = {{"jacobi", "pass"},  {"unimodular", "true"}, {"semisimple", "true"},
                  {"center_dim", "0"}, {"sasaki", "pass"},     {"solvable", "false"},
                  {"kahler", "pass"}};
    e.notes = "sl(2,R) with the rotation generator as Reeb direction";
  } else if (name == "r_times_heisenberg") {
    int k = int_param(params, "k", 1);
    HermitianData h = canonical_vaisman(heisenberg_sasaki(k), 0);
    e.algebra = h.algebra;
    e.hermitian = h;
    e.expected = {{"jacobi", "pass"},
                  {"unimodular", "true"},
                  {"center_dim", "2"},
                  {"positive_definite", "true"},
                  {"vaisman", "true"},
                  {"theta_dual_of", "T"},
                  {"classify", "HEISENBERG(" + std::to_string(k) + ")"}};
    e.notes = "R x Heisenberg with its canonical Vaisman structure (b = 0)";
  } else if (name == "r_times_su2") {
    HermitianData h = canonical_vaisman(su2_sasaki(), 0);
    e.algebra = h.algebra;
    e.hermitian = h;
    e.expected = {{"jacobi", "pass"},        {"unimodular", "true"}, {"center_dim", "1"},
                  {"positive_definite", "true"}, {"vaisman", "true"},    {"theta_dual_of", "T"},
                  {"classify", "SU2"}};
    e.notes = "R x su(2) with its canonical Vaisman structure (b = 0)";
  } else if (name == "r_times_sl2r") {
    HermitianData h = canonical_vaisman(sl2r_sasaki(), 0);
    e.algebra = h.algebra;
    e.hermitian = h;
    e.expected = {{"jacobi", "pass"},        {"unimodular", "true"}, {"center_dim", "1"},
                  {"positive_definite", "true"}, {"vaisman", "true"},    {"theta_dual_of", "T"},
                  {"classify", "SL2R"}};
    e.notes = "R x sl(2,R) with its canonical Vaisman structure (b = 0)";
  } else if (name == "complex_space") {
    int k = int_param(params, "k", 1);
    KahlerAlgebraData d = complex_space_data(k);
    e.algebra = d.algebra;
    e.kahler = d;
    e.expected = {{"jacobi", "pass"}, {"kahler", "pass"}, {"j_algebra", "fail"}, {"unimodular", "true"}};
    e.notes = "C^k: abelian R^{2k} with the standard complex structure and symplectic form";
  } else if (name == "kodaira_primary") {
    HermitianData h = kodaira_data(false);
    e.algebra = h.algebra;
    e.hermitian = h;
    e.expected = {{"jacobi", "pass"},   {"unimodular", "true"},  {"nilpotent", "true"},
                  {"center_dim", "2"},  {"vaisman", "true"},     {"theta_dual_of", "W"},
                  {"nijenhuis", "empty"}, {"classify", "HEISENBERG(1)"}};
    e.notes = "R x Heisenberg in the basis {X, Y, Z, W}, Omega = x^y + z^w";
  } else if (name == "kodaira_secondary") {
    HermitianData h = kodaira_data(true);
    e.algebra = h.algebra;
    e.hermitian = h;
    e.expected = {{"jacobi", "pass"},     {"unimodular", "true"}, {"nilpotent", "false"},
                  {"solvable", "true"},   {"center_dim", "1"},    {"vaisman", "true"},
                  {"theta_dual_of", "W"}, {"nijenhuis", "empty"}, {"classify", "HEISENBERG(1)"}};
    e.notes = "unimodular non-nilpotent solvable modification of kodaira_primary";
  } else if (name == "omega_psi") {
    Scalar a = rat_param(params, "a", 0);
    Scalar b = rat_param(params, "b", 0);
    Scalar c = rat_param(params, "c", 1);
    e.params = {{"a", a}, {"b", b}, {"c", c}};
    HermitianData h = omega_psi_data(a, b, c);
    e.algebra = h.algebra;
    e.hermitian = h;
    KForm psi(4, 1);
    psi.add_term({1}, a);
    psi.add_term({2}, b);
    psi.add_term({3}, c);
    e.forms.emplace("psi", psi);
    const Scalar d = c * c - a * a - b * b;
    const bool pd = c > 0 && d > 0;
    const bool vaisman = pd && a == 0 && b == 0;
    e.expected = {{"jacobi", "pass"},
                  {"unimodular", "true"},
                  {"positive_definite", pd ? "true" : "false"},
                  {"lck", (pd && d != 0) ? "true" : "false"},
                  {"vaisman", vaisman ? "true" : "false"}};
    if (d != 0) e.expected.emplace("theta_dual_of", "T");
    if (vaisman) e.expected.emplace("classify", "SL2R");
    e.notes = "Omega_psi = psi ^ t + d psi on R x sl(2,R), psi = a x + b y + c z";
  } else if (name == "gl2r_mod") {
    e.algebra = gl2r_mod_algebra();
    e.vectors.emplace("S", Vec{0, 0, 0, -1, 1});  // S = W - Z
    e.expected = {{"jacobi", "pass"}, {"unimodular", "true"}, {"center_dim", "2"}};
    e.notes = "R x gl(2,R); modifying r_times_sl2r by ad_S reaches this pair mod <S>";
  } else {
    throw InputError("catalog: unknown entry \"" + name + "\"");
  }
  return e;
}

std::string evaluate_predicate(const CatalogEntry& entry, const std::string& predicate) {
  const LieAlgebra& g = entry.algebra;
  auto need_hermitian = [&]() -> const HermitianData& {
    if (!entry.hermitian) throw InputError("predicate \"" + predicate + "\" needs Hermitian data");
    return *entry.hermitian;
  };
  if (predicate == "jacobi") return jacobi_defect(g).empty() ? "pass" : "fail";
  if (predicate == "unimodular") return is_unimodular(g) ? "true" : "false";
  if (predicate == "semisimple") return is_semisimple(g) ? "true" : "false";
  if (predicate == "nilpotent") return is_nilpotent(g) ? "true" : "false";
  if (predicate == "solvable") return is_solvable(g) ? "true" : "false";
  if (predicate == "center_dim") return std::to_string(center(g).dim());
  if (predicate == "positive_definite")
    return is_positive_definite(need_hermitian().metric) ? "true" : "false";
  if (predicate == "lck") return check_lck(need_hermitian()).lck() ? "true" : "false";
  if (predicate == "vaisman") return check_lck(need_hermitian()).vaisman ? "true" : "false";
  if (predicate == "theta_dual_of") {
    LcKReport rep = check_lck(need_hermitian());
    if (!rep.lck_identity) return "(none)";
    for (int i = 0; i < g.dim(); ++i)
      if (rep.theta == KForm::basis_dual(g.dim(), i)) return g.basis_names()[i];
    return rep.theta.str(g.basis_names());
  }
  if (predicate == "classify") {
    ClassifyResult r = classify_vaisman(need_hermitian());
    return r.ok ? r.verdict.tag() : r.error_kind;
  }
  if (predicate == "sasaki") {
    if (!entry.sasaki) throw InputError("predicate \"sasaki\" needs Sasaki data");
    return check_sasaki(*entry.sasaki).all_pass() ? "pass" : "fail";
  }
  if (predicate == "kahler") {
    if (!entry.kahler) throw InputError("predicate \"kahler\" needs Kahler data");
    return check_kahler_algebra(*entry.kahler).all_pass() ? "pass" : "fail";
  }
  if (predicate == "j_algebra") {
    if (!entry.kahler) throw InputError("predicate \"j_algebra\" needs Kahler data");
    return check_kahler_algebra(*entry.kahler).passed("j_algebra") ? "pass" : "fail";
  }
  if (predicate == "nijenhuis") {
    if (!entry.hermitian && !entry.sasaki)
      throw InputError("predicate \"nijenhuis\" needs a complex structure");
    const Mat& j = entry.hermitian ? entry.hermitian->J : entry.sasaki->Jtilde;
    return nijenhuis_defect(g, j, Subspace(g.dim())).empty() ? "empty" : "nonempty";
  }
  throw InputError("unknown predicate \"" + predicate + "\"");
}

}  // namespace lck
