#include "lck/constructions.hpp"

#include <algorithm>
#include <set>

namespace lck {

namespace {

Vec basis_vec(int n, int i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

std::string unique_name(std::string candidate, const std::vector<std::string>& taken) {
  std::set<std::string> seen(taken.begin(), taken.end());
  while (seen.count(candidate)) candidate += "'";
  return candidate;
}

}  // namespace

Mat ModificationMap::phi(const Vec& v) const {
  const int n = coeffs.rows();
  Mat out(n, n);
  for (size_t a = 0; a < generators.size(); ++a) {
    Scalar f = 0;
    for (int i = 0; i < n; ++i) f += v[i] * coeffs.at(i, static_cast<int>(a));
    if (f != 0) out = out + generators[a] * f;
  }
  return out;
}

ModificationMap ModificationMap::negated() const { return {generators, -coeffs}; }

ModificationMap ModificationMap::plus(const ModificationMap& o) const {
  if (generators.size() != o.generators.size())
    throw ValidationError("ModificationMap::plus: generator lists differ");
  for (size_t a = 0; a < generators.size(); ++a)
    if (!(generators[a] == o.generators[a]))
      throw ValidationError("ModificationMap::plus: generator lists differ");
  return {generators, coeffs + o.coeffs};
}

StructureReport validate_modification(const HermitianData& h, const ModificationMap& m) {
  StructureReport rep;
  const LieAlgebra& g = h.algebra;
  const int n = g.dim();
  const int ngen = static_cast<int>(m.generators.size());

  bool shape = m.coeffs.rows() == n && m.coeffs.cols() == ngen;
  for (const Mat& s : m.generators) shape = shape && s.rows() == n && s.cols() == n;
  rep.add("shape", "coefficient rows and generators match the algebra dimension", shape);
  if (!shape) return rep;

  bool deriv = true;
  std::string dw;
  for (int a = 0; a < ngen && deriv; ++a)
    for (int i = 0; i < n && deriv; ++i)
      for (int j = i + 1; j < n && deriv; ++j) {
        const Mat& s = m.generators[a];
        Vec lhs = mat_vec(s, g.bracket_basis(i, j));
        Vec rhs = vec_add(g.bracket(mat_vec(s, basis_vec(n, i)), basis_vec(n, j)),
                          g.bracket(basis_vec(n, i), mat_vec(s, basis_vec(n, j))));
        if (lhs != rhs) {
          deriv = false;
          dw = "sigma_" + std::to_string(a + 1) + " on (" + g.basis_names()[i] + "," +
               g.basis_names()[j] + ")";
        }
      }
  rep.add("derivation", "every generator is a derivation", deriv, dw);

  bool skew = true;
  std::string sw;
  for (int a = 0; a < ngen && skew; ++a) {
    Mat defect = m.generators[a].transposed() * h.metric + h.metric * m.generators[a];
    for (int i = 0; i < n && skew; ++i)
      for (int j = 0; j < n && skew; ++j)
        if (defect.at(i, j) != 0) {
          skew = false;
          sw = "sigma_" + std::to_string(a + 1) + " on (" + g.basis_names()[i] + "," +
               g.basis_names()[j] + "): g(sigma U, V) + g(U, sigma V) = " + scalar_str(defect.at(i, j));
        }
  }
  rep.add("skew", "every generator is skew-symmetric for the metric", skew, sw);

  bool jc = true;
  std::string jw;
  for (int a = 0; a < ngen && jc; ++a)
    if (!(m.generators[a] * h.J - h.J * m.generators[a]).is_zero()) {
      jc = false;
      jw = "sigma_" + std::to_string(a + 1) + " does not commute with J";
    }
  rep.add("j_compatible", "every generator commutes with J", jc, jw);

  bool comm = true;
  std::string cw;
  for (int a = 0; a < ngen && comm; ++a)
    for (int b = a + 1; b < ngen && comm; ++b)
      if (!(m.generators[a] * m.generators[b] - m.generators[b] * m.generators[a]).is_zero()) {
        comm = false;
        cw = "sigma_" + std::to_string(a + 1) + " and sigma_" + std::to_string(b + 1);
      }
  rep.add("commuting", "the generators commute pairwise", comm, cw);

  auto phi_is_zero_on = [&](const Vec& v) {
    for (int a = 0; a < ngen; ++a) {
      Scalar f = 0;
      for (int i = 0; i < n; ++i) f += v[i] * m.coeffs.at(i, a);
      if (f != 0) return false;
    }
    return true;
  };

  bool kills_derived = true;
  std::string kdw;
  for (int i = 0; i < n && kills_derived; ++i)
    for (int j = i + 1; j < n && kills_derived; ++j)
      if (!phi_is_zero_on(g.bracket_basis(i, j))) {
        kills_derived = false;
        kdw = "phi([" + g.basis_names()[i] + "," + g.basis_names()[j] + "]) != 0";
      }
  rep.add("kills_derived", "phi([g, g]) = 0", kills_derived, kdw);

  bool kills_images = true;
  std::string kiw;
  for (int a = 0; a < ngen && kills_images; ++a)
    for (int i = 0; i < n && kills_images; ++i)
      if (!phi_is_zero_on(mat_vec(m.generators[a], basis_vec(n, i)))) {
        kills_images = false;
        kiw = "phi(sigma_" + std::to_string(a + 1) + "(" + g.basis_names()[i] + ")) != 0";
      }
  rep.add("kills_images", "phi(sigma(X)) = 0 for every generator", kills_images, kiw);
  return rep;
}

ModifiedAlgebra modify(const HermitianData& h, const ModificationMap& m) {
  StructureReport val = validate_modification(h, m);
  if (!val.all_pass()) {
    for (const auto& it : val.items)
      if (!it.pass)
        throw ValidationError("modify: " + it.description +
                              (it.witness.empty() ? "" : " [" + it.witness + "]"));
  }
  const LieAlgebra& g = h.algebra;
  const int n = g.dim();
  std::vector<Mat> phi_of_basis;
  phi_of_basis.reserve(n);
  for (int i = 0; i < n; ++i) phi_of_basis.push_back(m.phi(basis_vec(n, i)));
  BracketTable table;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec br = g.bracket_basis(i, j);
      br = vec_add(br, mat_vec(phi_of_basis[i], basis_vec(n, j)));
      br = vec_sub(br, mat_vec(phi_of_basis[j], basis_vec(n, i)));
      if (!vec_is_zero(br)) table.emplace(std::make_pair(i, j), br);
    }
  LieAlgebra modified;
  try {
    modified = LieAlgebra::build(g.basis_names(), std::move(table), true);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("modify: modified bracket is not a Lie algebra: ") + e.what());
  }
  return {modified, HermitianData{modified, h.metric, h.J}};
}

ModifiedPair modify_pair(const LieAlgebra& g, const Subspace& h_sub, const Mat& J,
                         const std::vector<Mat>& k) {
  const int n = g.dim();
  const int m = static_cast<int>(k.size());
  for (int a = 0; a < m; ++a) {
    const Mat& s = k[a];
    if (s.rows() != n || s.cols() != n) throw ValidationError("modify_pair: generator size mismatch");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Vec lhs = mat_vec(s, g.bracket_basis(i, j));
        Vec rhs = vec_add(g.bracket(mat_vec(s, basis_vec(n, i)), basis_vec(n, j)),
                          g.bracket(basis_vec(n, i), mat_vec(s, basis_vec(n, j))));
        if (lhs != rhs) throw ValidationError("modify_pair: generator is not a derivation");
      }
    for (int i = 0; i < h_sub.dim(); ++i)
      if (!h_sub.contains(mat_vec(s, h_sub.basis_vector(i))))
        throw ValidationError("modify_pair: sigma(h) is not contained in h");
    Mat defect = J * s - s * J;
    for (int j = 0; j < n; ++j)
      if (!vec_is_zero(h_sub.reduce(defect.col(j))))
        throw ValidationError("modify_pair: J sigma != sigma J (mod h)");
    for (int b = a + 1; b < m; ++b)
      if (!(k[a] * k[b] - k[b] * k[a]).is_zero())
        throw ValidationError("modify_pair: generators do not commute");
  }
  std::vector<std::string> names = g.basis_names();
  for (int a = 1; a <= m; ++a) names.push_back(unique_name("k" + std::to_string(a), names));
  BracketTable table;
  for (const auto& [key, coeffs] : g.table()) {
    Vec v(n + m);
    std::copy(coeffs.begin(), coeffs.end(), v.begin());
    table.emplace(key, std::move(v));
  }
  // [K_a, e_i] = sigma_a(e_i), stored as [e_i, K_a] = -sigma_a(e_i).
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < n; ++i) {
      Vec img = mat_vec(k[a], basis_vec(n, i));
      if (vec_is_zero(img)) continue;
      Vec v(n + m);
      for (int t = 0; t < n; ++t) v[t] = -img[t];
      table.emplace(std::make_pair(i, n + a), std::move(v));
    }
  ModifiedPair out;
  out.algebra = LieAlgebra::build(std::move(names), std::move(table), true);
  std::vector<Vec> hgens;
  for (int i = 0; i < h_sub.dim(); ++i) {
    Vec v(n + m);
    Vec b = h_sub.basis_vector(i);
    std::copy(b.begin(), b.end(), v.begin());
    hgens.push_back(std::move(v));
  }
  for (int a = 0; a < m; ++a) hgens.push_back(basis_vec(n + m, n + a));
  out.h = Subspace::span(n + m, hgens);
  Mat jext(n + m, n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) jext.at(i, j) = J.at(i, j);
  out.J = std::move(jext);
  return out;
}

namespace {

CentralizeResult centralize_impl(const HermitianData& h, bool lee_only) {
  CentralizeResult out;
  LcKReport lck = check_lck(h);
  if (!lck.vaisman) {
    std::string why = lck.lee_error;
    if (why.empty() && !lck.killing_defects.empty()) why = "Lee field is not Killing";
    if (why.empty()) why = "l.c.K. axioms fail";
    throw ValidationError("centralize: input is not Vaisman (" + why + ")");
  }
  const int n = h.algebra.dim();
  Vec xi = lck.xi;
  HermitianData cur = h;

  bool lee_applied = false;
  if (!h.algebra.ad(xi).is_zero()) {
    // The Lee field must avoid the derived subalgebra for theta(xi) != 0 to
    // drive a homomorphism phi; assert and fail loudly otherwise.
    Subspace derived = series(h.algebra, SeriesKind::Derived)[1];
    if (derived.contains(xi))
      throw ValidationError("centralize: Lee field lies in [g, g]");
    Scalar theta_xi = lck.xi_norm;  // theta(xi) = g(xi, xi)
    Mat coeffs(n, 1);
    for (int i = 0; i < n; ++i) coeffs.at(i, 0) = -lck.theta.coeff({i}) / theta_xi;
    ModificationMap map{{h.algebra.ad(xi)}, coeffs};
    ModifiedAlgebra mod = modify(cur, map);
    cur = mod.hermitian;
    lee_applied = true;
  }
  out.report.add("lee_step", "Lee field made central", true,
                 lee_applied ? "modification by ad_xi applied" : "already central");

  LcKReport after = check_lck(cur);
  if (!after.vaisman)
    throw ValidationError("centralize: structure is no longer Vaisman after the Lee step");
  out.xi = after.xi;
  Vec eta = mat_vec(cur.J, after.xi);

  if (lee_only || cur.algebra.ad(eta).is_zero()) {
    out.report.add("reeb_step", "Reeb field central", !lee_only || cur.algebra.ad(eta).is_zero(),
                   cur.algebra.ad(eta).is_zero() ? "already central" : "skipped (Lee-only mode)");
    out.algebra = cur.algebra;
    out.data = cur;
    out.h = Subspace(cur.algebra.dim());
    out.eta = eta;
  } else {
    // Enlarge by the derivation ad_eta and absorb the central element
    // zeta = eta - ad_eta into the basis: the bracket table gains one central
    // generator and the compact direction eta - zeta moves into h.
    Mat ad_eta = cur.algebra.ad(eta);
    std::vector<std::string> names = cur.algebra.basis_names();
    names.push_back(unique_name("zeta", names));
    BracketTable table;
    for (const auto& [key, coeffs] : cur.algebra.table()) {
      Vec v(n + 1);
      std::copy(coeffs.begin(), coeffs.end(), v.begin());
      table.emplace(key, std::move(v));
    }
    LieAlgebra enlarged = LieAlgebra::build(std::move(names), std::move(table), true);
    Mat metric(n + 1, n + 1);
    Vec g_eta = mat_vec(cur.metric, eta);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) metric.at(i, j) = cur.metric.at(i, j);
      metric.at(i, n) = metric.at(n, i) = g_eta[i];
    }
    metric.at(n, n) = dot(g_eta, eta);
    Mat J(n + 1, n + 1);
    Vec j_eta = mat_vec(cur.J, eta);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) J.at(i, j) = cur.J.at(i, j);
      J.at(i, n) = j_eta[i];
    }
    Vec hvec(n + 1);
    for (int i = 0; i < n; ++i) hvec[i] = eta[i];
    hvec[n] = -1;
    out.algebra = enlarged;
    out.data = HermitianData{enlarged, metric, J};
    out.h = Subspace::span(n + 1, {hvec});
    out.xi = Vec(n + 1);
    for (int i = 0; i < n; ++i) out.xi[i] = after.xi[i];
    out.eta = basis_vec(n + 1, n);
    out.report.add("reeb_step", "Reeb field made central", true,
                   "pair enlargement by ad_eta; central element zeta absorbed, compact direction kept in h");
  }
  int zdim = center(out.algebra).dim();
  out.report.add("center", "center of the output has dimension 2", zdim == 2,
                 zdim == 2 ? "" : "dimension " + std::to_string(zdim));
  return out;
}

}  // namespace

CentralizeResult centralize(const HermitianData& h) { return centralize_impl(h, false); }

CentralizeResult centralize_lee_only(const HermitianData& h) { return centralize_impl(h, true); }

CentralExtensionData quantize(const KahlerAlgebraData& k, const std::string& eta_name) {
  if (k.omega.degree() != 2 || k.omega.ambient() != k.algebra.dim())
    throw ValidationError("quantize: omega must be a 2-form on the algebra");
  if (!ce_d(k.algebra, k.omega).is_zero())
    throw ValidationError("quantize: omega fails the cocycle identity (axiom v)");
  const int n = k.algebra.dim();
  std::vector<std::string> names = k.algebra.basis_names();
  names.push_back(unique_name(eta_name, names));
  BracketTable table;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec br = k.algebra.bracket_basis(i, j);
      Vec v(n + 1);
      std::copy(br.begin(), br.end(), v.begin());
      v[n] = -k.omega.coeff({i, j});
      if (!vec_is_zero(v)) table.emplace(std::make_pair(i, j), std::move(v));
    }
  CentralExtensionData out;
  out.base = k;
  out.total = LieAlgebra::build(std::move(names), std::move(table), true);
  out.eta = basis_vec(n + 1, n);
  out.psi = KForm::basis_dual(n + 1, n);
  return out;
}

KahlerAlgebraData sasaki_pair_data(const SasakiData& s) {
  return {s.algebra, Subspace::span(s.algebra.dim(), {s.eta}), s.Jtilde, ce_d(s.algebra, s.phi)};
}

KahlerAlgebraData kahler_quotient(const SasakiData& s) {
  StructureReport rep = check_sasaki(s);
  if (!rep.all_pass()) {
    for (const auto& it : rep.items)
      if (!it.pass) throw ValidationError("kahler_quotient: Sasaki check failed: " + it.description);
  }
  const int n = s.algebra.dim();
  if (!center(s.algebra).contains(s.eta))
    throw ValidationError(
        "kahler_quotient: the Reeb vector is not central, so the quotient is not defined at the "
        "algebra level; use the pair (g, <eta>, Jtilde, d phi) via sasaki_pair_data instead");
  Vec j_eta = mat_vec(s.Jtilde, s.eta);
  if (!Subspace::span(n, {s.eta}).contains(j_eta))
    throw ValidationError("kahler_quotient: Jtilde does not descend to the quotient");
  CentralQuotient q = quotient_by_central(s.algebra, s.eta);
  const int m = q.algebra.dim();
  KForm dphi = ce_d(s.algebra, s.phi);
  KForm omega(m, 2);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      omega.add_term({a, b}, dphi.eval({basis_vec(n, q.kept[a]), basis_vec(n, q.kept[b])}));
  Mat J(m, m);
  for (int a = 0; a < m; ++a) {
    Vec img = q.project(mat_vec(s.Jtilde, basis_vec(n, q.kept[a])));
    for (int b = 0; b < m; ++b) J.at(b, a) = img[b];
  }
  return {q.algebra, Subspace(m), J, omega};
}

CentralExtensionData delta_sum(const CentralExtensionData& a, const CentralExtensionData& b) {
  const int na = a.total.dim(), nb = b.total.dim();
  LieAlgebra product = direct_sum(a.total, b.total);
  Vec delta(na + nb);
  for (int i = 0; i < na; ++i) delta[i] = a.eta[i];
  for (int i = 0; i < nb; ++i) delta[na + i] -= b.eta[i];
  CentralQuotient q = quotient_by_central(product, delta);
  // Quotient removes the second summand's eta; reorder so the surviving eta
  // (the class of (eta, 0)) comes last, after the two base blocks.
  const int m2a = na - 1, m2b = nb - 1;
  std::vector<int> perm;
  for (int i = 0; i < m2a; ++i) perm.push_back(i);
  for (int i = 0; i < m2b; ++i) perm.push_back(m2a + 1 + i);
  perm.push_back(m2a);
  CentralExtensionData out;
  out.total = permute_basis(q.algebra, perm);
  const int m = m2a + m2b;
  out.eta = basis_vec(m + 1, m);
  out.psi = KForm::basis_dual(m + 1, m);
  LieAlgebra base_alg = direct_sum(a.base.algebra, b.base.algebra);
  KForm omega(m, 2);
  for (const auto& [idx, c] : a.base.omega.coeffs()) omega.add_term(idx, c);
  for (const auto& [idx, c] : b.base.omega.coeffs()) omega.add_term({idx[0] + m2a, idx[1] + m2a}, c);
  Mat J(m, m);
  for (int i = 0; i < m2a; ++i)
    for (int j = 0; j < m2a; ++j) J.at(i, j) = a.base.J.at(i, j);
  for (int i = 0; i < m2b; ++i)
    for (int j = 0; j < m2b; ++j) J.at(m2a + i, m2a + j) = b.base.J.at(i, j);
  std::vector<Vec> hgens;
  for (int i = 0; i < a.base.h.dim(); ++i) {
    Vec v(m);
    Vec src = a.base.h.basis_vector(i);
    std::copy(src.begin(), src.end(), v.begin());
    hgens.push_back(std::move(v));
  }
  for (int i = 0; i < b.base.h.dim(); ++i) {
    Vec v(m);
    Vec src = b.base.h.basis_vector(i);
    std::copy(src.begin(), src.end(), v.begin() + m2a);
    hgens.push_back(std::move(v));
  }
  out.base = {base_alg, Subspace::span(m, hgens), std::move(J), std::move(omega)};
  return out;
}

HermitianData canonical_vaisman(const SasakiData& s, const Scalar& b) {
  StructureReport rep = check_sasaki(s);
  if (!rep.all_pass()) {
    for (const auto& it : rep.items)
      if (!it.pass) throw ValidationError("canonical_vaisman: Sasaki check failed: " + it.description);
  }
  const int n1 = s.algebra.dim();
  const int n = n1 + 1;
  LieAlgebra t_line = LieAlgebra::build({unique_name("T", s.algebra.basis_names())}, {}, false);
  LieAlgebra total = direct_sum(t_line, s.algebra);

  Vec phi_row(n1);
  for (int i = 0; i < n1; ++i) phi_row[i] = s.phi.coeff({i});

  Mat J(n, n);
  // J T = b T + (1 + b^2) eta.
  J.at(0, 0) = b;
  for (int i = 0; i < n1; ++i) J.at(1 + i, 0) = (1 + b * b) * s.eta[i];
  // On g1: v = P(v) + phi(v) eta with P along eta; J v = Jtilde P(v) + phi(v) (-T - b eta).
  for (int j = 0; j < n1; ++j) {
    Vec v(n1);
    v[j] = 1;
    Scalar pv = phi_row[j];
    Vec p = vec_sub(v, vec_scale(pv, s.eta));
    Vec img = mat_vec(s.Jtilde, p);
    img = vec_sub(img, vec_scale(pv * b, s.eta));
    J.at(0, 1 + j) = -pv;
    for (int i = 0; i < n1; ++i) J.at(1 + i, 1 + j) = img[i];
  }

  KForm t = KForm::basis_dual(n, 0);
  KForm psi(n, 1);
  for (int i = 0; i < n1; ++i) psi.add_term({1 + i}, phi_row[i]);
  KForm omega = wedge(t, psi) * Scalar(-1) + ce_d(total, psi);

  // g(e_i, e_j) = Omega(J e_i, e_j) = (J e_i)^T W e_j with W the matrix of Omega.
  Mat metric = J.transposed() * matrix_of_two_form(omega);
  return {total, metric, J};
}

std::string ClassificationVerdict::tag() const {
  switch (type) {
    case Type::Heisenberg:
      return "HEISENBERG(" + std::to_string(k) + ")";
    case Type::Su2:
      return "SU2";
    case Type::Sl2r:
      return "SL2R";
  }
  return "?";
}

ClassifyResult classify_vaisman(const HermitianData& h) {
  ClassifyResult out;
  LcKReport lck = check_lck(h);
  if (!lck.vaisman) {
    out.error_kind = "NotVaisman";
    out.message = lck.lee_error.empty() ? "the structure is not Vaisman" : lck.lee_error;
    if (!lck.killing_defects.empty()) out.message = "Lee field is not Killing";
    return out;
  }
  if (!is_unimodular(h.algebra)) {
    out.error_kind = "NotUnimodular";
    out.message = "the algebra is not unimodular";
    return out;
  }
  if (lck.theta.is_zero()) {
    out.error_kind = "UnrecognizedShape";
    out.message = "theta = 0 (Kahler structure), outside the Vaisman classification";
    return out;
  }
  CentralizeResult cent = centralize_lee_only(h);
  LcKReport after = check_lck(cent.data);
  const int n = cent.algebra.dim();
  Vec theta_row(n);
  for (int i = 0; i < n; ++i) theta_row[i] = after.theta.coeff({i});
  Mat theta_mat(1, n);
  for (int i = 0; i < n; ++i) theta_mat.at(0, i) = theta_row[i];
  Subspace ker_theta = Subspace::span(n, null_space(theta_mat));
  LieAlgebra g0;
  try {
    g0 = subalgebra_on(cent.algebra, ker_theta);
  } catch (const ValidationError&) {
    out.error_kind = "UnrecognizedShape";
    out.message = "ker theta is not a subalgebra after centralization";
    return out;
  }
  Subspace z0 = center(g0);
  out.verdict.center_dim_g0 = z0.dim();
  if (z0.dim() == 1) {
    Subspace derived = series(g0, SeriesKind::Derived)[1];
    bool two_step = z0.contains(derived) && derived.dim() >= 1;
    bool odd = g0.dim() % 2 == 1 && g0.dim() >= 3;
    if (!two_step || !odd) {
      out.error_kind = "UnrecognizedShape";
      out.message = "ker theta has a 1-dimensional center but is not a Heisenberg algebra";
      return out;
    }
    out.ok = true;
    out.verdict.type = ClassificationVerdict::Type::Heisenberg;
    out.verdict.k = (g0.dim() - 1) / 2;
    return out;
  }
  if (z0.dim() == 0) {
    Mat b = killing_form(g0);
    out.verdict.killing_sig = signature(b);
    if (det(b) == 0) {
      out.error_kind = "UnrecognizedShape";
      out.message = "ker theta is centerless but not semisimple";
      return out;
    }
    if (g0.dim() != 3) {
      out.error_kind = "UnrecognizedShape";
      out.message = "semisimple Sasaki factor of dimension != 3";
      return out;
    }
    out.ok = true;
    out.verdict.type = (out.verdict.killing_sig[1] == 3) ? ClassificationVerdict::Type::Su2
                                                         : ClassificationVerdict::Type::Sl2r;
    return out;
  }
  out.error_kind = "UnrecognizedShape";
  out.message = "center of ker theta has dimension " + std::to_string(z0.dim());
  return out;
}

}  // namespace lck
