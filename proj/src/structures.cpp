#include "lck/structures.hpp"

#include <algorithm>

namespace lck {

namespace {

std::string pair_name(const LieAlgebra& g, int i, int j) {
  return "(" + g.basis_names()[i] + "," + g.basis_names()[j] + ")";
}

Vec basis_vec(int n, int i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

}  // namespace

StructureReport check_hermitian(const HermitianData& h) {
  StructureReport rep;
  const int n = h.algebra.dim();
  bool shape_ok = h.metric.rows() == n && h.metric.cols() == n && h.J.rows() == n && h.J.cols() == n;
  rep.add("shape", "metric and J are n x n", shape_ok,
          shape_ok ? "" : "matrix dimensions do not match the algebra");
  if (!shape_ok) return rep;
  rep.add("symmetric", "metric is symmetric", h.metric.is_symmetric());
  Mat j2 = h.J * h.J + Mat::identity(n);
  std::string w;
  if (!j2.is_zero())
    for (int i = 0; i < n && w.empty(); ++i)
      if (!vec_is_zero(j2.col(i))) w = "J^2 + I nonzero on " + h.algebra.basis_names()[i];
  rep.add("complex_structure", "J^2 = -I", j2.is_zero(), w);
  Mat diff = h.J.transposed() * h.metric * h.J - h.metric;
  std::string wc;
  if (!diff.is_zero())
    for (int i = 0; i < n && wc.empty(); ++i)
      for (int j = 0; j < n && wc.empty(); ++j)
        if (diff.at(i, j) != 0)
          wc = pair_name(h.algebra, i, j) + ": g(Ju,Jv) - g(u,v) = " + scalar_str(diff.at(i, j));
  rep.add("compatible", "g(Ju, Jv) = g(u, v)", diff.is_zero(), wc);
  return rep;
}

KForm fundamental_form(const HermitianData& h) {
  // Omega(u, v) = g(u, Jv); as a matrix G J, which must be antisymmetric.
  Mat omega = h.metric * h.J;
  if (!(omega + omega.transposed()).is_zero())
    throw ValidationError(
        "fundamental_form: g(u, Jv) is not antisymmetric (J is not compatible with the metric)");
  return two_form_from_matrix(omega);
}

LcKReport check_lck(const HermitianData& h) {
  LcKReport rep;
  const int n = h.algebra.dim();
  rep.positive_definite = h.metric.is_symmetric() && is_positive_definite(h.metric);
  StructureReport herm = check_hermitian(h);
  if (herm.passed("shape") && herm.passed("complex_structure")) {
    rep.J_integrable = nijenhuis_defect(h.algebra, h.J, Subspace(n)).empty();
  }
  if (!herm.all_pass()) {
    for (const auto& item : herm.items)
      if (!item.pass) {
        rep.lee_error = "Hermitian data invalid: " + item.description +
                        (item.witness.empty() ? "" : " [" + item.witness + "]");
        break;
      }
    return rep;
  }
  KForm omega = fundamental_form(h);
  LeeSolve lee = solve_lee_form(h.algebra, omega);
  if (lee.status == LeeSolve::Status::NotClosed) {
    rep.lck_identity = true;
    rep.theta = lee.theta;
    rep.theta_closed = false;
    rep.lee_error = lee.message;
    return rep;
  }
  if (!lee.ok()) {
    rep.lee_error = lee.message;
    return rep;
  }
  rep.lck_identity = true;
  rep.theta_closed = true;
  rep.theta = lee.theta;
  if (det(h.metric) == 0) {
    rep.lee_error = "metric is degenerate; Lee field undefined";
    return rep;
  }
  auto [xi, norm] = lee_field(h, rep.theta);
  rep.xi = xi;
  rep.xi_norm = norm;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Scalar defect = dot(mat_vec(h.metric, h.algebra.bracket(xi, basis_vec(n, i))), basis_vec(n, j)) +
                      dot(mat_vec(h.metric, basis_vec(n, i)), h.algebra.bracket(xi, basis_vec(n, j)));
      if (defect != 0) rep.killing_defects.emplace_back(i, j, defect);
    }
  rep.vaisman = rep.lck() && rep.killing_defects.empty();
  return rep;
}

StructureReport LcKReport::to_report(const LieAlgebra& g, bool vaisman_gating) const {
  StructureReport out;
  out.add("positive_definite", "metric is positive definite", positive_definite);
  out.add("integrable", "complex structure is integrable (Nijenhuis tensor vanishes)", J_integrable);
  out.add("lck", "d(Omega) = Omega ^ theta for a 1-form theta", lck_identity,
          lck_identity ? "" : lee_error);
  out.add("theta_closed", "the Lee form is closed", theta_closed,
          theta_closed ? "" : (lck_identity ? lee_error : ""));
  std::string w;
  if (!killing_defects.empty()) {
    auto [i, j, v] = killing_defects.front();
    w = "(" + g.basis_names()[i] + "," + g.basis_names()[j] +
        "): g([xi,U],V) + g(U,[xi,V]) = " + scalar_str(v);
  } else if (!vaisman && !lck()) {
    w = "l.c.K. axioms fail, Vaisman condition not evaluated";
  }
  if (vaisman_gating)
    out.add("vaisman", "Lee field is Killing", vaisman, w);
  else
    out.add_info("vaisman", "Lee field is Killing", vaisman, w);
  return out;
}

std::pair<Vec, Scalar> lee_field(const HermitianData& h, const KForm& theta) {
  const int n = h.algebra.dim();
  Vec rhs(n);
  for (int i = 0; i < n; ++i) rhs[i] = theta.coeff({i});
  SolveResult r = solve(h.metric, rhs);
  if (r.status != SolveResult::Status::Unique)
    throw ValidationError("lee_field: metric is degenerate");
  Scalar norm = dot(mat_vec(h.metric, r.x), r.x);
  return {r.x, norm};
}

std::vector<NijenhuisDefect> nijenhuis_defect(const LieAlgebra& g, const Mat& J, const Subspace& h) {
  const int n = g.dim();
  for (int i = 0; i < h.dim(); ++i)
    if (!h.contains(mat_vec(J, h.basis_vector(i))))
      throw ValidationError("nijenhuis_defect: J does not preserve the subalgebra");
  std::vector<NijenhuisDefect> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec x = basis_vec(n, i), y = basis_vec(n, j);
      Vec jx = mat_vec(J, x), jy = mat_vec(J, y);
      Vec nij = g.bracket(jx, jy);
      nij = vec_sub(nij, g.bracket(x, y));
      nij = vec_sub(nij, mat_vec(J, g.bracket(jx, y)));
      nij = vec_sub(nij, mat_vec(J, g.bracket(x, jy)));
      Vec red = h.reduce(nij);
      if (!vec_is_zero(red)) out.push_back({i, j, red});
    }
  return out;
}

StructureReport check_sasaki(const SasakiData& s) {
  const int dim = s.algebra.dim();
  if (dim % 2 == 0) throw ValidationError("check_sasaki: dimension must be odd (2n+1)");
  const int n = (dim - 1) / 2;
  StructureReport rep;
  KForm dphi = ce_d(s.algebra, s.phi);

  KForm top = wedge(s.phi, wedge_power(dphi, n));
  rep.add("contact", "phi ^ (d phi)^n is a nonzero top form", !top.is_zero(),
          top.is_zero() ? "top form vanishes" : "");

  Scalar phi_eta = s.phi.eval({s.eta});
  KForm ieta_dphi = interior(s.eta, dphi);
  bool reeb = (phi_eta == 1) && ieta_dphi.is_zero();
  std::string rw;
  if (phi_eta != 1) rw = "i(eta) phi = " + scalar_str(phi_eta);
  else if (!ieta_dphi.is_zero()) rw = "i(eta) d(phi) = " + ieta_dphi.str(s.algebra.basis_names());
  rep.add("reeb", "i(eta) phi = 1 and i(eta) d(phi) = 0", reeb, rw);

  Mat phi_tensor_eta(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) phi_tensor_eta.at(i, j) = s.eta[i] * s.phi.coeff({j});
  Mat tensor_defect = s.Jtilde * s.Jtilde + Mat::identity(dim) - phi_tensor_eta;
  std::string tw;
  for (int j = 0; j < dim && tw.empty(); ++j)
    if (!vec_is_zero(tensor_defect.col(j)))
      tw = "on " + s.algebra.basis_names()[j] + ": defect " + vec_str(tensor_defect.col(j));
  rep.add("tensor", "Jtilde^2 = -I + phi (x) eta", tensor_defect.is_zero(), tw);

  bool metric_ok = s.metric.is_symmetric();
  std::string mw = metric_ok ? "" : "metric not symmetric";
  for (int i = 0; i < dim && metric_ok; ++i)
    for (int j = 0; j < dim && metric_ok; ++j) {
      Vec ei = basis_vec(dim, i), ej = basis_vec(dim, j);
      Scalar expected = s.phi.eval({ei}) * s.phi.eval({ej}) + dphi.eval({mat_vec(s.Jtilde, ei), ej});
      if (s.metric.at(i, j) != expected) {
        metric_ok = false;
        mw = pair_name(s.algebra, i, j) + ": g = " + scalar_str(s.metric.at(i, j)) +
             " but phi(U)phi(V) + d(phi)(Jtilde U, V) = " + scalar_str(expected);
      }
    }
  rep.add("metric", "g(U,V) = phi(U) phi(V) + d(phi)(Jtilde U, V)", metric_ok, mw);

  bool killing = true;
  std::string kw;
  for (int i = 0; i < dim && killing; ++i)
    for (int j = i; j < dim && killing; ++j) {
      Vec ei = basis_vec(dim, i), ej = basis_vec(dim, j);
      Scalar defect = dot(mat_vec(s.metric, s.algebra.bracket(s.eta, ei)), ej) +
                      dot(mat_vec(s.metric, ei), s.algebra.bracket(s.eta, ej));
      if (defect != 0) {
        killing = false;
        kw = pair_name(s.algebra, i, j) + ": Killing defect " + scalar_str(defect);
      }
    }
  // CR integrability of Jtilde on ker phi, brackets projected along eta.
  Vec phi_row(dim);
  for (int i = 0; i < dim; ++i) phi_row[i] = s.phi.coeff({i});
  Mat phi_mat(1, dim);
  for (int i = 0; i < dim; ++i) phi_mat.at(0, i) = phi_row[i];
  std::vector<Vec> d_basis = null_space(phi_mat);
  auto project = [&](const Vec& v) {
    return vec_sub(v, vec_scale(dot(phi_row, v), s.eta));
  };
  bool cr = true;
  std::string cw;
  for (const Vec& x : d_basis) {
    Vec jx = mat_vec(s.Jtilde, x);
    if (dot(phi_row, jx) != 0) {
      cr = false;
      cw = "Jtilde does not preserve ker phi";
      break;
    }
  }
  for (size_t a = 0; a < d_basis.size() && cr; ++a)
    for (size_t b = a + 1; b < d_basis.size() && cr; ++b) {
      const Vec& x = d_basis[a];
      const Vec& y = d_basis[b];
      Vec jx = mat_vec(s.Jtilde, x), jy = mat_vec(s.Jtilde, y);
      Vec nij = project(s.algebra.bracket(jx, jy));
      nij = vec_sub(nij, project(s.algebra.bracket(x, y)));
      nij = vec_sub(nij, mat_vec(s.Jtilde, project(s.algebra.bracket(jx, y))));
      nij = vec_sub(nij, mat_vec(s.Jtilde, project(s.algebra.bracket(x, jy))));
      if (!vec_is_zero(nij)) {
        cr = false;
        cw = "CR Nijenhuis defect " + vec_str(nij);
      }
    }
  rep.add("killing_cr", "eta is Killing and Jtilde|ker(phi) is CR integrable", killing && cr,
          killing ? cw : kw);
  return rep;
}

namespace {

// Indices of the coordinate complement of h (non-pivot columns of its RREF
// basis); representatives of a basis of g/h.
std::vector<int> complement_of(const Subspace& h) {
  std::vector<bool> pivot(h.ambient(), false);
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < h.ambient(); ++j)
      if (h.basis().at(i, j) != 0) {
        pivot[j] = true;
        break;
      }
  std::vector<int> out;
  for (int j = 0; j < h.ambient(); ++j)
    if (!pivot[j]) out.push_back(j);
  return out;
}

}  // namespace

KForm koszul_form(const KahlerAlgebraData& k) {
  const int n = k.algebra.dim();
  for (int i = 0; i < k.h.dim(); ++i)
    if (!k.h.contains(mat_vec(k.J, k.h.basis_vector(i))))
      throw ValidationError("koszul_form: J does not preserve h");
  std::vector<int> comp = complement_of(k.h);
  Vec kappa(n);
  for (int i = 0; i < n; ++i) {
    Vec x = basis_vec(n, i);
    Vec jx = mat_vec(k.J, x);
    // Trace over g/h of u -> [Jx, u] - J [x, u].
    Scalar tr = 0;
    for (int c : comp) {
      Vec u = basis_vec(n, c);
      Vec img = vec_sub(k.algebra.bracket(jx, u), mat_vec(k.J, k.algebra.bracket(x, u)));
      tr += k.h.reduce(img)[c];
    }
    kappa[i] = tr;
  }
  return one_form(kappa);
}

KForm ricci_form(const KahlerAlgebraData& k) {
  KForm kappa = koszul_form(k);
  const int n = k.algebra.dim();
  KForm r(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec br = k.algebra.bracket_basis(i, j);
      Scalar value = 0;
      for (int m = 0; m < n; ++m) value += kappa.coeff({m}) * br[m];
      r.add_term({i, j}, -value);
    }
  return r;
}

Mat kahler_metric_on_complement(const KahlerAlgebraData& k, std::vector<int>& complement_indices) {
  complement_indices = complement_of(k.h);
  const int m = static_cast<int>(complement_indices.size());
  const int n = k.algebra.dim();
  Mat s(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Vec u = basis_vec(n, complement_indices[a]);
      Vec v = basis_vec(n, complement_indices[b]);
      s.at(a, b) = k.omega.eval({mat_vec(k.J, u), v});
    }
  return s;
}

StructureReport check_kahler_algebra(const KahlerAlgebraData& k) {
  StructureReport rep;
  const int n = k.algebra.dim();

  bool closed = true;
  std::string cw;
  for (int i = 0; i < k.h.dim() && closed; ++i)
    for (int j = i + 1; j < k.h.dim() && closed; ++j)
      if (!k.h.contains(k.algebra.bracket(k.h.basis_vector(i), k.h.basis_vector(j)))) {
        closed = false;
        cw = "bracket of h-basis vectors leaves h";
      }
  rep.add("subalgebra", "h is a subalgebra", closed, cw);

  bool jh = true;
  for (int i = 0; i < k.h.dim(); ++i)
    if (!k.h.contains(mat_vec(k.J, k.h.basis_vector(i)))) jh = false;
  bool j2 = true;
  std::string j2w;
  for (int i = 0; i < n && j2; ++i) {
    Vec v = basis_vec(n, i);
    Vec defect = vec_add(mat_vec(k.J, mat_vec(k.J, v)), v);
    if (!vec_is_zero(k.h.reduce(defect))) {
      j2 = false;
      j2w = "J^2 + I nonzero mod h on " + k.algebra.basis_names()[i];
    }
  }
  rep.add("i", "J h in h and J^2 = -I (mod h)", jh && j2, jh ? j2w : "J does not preserve h");

  bool ii = true;
  std::string iiw;
  for (int a = 0; a < k.h.dim() && ii; ++a) {
    Vec x = k.h.basis_vector(a);
    Mat adx = k.algebra.ad(x);
    Mat defect = adx * k.J - k.J * adx;
    for (int j = 0; j < n && ii; ++j)
      if (!vec_is_zero(k.h.reduce(defect.col(j)))) {
        ii = false;
        iiw = "ad_X J != J ad_X mod h for X in h, on " + k.algebra.basis_names()[j];
      }
  }
  rep.add("ii", "ad_X J = J ad_X (mod h) for X in h", ii, iiw);

  bool iii = true;
  std::string iiiw;
  if (jh) {
    auto defects = nijenhuis_defect(k.algebra, k.J, k.h);
    if (!defects.empty()) {
      iii = false;
      iiiw = pair_name(k.algebra, defects[0].i, defects[0].j) + ": Nijenhuis defect " +
             vec_str(defects[0].defect);
    }
  } else {
    iii = false;
    iiiw = "not evaluated: J does not preserve h";
  }
  rep.add("iii", "[JX,JY] = [X,Y] + J[JX,Y] + J[X,JY] (mod h)", iii, iiiw);

  bool iv = true;
  std::string ivw;
  for (int a = 0; a < k.h.dim() && iv; ++a)
    if (!interior(k.h.basis_vector(a), k.omega).is_zero()) {
      iv = false;
      ivw = "omega(h, .) != 0";
    }
  for (int i = 0; i < n && iv; ++i)
    for (int j = i + 1; j < n && iv; ++j) {
      Vec u = basis_vec(n, i), v = basis_vec(n, j);
      Scalar lhs = k.omega.eval({mat_vec(k.J, u), mat_vec(k.J, v)});
      Scalar rhs = k.omega.eval({u, v});
      if (lhs != rhs) {
        iv = false;
        ivw = pair_name(k.algebra, i, j) + ": omega(JX,JY) = " + scalar_str(lhs) +
              " != omega(X,Y) = " + scalar_str(rhs);
      }
    }
  rep.add("iv", "omega(h, g) = 0 and omega(JX, JY) = omega(X, Y)", iv, ivw);

  KForm domega = ce_d(k.algebra, k.omega);
  rep.add("v", "omega([X,Y],Z) + omega([Y,Z],X) + omega([Z,X],Y) = 0", domega.is_zero(),
          domega.is_zero() ? "" : "d(omega) = " + domega.str(k.algebra.basis_names()));

  std::vector<int> comp;
  Mat s = kahler_metric_on_complement(k, comp);
  bool vi = s.is_symmetric();
  std::string viw = vi ? "" : "omega(J., .) is not symmetric mod h (axioms i/iv broken)";
  if (vi) {
    auto sig = signature(s);
    vi = (sig[2] == 0) && (sig[0] == 0 || sig[1] == 0);
    if (!vi)
      viw = "omega(JX, X) vanishes for some X outside h (inertia " + std::to_string(sig[0]) + "," +
            std::to_string(sig[1]) + "," + std::to_string(sig[2]) + ")";
  }
  rep.add("vi", "omega(JX, X) != 0 for X outside h", vi, viw);

  Subspace ideal = largest_invariant_subspace(k.algebra, k.h);
  rep.add_info("effective", "h contains no nonzero ideal of g", ideal.dim() == 0,
               ideal.dim() == 0 ? "" : "invariant subspace of dimension " + std::to_string(ideal.dim()));

  // J-algebra: exact solve for rho with d(rho) = omega.
  std::map<std::vector<int>, int> row_of;
  std::vector<KForm> d1;
  for (int i = 0; i < n; ++i) d1.push_back(ce_d(k.algebra, KForm::basis_dual(n, i)));
  for (const auto& f : d1)
    for (const auto& [idx, c] : f.coeffs()) row_of.try_emplace(idx, static_cast<int>(row_of.size()));
  for (const auto& [idx, c] : k.omega.coeffs()) row_of.try_emplace(idx, static_cast<int>(row_of.size()));
  Mat a(static_cast<int>(row_of.size()), n);
  Vec b(row_of.size());
  for (int i = 0; i < n; ++i)
    for (const auto& [idx, c] : d1[i].coeffs()) a.at(row_of[idx], i) = c;
  for (const auto& [idx, c] : k.omega.coeffs()) b[row_of[idx]] = c;
  auto rho = solve_any(a, b);
  rep.add_info("j_algebra", "a linear form rho with d(rho) = omega exists", rho.has_value(),
               rho ? "rho = " + one_form(*rho).str(k.algebra.basis_names())
                   : "d(rho) = omega has no solution");
  return rep;
}

}  // namespace lck
