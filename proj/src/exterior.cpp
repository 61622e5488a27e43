#include "lck/exterior.hpp"

#include <algorithm>

namespace lck {

KForm KForm::basis_dual(int ambient, int index) {
  KForm f(ambient, 1);
  f.add_term({index}, 1);
  return f;
}

KForm KForm::monomial(int ambient, std::vector<int> indices, Scalar coeff) {
  KForm f(ambient, static_cast<int>(indices.size()));
  f.add_term(std::move(indices), std::move(coeff));
  return f;
}

KForm KForm::constant(int ambient, Scalar value) {
  KForm f(ambient, 0);
  f.add_term({}, std::move(value));
  return f;
}

Scalar KForm::coeff(const std::vector<int>& indices) const {
  auto it = coeffs_.find(indices);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

void KForm::add_term(std::vector<int> indices, Scalar c) {
  if (static_cast<int>(indices.size()) != deg_)
    throw ValidationError("KForm: term arity does not match form degree");
  if (c == 0) return;
  // Sort by adjacent transpositions, tracking the sign.
  int sign = 1;
  for (size_t i = 1; i < indices.size(); ++i)
    for (size_t j = i; j > 0 && indices[j - 1] > indices[j]; --j) {
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  for (size_t i = 0; i + 1 < indices.size(); ++i)
    if (indices[i] == indices[i + 1]) return;
  for (int i : indices)
    if (i < 0 || i >= n_) throw ValidationError("KForm: index out of range");
  auto [it, inserted] = coeffs_.try_emplace(std::move(indices), sign > 0 ? c : -c);
  if (!inserted) {
    it->second += sign > 0 ? c : -c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

KForm KForm::operator+(const KForm& o) const {
  KForm r = *this;
  for (const auto& [idx, c] : o.coeffs_) r.add_term(idx, c);
  return r;
}

KForm KForm::operator-(const KForm& o) const { return *this + (-o); }

KForm KForm::operator*(const Scalar& s) const {
  KForm r(n_, deg_);
  if (s == 0) return r;
  for (const auto& [idx, c] : coeffs_) r.coeffs_.emplace(idx, c * s);
  return r;
}

KForm KForm::operator-() const { return *this * Scalar(-1); }

Scalar KForm::eval(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != deg_)
    throw ValidationError("KForm::eval: expected " + std::to_string(deg_) + " arguments");
  if (deg_ == 0) return coeff({});
  KForm cur = *this;
  for (const Vec& v : args) cur = interior(v, cur);
  return cur.coeff({});
}

std::string KForm::str(const std::vector<std::string>& names) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : coeffs_) {
    std::string term;
    for (size_t i = 0; i < idx.size(); ++i) {
      if (i) term += "^";
      term += names.empty() ? "e" + std::to_string(idx[i] + 1) : names[idx[i]];
    }
    if (term.empty()) term = "1";
    std::string cs = scalar_str(c);
    if (!out.empty()) out += c >= 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    std::string mag = scalar_str(abs(c));
    out += (mag == "1" && !idx.empty()) ? term : mag + (idx.empty() ? "" : "*" + term);
  }
  return out;
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.ambient() != b.ambient()) throw ValidationError("wedge: ambient dimensions differ");
  KForm r(a.ambient(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.coeffs())
    for (const auto& [ib, cb] : b.coeffs()) {
      std::vector<int> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add_term(std::move(idx), ca * cb);
    }
  return r;
}

KForm wedge_power(const KForm& a, int k) {
  KForm r = KForm::constant(a.ambient(), 1);
  for (int i = 0; i < k; ++i) r = wedge(r, a);
  return r;
}

KForm ce_d(const LieAlgebra& g, const KForm& a) {
  const int n = g.dim();
  if (a.ambient() != n) throw ValidationError("ce_d: form is not defined on this algebra");
  KForm r(n, a.degree() + 1);
  if (a.degree() >= n) return r;  // zero beyond top degree
  // d(e_k^*) = -sum_{i<j} c_ij^k e_i^* ^ e_j^*, extended as an antiderivation.
  std::vector<KForm> d1(n, KForm(n, 2));
  for (const auto& [key, coeffs] : g.table()) {
    auto [i, j] = key;
    for (int k = 0; k < n; ++k)
      if (coeffs[k] != 0) d1[k].add_term({i, j}, -coeffs[k]);
  }
  for (const auto& [idx, c] : a.coeffs()) {
    for (size_t l = 0; l < idx.size(); ++l) {
      const KForm& dl = d1[idx[l]];
      if (dl.is_zero()) continue;
      int sign = (l % 2 == 0) ? 1 : -1;
      std::vector<int> rest;
      for (size_t m = 0; m < idx.size(); ++m)
        if (m != l) rest.push_back(idx[m]);
      for (const auto& [pair_idx, pc] : dl.coeffs()) {
        std::vector<int> full = pair_idx;
        full.insert(full.end(), rest.begin(), rest.end());
        r.add_term(std::move(full), Scalar(sign) * c * pc);
      }
    }
  }
  return r;
}

KForm interior(const Vec& v, const KForm& a) {
  if (static_cast<int>(v.size()) != a.ambient()) throw ValidationError("interior: vector length mismatch");
  if (a.degree() == 0) throw ValidationError("interior: cannot contract a scalar");
  KForm r(a.ambient(), a.degree() - 1);
  for (const auto& [idx, c] : a.coeffs())
    for (size_t l = 0; l < idx.size(); ++l) {
      if (v[idx[l]] == 0) continue;
      std::vector<int> rest;
      for (size_t m = 0; m < idx.size(); ++m)
        if (m != l) rest.push_back(idx[m]);
      r.add_term(std::move(rest), Scalar(l % 2 == 0 ? 1 : -1) * v[idx[l]] * c);
    }
  return r;
}

KForm one_form(const Vec& coeffs) {
  KForm f(static_cast<int>(coeffs.size()), 1);
  for (size_t i = 0; i < coeffs.size(); ++i) f.add_term({static_cast<int>(i)}, coeffs[i]);
  return f;
}

KForm two_form_from_matrix(const Mat& b) {
  KForm f(b.rows(), 2);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = i + 1; j < b.cols(); ++j) f.add_term({i, j}, b.at(i, j));
  return f;
}

Mat matrix_of_two_form(const KForm& f) {
  if (f.degree() != 2) throw ValidationError("matrix_of_two_form: degree is not 2");
  Mat b(f.ambient(), f.ambient());
  for (const auto& [idx, c] : f.coeffs()) {
    b.at(idx[0], idx[1]) = c;
    b.at(idx[1], idx[0]) = -c;
  }
  return b;
}

LeeSolve solve_lee_form(const LieAlgebra& g, const KForm& omega) {
  LeeSolve out;
  const int n = g.dim();
  if (omega.degree() != 2 || omega.ambient() != n) {
    out.status = LeeSolve::Status::BadDimension;
    out.message = "expected a 2-form on the algebra";
    return out;
  }
  if (n < 4 || n % 2 != 0) {
    out.status = LeeSolve::Status::BadDimension;
    out.message = "Lee form solving requires even dimension >= 4";
    return out;
  }
  if (wedge_power(omega, n / 2).is_zero()) {
    out.status = LeeSolve::Status::Degenerate;
    out.message = "the 2-form is degenerate (top wedge power vanishes)";
    return out;
  }
  KForm domega = ce_d(g, omega);
  // Coefficients of Omega ^ theta are linear in theta's n coefficients; match
  // them against d(Omega) over all increasing triples.
  std::vector<KForm> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) images.push_back(wedge(omega, KForm::basis_dual(n, i)));
  std::map<std::vector<int>, int> row_of;
  auto row_index = [&](const std::vector<int>& idx) {
    auto [it, inserted] = row_of.try_emplace(idx, static_cast<int>(row_of.size()));
    return it->second;
  };
  for (int i = 0; i < n; ++i)
    for (const auto& [idx, c] : images[i].coeffs()) row_index(idx);
  for (const auto& [idx, c] : domega.coeffs()) row_index(idx);
  Mat a(static_cast<int>(row_of.size()), n);
  Vec b(row_of.size());
  for (int i = 0; i < n; ++i)
    for (const auto& [idx, c] : images[i].coeffs()) a.at(row_of[idx], i) = c;
  for (const auto& [idx, c] : domega.coeffs()) b[row_of[idx]] = c;
  SolveResult sol = solve(a, b);
  if (sol.status == SolveResult::Status::Inconsistent) {
    out.status = LeeSolve::Status::NoSolution;
    out.message = "d(Omega) is not of the form Omega ^ theta";
    return out;
  }
  if (sol.status == SolveResult::Status::Underdetermined) {
    out.status = LeeSolve::Status::NoSolution;
    out.message = "Lee form is not unique (wedge map unexpectedly singular)";
    return out;
  }
  out.theta = one_form(sol.x);
  if (!ce_d(g, out.theta).is_zero()) {
    out.status = LeeSolve::Status::NotClosed;
    out.message = "theta exists but d(theta) != 0";
    return out;
  }
  out.status = LeeSolve::Status::Ok;
  return out;
}

}  // namespace lck
