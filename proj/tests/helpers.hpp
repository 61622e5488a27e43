#pragma once

#include <random>

#include "lck/catalog.hpp"

namespace lck::test {

inline Scalar q(const std::string& s) { return parse_scalar(s); }

inline Vec v(std::initializer_list<int> xs) {
  Vec out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

inline Mat mat(int n, std::initializer_list<int> xs) {
  Mat m(n, n);
  int i = 0;
  for (int x : xs) {
    m.at(i / n, i % n) = x;
    ++i;
  }
  return m;
}

// Small random rationals for property tests; denominators kept tiny so
// coefficient growth stays readable in failure output.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}
  Scalar rational(int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 2);
    return Scalar(num(gen), den(gen));
  }
  Scalar nonzero_rational(int lo = -3, int hi = 3) {
    while (true) {
      Scalar s = rational(lo, hi);
      if (s != 0) return s;
    }
  }
  int index(int n) { return std::uniform_int_distribution<int>(0, n - 1)(gen); }
  Vec vec(int n) {
    Vec out(n);
    for (auto& s : out) s = rational();
    return out;
  }
  Mat invertible(int n) {
    while (true) {
      Mat m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rational(-2, 2);
      if (det(m) != 0) return m;
    }
  }
  KForm form(int n, int degree) {
    KForm f(n, degree);
    std::vector<int> idx(degree);
    for (int t = 0; t < 4; ++t) {
      bool ok = true;
      std::set<int> used;
      for (int& i : idx) {
        i = index(n);
        ok = ok && used.insert(i).second;
      }
      if (ok) f.add_term(idx, rational());
    }
    return f;
  }
};

// Solution space of the linear conditions making sigma a skew, J-compatible
// derivation of (g, metric, J); each returned matrix is one basis element.
inline std::vector<Mat> compatible_derivation_space(const HermitianData& h) {
  const LieAlgebra& g = h.algebra;
  const int n = g.dim();
  auto unknown = [n](int r, int c) { return r * n + c; };
  std::vector<Vec> rows;
  // Derivation: sigma([ei,ej]) - [sigma ei, ej] - [ei, sigma ej] = 0.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec br = g.bracket_basis(i, j);
      for (int k = 0; k < n; ++k) {
        Vec row(n * n);
        for (int m = 0; m < n; ++m) row[unknown(k, m)] += br[m];
        for (int r = 0; r < n; ++r) {
          row[unknown(r, i)] -= g.c(r, j, k);
          row[unknown(r, j)] -= g.c(i, r, k);
        }
        rows.push_back(std::move(row));
      }
    }
  // Skew: sum_r sigma(r,i) G(r,j) + G(i,r) sigma(r,j) = 0.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Vec row(n * n);
      for (int r = 0; r < n; ++r) {
        row[unknown(r, i)] += h.metric.at(r, j);
        row[unknown(r, j)] += h.metric.at(i, r);
      }
      rows.push_back(std::move(row));
    }
  // J-compatibility: (J sigma - sigma J)(i,j) = 0.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec row(n * n);
      for (int r = 0; r < n; ++r) {
        row[unknown(r, j)] += h.J.at(i, r);
        row[unknown(i, r)] -= h.J.at(r, j);
      }
      rows.push_back(std::move(row));
    }
  Mat cond(static_cast<int>(rows.size()), n * n);
  for (int r = 0; r < cond.rows(); ++r)
    for (int c = 0; c < n * n; ++c) cond.at(r, c) = rows[r][c];
  std::vector<Mat> basis;
  for (const Vec& x : null_space(cond)) {
    Mat s(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) s.at(r, c) = x[unknown(r, c)];
    basis.push_back(std::move(s));
  }
  return basis;
}

// Random valid modification map over the Hermitian algebra, or nullopt when
// only the zero map exists.
inline std::optional<ModificationMap> random_modification_map(const HermitianData& h, Rng& rng) {
  std::vector<Mat> space = compatible_derivation_space(h);
  if (space.empty()) return std::nullopt;
  const int n = h.algebra.dim();
  Mat sigma(n, n);
  for (const Mat& b : space) sigma = sigma + b * rng.rational(-2, 2);
  if (sigma.is_zero()) return std::nullopt;
  // phi must vanish on [g,g] + sigma(g).
  std::vector<Vec> wgens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) wgens.push_back(h.algebra.bracket_basis(i, j));
  for (int i = 0; i < n; ++i) wgens.push_back(sigma.col(i));
  Subspace w = Subspace::span(n, wgens);
  if (w.dim() == n) return std::nullopt;
  Mat wb = w.basis();
  Mat rowmat(w.dim(), n);
  for (int i = 0; i < w.dim(); ++i)
    for (int j = 0; j < n; ++j) rowmat.at(i, j) = wb.at(i, j);
  std::vector<Vec> annihilator = null_space(rowmat);
  Vec f(n);
  for (const Vec& a : annihilator) f = vec_add(f, vec_scale(rng.rational(-2, 2), a));
  if (vec_is_zero(f)) f = annihilator.front();
  Mat coeffs(n, 1);
  for (int i = 0; i < n; ++i) coeffs.at(i, 0) = f[i];
  return ModificationMap{{sigma}, coeffs};
}

}  // namespace lck::test
