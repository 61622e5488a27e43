#include "lck/lie.hpp"

#include <algorithm>
#include <set>

namespace lck {

Subspace Subspace::span(int ambient, const std::vector<Vec>& generators) {
  Subspace s(ambient);
  if (generators.empty()) return s;
  Mat m(static_cast<int>(generators.size()), ambient);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < ambient; ++j) m.at(i, j) = generators[i][j];
  s.basis_ = rref(m);
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s(ambient);
  s.basis_ = Mat::identity(ambient);
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  Vec r = v;
  for (int i = 0; i < basis_.rows(); ++i) {
    int piv = -1;
    for (int j = 0; j < ambient_; ++j)
      if (basis_.at(i, j) != 0) {
        piv = j;
        break;
      }
    if (piv < 0) continue;
    const Scalar f = r[piv] / basis_.at(i, piv);
    if (f == 0) continue;
    for (int j = 0; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (dim() == 0) return vec_is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  SolveResult r = solve(basis_.transposed(), v);
  if (r.status != SolveResult::Status::Unique) return std::nullopt;
  return r.x;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vec> gens;
  for (int i = 0; i < dim(); ++i) gens.push_back(basis_vector(i));
  for (int i = 0; i < other.dim(); ++i) gens.push_back(other.basis_vector(i));
  return span(ambient_, gens);
}

LieAlgebra LieAlgebra::build(std::vector<std::string> names, BracketTable table, bool validate) {
  LieAlgebra g;
  const int n = static_cast<int>(names.size());
  std::set<std::string> seen;
  for (const auto& nm : names)
    if (!seen.insert(nm).second) throw InputError("duplicate basis name \"" + nm + "\"");
  for (auto& [key, coeffs] : table) {
    auto [i, j] = key;
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw InputError("bracket index out of range (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (i >= j)
      throw InputError("bracket table requires i < j, got (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (static_cast<int>(coeffs.size()) != n) throw InputError("bracket coefficient vector has wrong length");
  }
  g.names_ = std::move(names);
  for (auto& [key, coeffs] : table)
    if (!vec_is_zero(coeffs)) g.table_.emplace(key, std::move(coeffs));
  if (validate) {
    auto defects = jacobi_defect(g);
    if (!defects.empty()) {
      const auto& d = defects.front();
      throw ValidationError("Jacobi identity fails on basis triple (" + g.names_[d.i] + "," + g.names_[d.j] +
                            "," + g.names_[d.k] + "), defect " + vec_str(d.defect));
    }
  }
  return g;
}

LieAlgebra LieAlgebra::abelian(int n, const std::string& stem) {
  if (n < 0) throw InputError("abelian: dimension must be >= 0");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return build(std::move(names), {}, false);
}

int LieAlgebra::index_of(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (names_[i] == name) return i;
  throw InputError("no basis vector named \"" + name + "\"");
}

Scalar LieAlgebra::c(int i, int j, int k) const {
  if (i == j) return 0;
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = table_.find({i, j});
  if (it == table_.end()) return 0;
  return flip ? -it->second[k] : it->second[k];
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
  Vec r(dim());
  if (i == j) return r;
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = table_.find({i, j});
  if (it == table_.end()) return r;
  return flip ? vec_scale(-1, it->second) : it->second;
}

Vec LieAlgebra::bracket(const Vec& v, const Vec& w) const {
  if (static_cast<int>(v.size()) != dim() || static_cast<int>(w.size()) != dim())
    throw ValidationError("bracket: vector length does not match algebra dimension");
  Vec r(dim());
  for (const auto& [key, coeffs] : table_) {
    auto [i, j] = key;
    const Scalar f = v[i] * w[j] - v[j] * w[i];
    if (f == 0) continue;
    for (int k = 0; k < dim(); ++k) r[k] += f * coeffs[k];
  }
  return r;
}

Mat LieAlgebra::ad(const Vec& v) const {
  Mat m(dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    Vec ej(dim());
    ej[j] = 1;
    Vec col = bracket(v, ej);
    for (int k = 0; k < dim(); ++k) m.at(k, j) = col[k];
  }
  return m;
}

Mat LieAlgebra::ad_basis(int i) const {
  Vec v(dim());
  v[i] = 1;
  return ad(v);
}

bool LieAlgebra::operator==(const LieAlgebra& o) const {
  return names_ == o.names_ && table_ == o.table_;
}

bool LieAlgebra::same_table(const LieAlgebra& o) const {
  return dim() == o.dim() && table_ == o.table_;
}

std::vector<JacobiDefect> jacobi_defect(const LieAlgebra& g) {
  std::vector<JacobiDefect> out;
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec ei(n), ej(n), ek(n);
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        Vec d = g.bracket(g.bracket_basis(i, j), ek);
        d = vec_add(d, g.bracket(g.bracket_basis(j, k), ei));
        d = vec_add(d, g.bracket(g.bracket_basis(k, i), ej));
        if (!vec_is_zero(d)) out.push_back({i, j, k, std::move(d)});
      }
  return out;
}

bool is_unimodular(const LieAlgebra& g) {
  for (int i = 0; i < g.dim(); ++i)
    if (g.ad_basis(i).trace() != 0) return false;
  return true;
}

Subspace center(const LieAlgebra& g) {
  const int n = g.dim();
  // v is central iff sum_i v_i c_ij^k = 0 for all j, k.
  Mat m(n * n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) m.at(j * n + k, i) = g.c(i, j, k);
  return Subspace::span(n, null_space(m));
}

namespace {

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vec> gens;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) gens.push_back(g.bracket(a.basis_vector(i), b.basis_vector(j)));
  return Subspace::span(g.dim(), gens);
}

}  // namespace

std::vector<Subspace> series(const LieAlgebra& g, SeriesKind kind) {
  std::vector<Subspace> out{Subspace::full(g.dim())};
  while (true) {
    const Subspace& cur = out.back();
    Subspace next = (kind == SeriesKind::Derived) ? bracket_span(g, cur, cur)
                                                  : bracket_span(g, Subspace::full(g.dim()), cur);
    if (next == cur) {
      if (cur.dim() != 0) out.push_back(next);  // mark stabilization above {0}
      break;
    }
    out.push_back(next);
    if (out.back().dim() == 0) break;
  }
  return out;
}

bool is_nilpotent(const LieAlgebra& g) { return series(g, SeriesKind::LowerCentral).back().dim() == 0; }

bool is_solvable(const LieAlgebra& g) { return series(g, SeriesKind::Derived).back().dim() == 0; }

Mat killing_form(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<Mat> ads;
  ads.reserve(n);
  for (int i = 0; i < n; ++i) ads.push_back(g.ad_basis(i));
  Mat b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) b.at(i, j) = b.at(j, i) = (ads[i] * ads[j]).trace();
  return b;
}

bool is_semisimple(const LieAlgebra& g) { return det(killing_form(g)) != 0; }

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const int na = a.dim(), nb = b.dim();
  std::vector<std::string> names = a.basis_names();
  std::set<std::string> seen(names.begin(), names.end());
  for (const auto& nm : b.basis_names()) {
    std::string candidate = nm;
    while (!seen.insert(candidate).second) candidate += "'";
    names.push_back(candidate);
  }
  BracketTable table;
  for (const auto& [key, coeffs] : a.table()) {
    Vec v(na + nb);
    std::copy(coeffs.begin(), coeffs.end(), v.begin());
    table.emplace(key, std::move(v));
  }
  for (const auto& [key, coeffs] : b.table()) {
    Vec v(na + nb);
    std::copy(coeffs.begin(), coeffs.end(), v.begin() + na);
    table.emplace(std::make_pair(key.first + na, key.second + na), std::move(v));
  }
  return LieAlgebra::build(std::move(names), std::move(table), false);
}

LieAlgebra change_basis(const LieAlgebra& g, const Mat& p, std::vector<std::string> new_names) {
  const int n = g.dim();
  if (p.rows() != n || p.cols() != n) throw ValidationError("change_basis: matrix size mismatch");
  Mat pm = p;
  // Columns of p are the new basis vectors in old coordinates.
  if (rank(pm) != n) throw ValidationError("change_basis: matrix is singular");
  BracketTable table;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec br = g.bracket(p.col(i), p.col(j));
      SolveResult r = solve(p, br);
      if (r.status != SolveResult::Status::Unique)
        throw ValidationError("change_basis: failed to express bracket in new basis");
      if (!vec_is_zero(r.x)) table.emplace(std::make_pair(i, j), r.x);
    }
  return LieAlgebra::build(std::move(new_names), std::move(table), false);
}

LieAlgebra permute_basis(const LieAlgebra& g, const std::vector<int>& perm) {
  const int n = g.dim();
  Mat p(n, n);
  std::vector<std::string> names(n);
  for (int j = 0; j < n; ++j) {
    p.at(perm[j], j) = 1;
    names[j] = g.basis_names()[perm[j]];
  }
  return change_basis(g, p, std::move(names));
}

LieAlgebra subalgebra_on(const LieAlgebra& g, const Subspace& s, const std::string& stem) {
  const int m = s.dim();
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back(stem + std::to_string(i));
  BracketTable table;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Vec br = g.bracket(s.basis_vector(i), s.basis_vector(j));
      auto coords = s.coordinates(br);
      if (!coords) throw ValidationError("subalgebra_on: subspace is not closed under the bracket");
      if (!vec_is_zero(*coords)) table.emplace(std::make_pair(i, j), *coords);
    }
  return LieAlgebra::build(std::move(names), std::move(table), false);
}

Vec CentralQuotient::project(const Vec& v) const {
  // Subtract the multiple of z that kills the removed coordinate, then keep
  // the surviving coordinates.
  Vec w = vec_sub(v, vec_scale(v[removed] / z[removed], z));
  Vec out(kept.size());
  for (size_t i = 0; i < kept.size(); ++i) out[i] = w[kept[i]];
  return out;
}

CentralQuotient quotient_by_central(const LieAlgebra& g, const Vec& z) {
  if (vec_is_zero(z)) throw ValidationError("quotient: vector is zero");
  if (!center(g).contains(z))
    throw ValidationError("quotient: vector is not central; only central quotients are defined at the algebra level");
  CentralQuotient q;
  q.z = z;
  const int n = g.dim();
  for (int i = n - 1; i >= 0; --i)
    if (z[i] != 0) {
      q.removed = i;
      break;
    }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    if (i != q.removed) {
      q.kept.push_back(i);
      names.push_back(g.basis_names()[i]);
    }
  BracketTable table;
  for (size_t a = 0; a < q.kept.size(); ++a)
    for (size_t b = a + 1; b < q.kept.size(); ++b) {
      Vec br = g.bracket_basis(q.kept[a], q.kept[b]);
      Vec coords = q.project(br);
      if (!vec_is_zero(coords)) table.emplace(std::make_pair(static_cast<int>(a), static_cast<int>(b)), coords);
    }
  q.algebra = LieAlgebra::build(std::move(names), std::move(table), false);
  return q;
}

Subspace largest_invariant_subspace(const LieAlgebra& g, const Subspace& s) {
  Subspace cur = s;
  while (true) {
    // Keep the vectors of cur whose brackets with every basis element stay in cur.
    // Solve for v in cur with [e_i, v] in cur for all i.
    const int n = g.dim();
    const int m = cur.dim();
    if (m == 0) return cur;
    // v = sum_a x_a b_a; condition: reduce([e_i, v]) = 0 for all i.
    std::vector<Vec> rows;
    Mat cond(n * n, m);
    for (int i = 0; i < n; ++i) {
      Vec ei(n);
      ei[i] = 1;
      for (int a = 0; a < m; ++a) {
        Vec red = cur.reduce(g.bracket(ei, cur.basis_vector(a)));
        for (int k = 0; k < n; ++k) cond.at(i * n + k, a) = red[k];
      }
    }
    std::vector<Vec> sols = null_space(cond);
    std::vector<Vec> gens;
    for (const Vec& x : sols) {
      Vec v(n);
      for (int a = 0; a < m; ++a) v = vec_add(v, vec_scale(x[a], cur.basis_vector(a)));
      gens.push_back(v);
    }
    Subspace next = Subspace::span(n, gens);
    if (next == cur) return cur;
    cur = next;
  }
}

}  // namespace lck
