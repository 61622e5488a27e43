#include "lck/linalg.hpp"

#include <algorithm>

namespace lck {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::operator*(const Scalar& s) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

Mat Mat::operator-() const { return *this * Scalar(-1); }

Mat Mat::transposed() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Scalar Mat::trace() const {
  Scalar t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s == 0; });
}

bool Mat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Vec Mat::row(int i) const {
  Vec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec Mat::col(int j) const {
  Vec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Vec mat_vec(const Mat& m, const Vec& v) {
  Vec r(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) r[i] += m.at(i, j) * v[j];
  return r;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Scalar& s, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

Scalar dot(const Vec& a, const Vec& b) {
  Scalar r = 0;
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += scalar_str(v[i]);
  }
  return s + ")";
}

namespace {

// Multiplies each row by the lcm of its denominators so all entries are
// integral; preserves the row space.
void clear_denominators(Mat& m) {
  for (int i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (int j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m.at(i, j)));
    if (l != 1)
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) *= Scalar(l);
  }
}

}  // namespace

Echelon fraction_free_echelon(Mat m) {
  clear_denominators(m);
  Echelon e;
  Scalar prev = 1;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    const Scalar p = m.at(r, c);
    for (int i = r + 1; i < m.rows(); ++i) {
      const Scalar f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) = (p * m.at(i, j) - f * m.at(r, j)) / prev;
    }
    prev = p;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  e.rank = r;
  return e;
}

int rank(const Mat& m) { return fraction_free_echelon(m).rank; }

std::vector<Vec> null_space(const Mat& m) {
  Echelon e = fraction_free_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec x(m.cols());
    x[f] = 1;
    for (int r = e.rank - 1; r >= 0; --r) {
      int c = e.pivot_cols[r];
      Scalar s = 0;
      for (int j = c + 1; j < m.cols(); ++j) s += e.m.at(r, j) * x[j];
      x[c] = -s / e.m.at(r, c);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Mat rref(const Mat& m) {
  Echelon e = fraction_free_echelon(m);
  Mat r = e.m;
  for (int i = e.rank - 1; i >= 0; --i) {
    int c = e.pivot_cols[i];
    const Scalar p = r.at(i, c);
    for (int j = c; j < r.cols(); ++j) r.at(i, j) /= p;
    for (int k = 0; k < i; ++k) {
      const Scalar f = r.at(k, c);
      if (f == 0) continue;
      for (int j = c; j < r.cols(); ++j) r.at(k, j) -= f * r.at(i, j);
    }
  }
  Mat out(e.rank, m.cols());
  for (int i = 0; i < e.rank; ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = r.at(i, j);
  return out;
}

SolveResult solve(const Mat& a, const Vec& b) {
  Mat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  Echelon e = fraction_free_echelon(std::move(aug));
  SolveResult res;
  for (int c : e.pivot_cols)
    if (c == a.cols()) {
      res.status = SolveResult::Status::Inconsistent;
      return res;
    }
  if (e.rank < a.cols()) {
    res.status = SolveResult::Status::Underdetermined;
    return res;
  }
  Vec x(a.cols());
  for (int r = e.rank - 1; r >= 0; --r) {
    int c = e.pivot_cols[r];
    Scalar s = e.m.at(r, a.cols());
    for (int j = c + 1; j < a.cols(); ++j) s -= e.m.at(r, j) * x[j];
    x[c] = s / e.m.at(r, c);
  }
  res.status = SolveResult::Status::Unique;
  res.x = std::move(x);
  return res;
}

std::optional<Vec> solve_any(const Mat& a, const Vec& b) {
  Mat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  Echelon e = fraction_free_echelon(std::move(aug));
  for (int c : e.pivot_cols)
    if (c == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (int r = e.rank - 1; r >= 0; --r) {
    int c = e.pivot_cols[r];
    Scalar s = e.m.at(r, a.cols());
    for (int j = c + 1; j < a.cols(); ++j) s -= e.m.at(r, j) * x[j];
    x[c] = s / e.m.at(r, c);
  }
  return x;
}

Scalar det(const Mat& m) {
  if (m.rows() != m.cols()) throw ValidationError("det: matrix not square");
  int n = m.rows();
  if (n == 0) return 1;
  // Bareiss on a working copy, tracking row swaps and the row scalings
  // introduced by denominator clearing.
  Mat w = m;
  Scalar scale = 1;
  for (int i = 0; i < n; ++i) {
    Integer l = 1;
    for (int j = 0; j < n; ++j) l = lcm(l, denominator(w.at(i, j)));
    if (l != 1) {
      for (int j = 0; j < n; ++j) w.at(i, j) *= Scalar(l);
      scale *= Scalar(l);
    }
  }
  Scalar prev = 1;
  int sign = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (w.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(c, j));
      sign = -sign;
    }
    const Scalar p = w.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      const Scalar f = w.at(i, c);
      for (int j = c; j < n; ++j) w.at(i, j) = (p * w.at(i, j) - f * w.at(c, j)) / prev;
    }
    prev = p;
  }
  return Scalar(sign) * w.at(n - 1, n - 1) / scale;
}

std::vector<Scalar> char_poly(const Mat& m) {
  if (m.rows() != m.cols()) throw ValidationError("char_poly: matrix not square");
  int n = m.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Mat mk = Mat::identity(n);
  for (int k = 1; k <= n; ++k) {
    Mat am = m * mk;
    c[n - k] = -am.trace() / Scalar(k);
    mk = am + Mat::identity(n) * c[n - k];
  }
  return c;
}

bool is_positive_definite(const Mat& m) {
  if (!m.is_symmetric()) throw ValidationError("is_positive_definite: matrix not symmetric");
  for (int k = 1; k <= m.rows(); ++k) {
    Mat lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = m.at(i, j);
    if (det(lead) <= 0) return false;
  }
  return true;
}

std::array<int, 3> signature(Mat m) {
  if (!m.is_symmetric()) throw ValidationError("signature: matrix not symmetric");
  int n = m.rows();
  std::array<int, 3> sig{0, 0, 0};
  auto sym_add = [&](int dst, int src) {
    for (int j = 0; j < n; ++j) m.at(dst, j) += m.at(src, j);
    for (int i = 0; i < n; ++i) m.at(i, dst) += m.at(i, src);
  };
  auto sym_swap = [&](int a, int b) {
    for (int j = 0; j < n; ++j) std::swap(m.at(a, j), m.at(b, j));
    for (int i = 0; i < n; ++i) std::swap(m.at(i, a), m.at(i, b));
  };
  for (int k = 0; k < n; ++k) {
    if (m.at(k, k) == 0) {
      int d = -1, o = -1;
      for (int j = k + 1; j < n; ++j)
        if (m.at(j, j) != 0) {
          d = j;
          break;
        }
      if (d >= 0) {
        sym_swap(k, d);
      } else {
        for (int j = k + 1; j < n; ++j)
          if (m.at(k, j) != 0) {
            o = j;
            break;
          }
        if (o < 0) {
          ++sig[2];
          continue;
        }
        sym_add(k, o);  // diagonal becomes 2*m(k,o) != 0 since m(o,o) = 0
      }
    }
    const Scalar p = m.at(k, k);
    ++sig[p > 0 ? 0 : 1];
    for (int i = k + 1; i < n; ++i) {
      const Scalar f = m.at(i, k) / p;
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
      for (int j = 0; j < n; ++j) m.at(j, i) -= f * m.at(j, k);
    }
  }
  return sig;
}

}  // namespace lck
