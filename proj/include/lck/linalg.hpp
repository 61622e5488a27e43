#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lck/rational.hpp"

namespace lck {

using Vec = std::vector<Scalar>;

// Dense matrix of exact rationals, row major.
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Scalar& s) const;
  Mat operator-() const;
  bool operator==(const Mat& o) const = default;

  Mat transposed() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  Vec row(int i) const;
  Vec col(int j) const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

Vec mat_vec(const Mat& m, const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& s, const Vec& v);
bool vec_is_zero(const Vec& v);
Scalar dot(const Vec& a, const Vec& b);
std::string vec_str(const Vec& v);

// Row echelon form computed by fraction-free (Bareiss) elimination: rows are
// first scaled to integer entries, every update is
//   row_i <- (p * row_i - m(i,c) * row_r) / prev_pivot
// which stays integral and keeps coefficient growth polynomial.
struct Echelon {
  Mat m;
  std::vector<int> pivot_cols;
  int rank = 0;
};
Echelon fraction_free_echelon(Mat m);

int rank(const Mat& m);

// Basis of {x : m x = 0}.
std::vector<Vec> null_space(const Mat& m);

// Reduced row echelon form; canonical for row-space comparisons.
Mat rref(const Mat& m);

struct SolveResult {
  enum class Status { Unique, Inconsistent, Underdetermined };
  Status status = Status::Inconsistent;
  Vec x;
};
SolveResult solve(const Mat& a, const Vec& b);

// Any particular solution of a x = b (free variables set to zero); nullopt
// when the system is inconsistent.
std::optional<Vec> solve_any(const Mat& a, const Vec& b);

Scalar det(const Mat& m);

// Monic characteristic polynomial of a square matrix, coefficient of u^k at
// index k (Faddeev-LeVerrier).
std::vector<Scalar> char_poly(const Mat& m);

// Sylvester criterion: all leading principal minors positive.
// Throws ValidationError on non-symmetric input.
bool is_positive_definite(const Mat& m);

// (positive, negative, zero) inertia of a symmetric matrix, computed by exact
// congruence diagonalization.
std::array<int, 3> signature(Mat m);

}  // namespace lck
