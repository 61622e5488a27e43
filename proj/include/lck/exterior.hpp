#pragma once

#include <map>
#include <string>
#include <vector>

#include "lck/lie.hpp"

namespace lck {

// Alternating k-form on an n-dimensional coordinate space, stored sparsely on
// strictly increasing index tuples. Degree may formally exceed n, in which
// case the form is identically zero (no valid tuples exist).
class KForm {
public:
  KForm() = default;
  KForm(int ambient, int degree) : n_(ambient), deg_(degree) {}

  static KForm basis_dual(int ambient, int index);  // degree-1 e_i^*
  static KForm monomial(int ambient, std::vector<int> indices, Scalar coeff);
  static KForm constant(int ambient, Scalar value);  // degree 0

  int ambient() const { return n_; }
  int degree() const { return deg_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::vector<int>, Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(const std::vector<int>& indices) const;

  // Adds c * e_I, sorting I and tracking the permutation sign; repeated
  // indices contribute nothing. Zero totals are erased.
  void add_term(std::vector<int> indices, Scalar c);

  KForm operator+(const KForm& o) const;
  KForm operator-(const KForm& o) const;
  KForm operator*(const Scalar& s) const;
  KForm operator-() const;
  bool operator==(const KForm& o) const = default;

  // Full evaluation on degree() many vectors.
  Scalar eval(const std::vector<Vec>& args) const;

  std::string str(const std::vector<std::string>& names) const;

private:
  int n_ = 0, deg_ = 0;
  std::map<std::vector<int>, Scalar> coeffs_;
};

// Graded-commutative wedge product (determinant convention, no 1/k!).
KForm wedge(const KForm& a, const KForm& b);
KForm wedge_power(const KForm& a, int k);

// Chevalley-Eilenberg differential fixed by d(alpha)(X,Y) = -alpha([X,Y]) on
// 1-forms and extended as an antiderivation. This is the single source of
// sign truth for the library; see docs/conventions.md.
KForm ce_d(const LieAlgebra& g, const KForm& a);

// Interior product in the first slot; antiderivation of degree -1.
// Throws ValidationError on degree-0 input.
KForm interior(const Vec& v, const KForm& a);

// Degree-1 form with the given coefficients.
KForm one_form(const Vec& coeffs);
// Degree-2 form from an antisymmetric matrix b(i,j).
KForm two_form_from_matrix(const Mat& b);
// Antisymmetric matrix of a degree-2 form.
Mat matrix_of_two_form(const KForm& f);

struct LeeSolve {
  enum class Status { Ok, Degenerate, NoSolution, NotClosed, BadDimension };
  Status status = Status::BadDimension;
  KForm theta;       // populated for Ok and NotClosed
  std::string message;
  bool ok() const { return status == Status::Ok; }
};

// Solves Omega ^ theta = d(Omega) for the unique 1-form theta and verifies
// d(theta) = 0. Requires dim >= 4 even and Omega nondegenerate, which makes
// the map theta -> Omega ^ theta injective.
LeeSolve solve_lee_form(const LieAlgebra& g, const KForm& omega);

}  // namespace lck
