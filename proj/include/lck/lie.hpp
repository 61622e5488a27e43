#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lck/linalg.hpp"

namespace lck {

// Subspace of coordinate space, stored as canonical RREF rows so that equal
// subspaces compare equal.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(int ambient, const std::vector<Vec>& generators);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(int i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v in the RREF basis; nullopt when v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  // Residue of v after removing its component in the span (reduction against
  // the RREF rows).
  Vec reduce(const Vec& v) const;
  Subspace sum(const Subspace& other) const;

  bool operator==(const Subspace& o) const = default;

private:
  int ambient_ = 0;
  Mat basis_;
};

using BracketTable = std::map<std::pair<int, int>, Vec>;

// Finite-dimensional Lie algebra over exact rationals: a named basis and the
// structure constants [e_i, e_j] = sum_k c_ij^k e_k, stored for i < j only so
// antisymmetry holds by construction. Immutable after construction.
class LieAlgebra {
public:
  LieAlgebra() = default;  // the 0-dimensional algebra

  // `table` keys must satisfy i < j; missing entries are zero brackets.
  // With validate = true the Jacobi identity is enforced; the deferred form
  // exists for intermediate objects built mid-construction.
  static LieAlgebra build(std::vector<std::string> names, BracketTable table, bool validate = true);
  static LieAlgebra abelian(int n, const std::string& stem = "e");

  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& basis_names() const { return names_; }
  int index_of(const std::string& name) const;

  // c_ij^k with arbitrary i, j (antisymmetry applied as needed).
  Scalar c(int i, int j, int k) const;
  Vec bracket_basis(int i, int j) const;
  Vec bracket(const Vec& v, const Vec& w) const;
  Mat ad(const Vec& v) const;
  Mat ad_basis(int i) const;
  const BracketTable& table() const { return table_; }

  bool operator==(const LieAlgebra& o) const;
  // Structure constants only, ignoring basis names.
  bool same_table(const LieAlgebra& o) const;

private:
  std::vector<std::string> names_;
  BracketTable table_;  // i < j only, zero entries omitted
};

struct JacobiDefect {
  int i, j, k;
  Vec defect;  // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
};

std::vector<JacobiDefect> jacobi_defect(const LieAlgebra& g);
bool is_unimodular(const LieAlgebra& g);
Subspace center(const LieAlgebra& g);

enum class SeriesKind { Derived, LowerCentral };

// Descending series until stabilization. Terms are listed without repetition
// when the series reaches {0}; if it stabilizes above {0} the repeated term
// appears once to mark stabilization.
std::vector<Subspace> series(const LieAlgebra& g, SeriesKind kind);
bool is_nilpotent(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);

Mat killing_form(const LieAlgebra& g);
bool is_semisimple(const LieAlgebra& g);

// Block-diagonal bracket table; cross brackets zero. Basis names of the
// second summand are disjointified with primes when they collide.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

// The same algebra expressed in the basis f_j = sum_i P(i,j) e_i.
LieAlgebra change_basis(const LieAlgebra& g, const Mat& p, std::vector<std::string> new_names);

// Reorders the basis by `perm` (new position j holds old basis vector perm[j]).
LieAlgebra permute_basis(const LieAlgebra& g, const std::vector<int>& perm);

// Algebra structure induced on a bracket-closed subspace, in the subspace
// basis. Throws ValidationError when the subspace is not a subalgebra.
LieAlgebra subalgebra_on(const LieAlgebra& g, const Subspace& s, const std::string& stem = "f");

struct CentralQuotient {
  LieAlgebra algebra;       // g / <z>
  std::vector<int> kept;    // ambient indices of the representative basis
  int removed = -1;         // ambient index eliminated for the quotient
  Vec z;                    // the central vector quotiented out
  // Coordinates of the class of an ambient vector.
  Vec project(const Vec& v) const;
};

// Quotient by the line spanned by a central vector z. Throws ValidationError
// when z is not central.
CentralQuotient quotient_by_central(const LieAlgebra& g, const Vec& z);

// Largest subspace of s invariant under every ad(e_i); the biggest ideal of g
// contained in s.
Subspace largest_invariant_subspace(const LieAlgebra& g, const Subspace& s);

}  // namespace lck
