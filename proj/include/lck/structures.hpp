#pragma once

#include <optional>

#include "lck/exterior.hpp"
#include "lck/lie.hpp"
#include "lck/report.hpp"

namespace lck {

// Hermitian structure (g, J) on a Lie algebra. The fundamental 2-form is
//   Omega(u, v) = g(u, Jv),   equivalently   g(u, v) = Omega(Ju, v),
// the pairing used throughout; see docs/conventions.md.
struct HermitianData {
  LieAlgebra algebra;
  Mat metric;  // symmetric
  Mat J;       // J^2 = -I, g(Ju, Jv) = g(u, v)
};

// Per-invariant verification of HermitianData (symmetry, J^2 = -I,
// J-compatibility of the metric). Never throws; failures are items.
StructureReport check_hermitian(const HermitianData& h);

// Omega(u, v) = g(u, Jv). Throws ValidationError when the data does not
// produce an antisymmetric form (broken J-compatibility).
KForm fundamental_form(const HermitianData& h);

struct LcKReport {
  bool positive_definite = false;
  bool J_integrable = false;
  bool theta_closed = false;
  bool lck_identity = false;  // d(Omega) = Omega ^ theta solvable
  bool vaisman = false;
  KForm theta;                     // Lee form when lck_identity holds
  Vec xi;                          // Lee field, metric dual of theta
  Scalar xi_norm;                  // g(xi, xi)
  std::string lee_error;           // diagnostic when lck_identity fails
  // Basis pairs (i, j) with g([xi,ei],ej) + g(ei,[xi,ej]) != 0, with the value.
  std::vector<std::tuple<int, int, Scalar>> killing_defects;
  bool lck() const { return positive_definite && J_integrable && theta_closed && lck_identity; }
  // vaisman_gating = false renders the Vaisman item as informational (for
  // plain l.c.K. checks).
  StructureReport to_report(const LieAlgebra& g, bool vaisman_gating = true) const;
};

// Computes Omega, solves for the Lee form, extracts the Lee field via
// g(xi, .) = theta and tests the Killing identity
//   g([xi, X], Y) + g(X, [xi, Y]) = 0
// over all basis pairs. Mathematical failures populate flags, not exceptions.
LcKReport check_lck(const HermitianData& h);

// Unique xi with g(xi, v) = theta(v) for all v, plus g(xi, xi).
// Throws ValidationError for a degenerate metric.
std::pair<Vec, Scalar> lee_field(const HermitianData& h, const KForm& theta);

// Pairs (i, j) where the Nijenhuis tensor
//   N(x,y) = [Jx,Jy] - [x,y] - J[Jx,y] - J[x,Jy]
// does not lie in h, with the defect reduced mod h. Empty h = integrability
// on the whole algebra. Throws ValidationError when J does not preserve h.
struct NijenhuisDefect {
  int i, j;
  Vec defect;
};
std::vector<NijenhuisDefect> nijenhuis_defect(const LieAlgebra& g, const Mat& J, const Subspace& h);

// Contact metric data {phi, eta, Jtilde, g} on an odd-dimensional algebra.
struct SasakiData {
  LieAlgebra algebra;
  KForm phi;   // contact 1-form
  Vec eta;     // Reeb vector
  Mat Jtilde;  // (1,1) tensor
  Mat metric;
};

// The five verdicts: contact, Reeb normalization, tensor law
// Jtilde^2 = -I + phi (x) eta, metric law
// g(U,V) = phi(U) phi(V) + d(phi)(Jtilde U, V), and eta Killing together with
// CR integrability of Jtilde on ker phi (brackets projected along eta).
StructureReport check_sasaki(const SasakiData& s);

// Kahler pair (g, h, J, omega).
struct KahlerAlgebraData {
  LieAlgebra algebra;
  Subspace h;
  Mat J;
  KForm omega;
};

// Koszul form kappa(X) = Tr_{g/h}(ad(JX) - J ad(X)), traces taken on the
// quotient along the complement of h. Throws when J h is not inside h.
KForm koszul_form(const KahlerAlgebraData& k);

// Ricci form r(X,Y) = -kappa([X,Y]).
KForm ricci_form(const KahlerAlgebraData& k);

// Axioms (i)-(vi) for a Kahler algebra, plus effectivity (h contains no
// nonzero ideal) and the J-algebra test (exact solve for rho with
// d(rho) = omega).
StructureReport check_kahler_algebra(const KahlerAlgebraData& k);

// Shared helper: the induced symmetric pairing s(u,v) = omega(Ju, v) on a
// complement of h; definite iff axiom (vi) holds.
Mat kahler_metric_on_complement(const KahlerAlgebraData& k, std::vector<int>& complement_indices);

}  // namespace lck
