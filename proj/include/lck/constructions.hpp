#pragma once

#include "lck/structures.hpp"

namespace lck {

// Linear map phi: g -> k into a list of commuting derivations, given by
// per-basis-vector coefficient rows: phi(e_i) = sum_a coeffs(i, a) * sigma_a.
struct ModificationMap {
  std::vector<Mat> generators;  // the sigma_a
  Mat coeffs;                   // n x m

  Mat phi(const Vec& v) const;
  ModificationMap negated() const;
  // Sum of coefficient rows; requires identical generator lists.
  ModificationMap plus(const ModificationMap& o) const;
};

// Verdicts: each sigma_a is a derivation, skew-symmetric for the metric,
// commutes with J; the sigma_a commute pairwise; phi kills [g, g] and every
// sigma image.
StructureReport validate_modification(const HermitianData& h, const ModificationMap& m);

struct ModifiedAlgebra {
  LieAlgebra algebra;
  HermitianData hermitian;  // same metric and J carried over
};

// New bracket [X, Y]' = [X, Y] + phi(X)(Y) - phi(Y)(X). Throws
// ValidationError when validate_modification fails or the result is not a
// Lie algebra.
ModifiedAlgebra modify(const HermitianData& h, const ModificationMap& m);

// Pair modification: enlarges (g, h) to (g x| k, h x| k) for commuting
// derivations satisfying sigma(h) in h and J sigma = sigma J (mod h).
struct ModifiedPair {
  LieAlgebra algebra;   // g x| k; the new generators come last
  Subspace h;           // h x| k
  Mat J;                // extended by J = 0 on k
};
ModifiedPair modify_pair(const LieAlgebra& g, const Subspace& h_sub, const Mat& J,
                         const std::vector<Mat>& k);

struct CentralizeResult {
  LieAlgebra algebra;
  HermitianData data;
  // Compact directions absorbed by the Reeb step; empty when the output data
  // is a genuine Hermitian structure. When nonempty the data is pair level:
  // the metric degenerates exactly on h and J^2 = -I holds mod h.
  Subspace h;
  StructureReport report;
  Vec xi, eta;  // Lee and Reeb vectors of the output
};

// Makes the Lee and Reeb fields central: first the Lee-field modification
// (bracket change via phi = -(theta/theta(xi)) (x) ad_xi), then, if the Reeb
// field is still not central, the pair enlargement by ad_eta with the new
// central element absorbed into the basis. Output center has dimension
// exactly 2. Requires check_lck to report vaisman = true.
CentralizeResult centralize(const HermitianData& h);

// Applies only the Lee-field step of centralize. Exposed because the
// classifier branches on ker(theta) of the product form.
CentralizeResult centralize_lee_only(const HermitianData& h);

struct CentralExtensionData {
  KahlerAlgebraData base;  // (g2, k, J, omega)
  LieAlgebra total;        // g1 = g2 + R eta
  Vec eta;                 // central generator, last basis vector
  KForm psi;               // contact form, dual of eta
};

// Central extension with bracket [X, Y] = [X, Y]_{g2} - omega(X, Y) eta and
// eta central; d(psi) pulls back to omega. Throws ValidationError when omega
// fails the cocycle axiom (v). `eta_name` names the new basis vector.
CentralExtensionData quantize(const KahlerAlgebraData& k, const std::string& eta_name = "eta");

// Quotient g1 / <eta> with omega induced by d(phi) and J induced by Jtilde.
// Requires check_sasaki to pass and eta central; for algebras with
// non-central Reeb field (su(2), sl(2,R) types) use the pair
// (g1, <eta>, Jtilde, d phi) instead, which sasaki_pair_data builds.
KahlerAlgebraData kahler_quotient(const SasakiData& s);

// The Kahler pair (g1, <eta>, Jtilde, d phi) of a Sasaki algebra.
KahlerAlgebraData sasaki_pair_data(const SasakiData& s);

// (g1 x g1') / Delta with Delta = {(x eta, -x eta')}: a single central eta
// over the product base, base coordinates kept, eta last.
CentralExtensionData delta_sum(const CentralExtensionData& a, const CentralExtensionData& b);

// The algebra R T + g1 with Omega = -t ^ psi + d(psi), complex structure
//   J T = b T + (1 + b^2) eta,  J eta = -T - b eta,  J = Jtilde on ker phi,
// and metric g(u, v) = Omega(Ju, v). T is the first basis vector; the Lee
// form of the result is t and the Lee field is T + b eta.
HermitianData canonical_vaisman(const SasakiData& s, const Scalar& b);

struct ClassificationVerdict {
  enum class Type { Heisenberg, Su2, Sl2r };
  Type type = Type::Heisenberg;
  int k = 0;                          // Heisenberg parameter
  int center_dim_g0 = 0;              // dim Z(ker theta)
  std::array<int, 3> killing_sig{};   // inertia of the Killing form of ker theta
  std::string tag() const;            // "HEISENBERG(k)" | "SU2" | "SL2R"
};

struct ClassifyResult {
  bool ok = false;
  ClassificationVerdict verdict;
  std::string error_kind;  // NotVaisman | NotUnimodular | UnrecognizedShape
  std::string message;
};

// Unimodular Vaisman classification: centralizes the Lee field, splits off
// R xi, takes g0 = ker theta and branches on dim Z(g0):
//   1 -> HEISENBERG(k), confirmed by 2-step nilpotency with 1-dim center;
//   0 -> semisimple check, then Killing inertia: negative definite -> SU2,
//        indefinite -> SL2R.
ClassifyResult classify_vaisman(const HermitianData& h);

}  // namespace lck
