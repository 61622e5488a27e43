#pragma once

#include <map>
#include <optional>

#include "lck/constructions.hpp"

namespace lck {

// Built-in, exactly specified algebras and structures used as fixtures by the
// tests and the CLI. Every `expected` verdict is reproducible by running the
// named predicate through evaluate_predicate.
struct CatalogEntry {
  std::string name;
  std::map<std::string, Scalar> params;
  LieAlgebra algebra;
  std::optional<HermitianData> hermitian;
  std::optional<SasakiData> sasaki;
  std::optional<KahlerAlgebraData> kahler;
  std::map<std::string, Vec> vectors;   // named distinguished vectors (e.g. S)
  std::map<std::string, KForm> forms;   // named distinguished forms (e.g. psi)
  std::map<std::string, std::string> expected;
  std::string notes;
};

// Registry:
//   abelian(n)                 r_times_heisenberg(k)   kodaira_primary
//   heisenberg(k)              r_times_su2             kodaira_secondary
//   su2                        r_times_sl2r            omega_psi(a, b, c)
//   sl2r                       complex_space(k)        gl2r_mod
std::vector<std::string> catalog_names();

CatalogEntry catalog_get(const std::string& name, const std::map<std::string, Scalar>& params = {});

// Executes the predicate named by an `expected` key against the entry and
// returns the observed verdict string.
std::string evaluate_predicate(const CatalogEntry& entry, const std::string& predicate);

}  // namespace lck
