#pragma once

#include <nlohmann/json_fwd.hpp>

#include "lck/catalog.hpp"

namespace lck {

// In-memory image of an algebra description file. All rationals are carried
// as exact "p/q" strings on disk. parse -> serialize -> parse is the
// identity; malformed documents raise InputError with the offending field
// path.
struct AlgebraBundle {
  std::string name;
  LieAlgebra algebra;
  std::optional<Mat> metric;
  std::optional<Mat> complex_structure;
  std::map<std::string, KForm> forms;
  std::map<std::string, Vec> vectors;
  std::optional<Subspace> subalgebra;
};

AlgebraBundle parse_bundle(const std::string& text);
std::string serialize_bundle(const AlgebraBundle& b);

AlgebraBundle bundle_from_catalog(const CatalogEntry& e);

// Typed views; throw InputError naming the missing field.
HermitianData hermitian_from_bundle(const AlgebraBundle& b);
SasakiData sasaki_from_bundle(const AlgebraBundle& b);
KahlerAlgebraData kahler_from_bundle(const AlgebraBundle& b);

// {"generators": [row-major n x n, ...], "coefficients": n rows of m entries}
ModificationMap modification_map_from_json(const std::string& text, int dim);

std::string report_to_text(const StructureReport& rep);
nlohmann::json report_to_json(const StructureReport& rep);

}  // namespace lck
