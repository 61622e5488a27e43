#include "lck/io.hpp"

#include <nlohmann/json.hpp>

namespace lck {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw InputError(path + ": " + msg);
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

int int_field(const json& j, const std::string& key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

Scalar scalar_field(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Scalar(v.get<long long>());
  if (!v.is_string()) fail(path, "expected a rational string \"p\" or \"p/q\"");
  return parse_scalar(v.get<std::string>(), path);
}

Vec vec_field(const json& v, int n, const std::string& path) {
  if (!v.is_array() || static_cast<int>(v.size()) != n)
    fail(path, "expected an array of " + std::to_string(n) + " rationals");
  Vec out(n);
  for (int i = 0; i < n; ++i) out[i] = scalar_field(v[i], path + "[" + std::to_string(i) + "]");
  return out;
}

Mat mat_field(const json& v, int n, const std::string& path) {
  if (!v.is_array() || static_cast<int>(v.size()) != n * n)
    fail(path, "expected a row-major array of " + std::to_string(n * n) + " rationals");
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = scalar_field(v[i * n + j], path + "[" + std::to_string(i * n + j) + "]");
  return m;
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const Scalar& s : v) a.push_back(scalar_str(s));
  return a;
}

json mat_to_json(const Mat& m) {
  json a = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a.push_back(scalar_str(m.at(i, j)));
  return a;
}

}  // namespace

AlgebraBundle parse_bundle(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("document root must be an object");
  AlgebraBundle b;
  b.name = j.value("name", "");
  const int n = int_field(j, "dim", "$");
  if (n < 0) fail("$.dim", "dimension must be >= 0");
  const json& basis = field(j, "basis", "$");
  if (!basis.is_array() || static_cast<int>(basis.size()) != n)
    fail("$.basis", "expected " + std::to_string(n) + " names");
  std::vector<std::string> names;
  for (const auto& nm : basis) {
    if (!nm.is_string()) fail("$.basis", "names must be strings");
    names.push_back(nm.get<std::string>());
  }
  BracketTable table;
  if (j.contains("brackets")) {
    const json& brs = j["brackets"];
    if (!brs.is_array()) fail("$.brackets", "expected an array");
    for (size_t e = 0; e < brs.size(); ++e) {
      std::string path = "$.brackets[" + std::to_string(e) + "]";
      const json& entry = brs[e];
      int i = int_field(entry, "i", path);
      int jj = int_field(entry, "j", path);
      if (i < 0 || jj < 0 || i >= n || jj >= n) fail(path, "index out of range");
      if (i >= jj) fail(path, "entries require i < j (antisymmetry is implied)");
      if (table.count({i, jj})) fail(path, "duplicate bracket entry");
      Vec coeffs(n);
      const json& terms = field(entry, "terms", path);
      if (!terms.is_array()) fail(path + ".terms", "expected an array");
      for (size_t t = 0; t < terms.size(); ++t) {
        std::string tpath = path + ".terms[" + std::to_string(t) + "]";
        int k = int_field(terms[t], "k", tpath);
        if (k < 0 || k >= n) fail(tpath + ".k", "index out of range");
        coeffs[k] += scalar_field(field(terms[t], "coeff", tpath), tpath + ".coeff");
      }
      table.emplace(std::make_pair(i, jj), std::move(coeffs));
    }
  }
  try {
    b.algebra = LieAlgebra::build(std::move(names), std::move(table), false);
  } catch (const InputError& e) {
    throw InputError(std::string("$.basis: ") + e.what());
  }
  if (j.contains("metric")) b.metric = mat_field(j["metric"], n, "$.metric");
  if (j.contains("complex_structure"))
    b.complex_structure = mat_field(j["complex_structure"], n, "$.complex_structure");
  if (j.contains("forms")) {
    const json& forms = j["forms"];
    if (!forms.is_array()) fail("$.forms", "expected an array");
    for (size_t f = 0; f < forms.size(); ++f) {
      std::string path = "$.forms[" + std::to_string(f) + "]";
      const json& entry = forms[f];
      std::string name = field(entry, "name", path).get<std::string>();
      int degree = int_field(entry, "degree", path);
      if (degree < 0) fail(path + ".degree", "degree must be >= 0");
      KForm form(n, degree);
      const json& terms = field(entry, "terms", path);
      for (size_t t = 0; t < terms.size(); ++t) {
        std::string tpath = path + ".terms[" + std::to_string(t) + "]";
        const json& idx = field(terms[t], "indices", tpath);
        if (!idx.is_array() || static_cast<int>(idx.size()) != degree)
          fail(tpath + ".indices", "expected " + std::to_string(degree) + " indices");
        std::vector<int> indices;
        for (const auto& v : idx) {
          if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= n)
            fail(tpath + ".indices", "index out of range");
          indices.push_back(v.get<int>());
        }
        form.add_term(std::move(indices), scalar_field(field(terms[t], "coeff", tpath), tpath + ".coeff"));
      }
      if (!b.forms.emplace(name, std::move(form)).second) fail(path, "duplicate form name");
    }
  }
  if (j.contains("vectors")) {
    const json& vecs = j["vectors"];
    if (!vecs.is_array()) fail("$.vectors", "expected an array");
    for (size_t v = 0; v < vecs.size(); ++v) {
      std::string path = "$.vectors[" + std::to_string(v) + "]";
      std::string name = field(vecs[v], "name", path).get<std::string>();
      Vec coords = vec_field(field(vecs[v], "coords", path), n, path + ".coords");
      if (!b.vectors.emplace(name, std::move(coords)).second) fail(path, "duplicate vector name");
    }
  }
  if (j.contains("subalgebra")) {
    const json& sub = j["subalgebra"];
    if (!sub.is_array()) fail("$.subalgebra", "expected an array of coordinate vectors");
    std::vector<Vec> gens;
    for (size_t v = 0; v < sub.size(); ++v)
      gens.push_back(vec_field(sub[v], n, "$.subalgebra[" + std::to_string(v) + "]"));
    b.subalgebra = Subspace::span(n, gens);
  }
  return b;
}

std::string serialize_bundle(const AlgebraBundle& b) {
  json j;
  j["name"] = b.name;
  j["dim"] = b.algebra.dim();
  j["basis"] = b.algebra.basis_names();
  json brackets = json::array();
  for (const auto& [key, coeffs] : b.algebra.table()) {
    json entry;
    entry["i"] = key.first;
    entry["j"] = key.second;
    json terms = json::array();
    for (int k = 0; k < b.algebra.dim(); ++k)
      if (coeffs[k] != 0) terms.push_back({{"k", k}, {"coeff", scalar_str(coeffs[k])}});
    entry["terms"] = std::move(terms);
    brackets.push_back(std::move(entry));
  }
  j["brackets"] = std::move(brackets);
  if (b.metric) j["metric"] = mat_to_json(*b.metric);
  if (b.complex_structure) j["complex_structure"] = mat_to_json(*b.complex_structure);
  if (!b.forms.empty()) {
    json forms = json::array();
    for (const auto& [name, form] : b.forms) {
      json entry;
      entry["name"] = name;
      entry["degree"] = form.degree();
      json terms = json::array();
      for (const auto& [idx, c] : form.coeffs())
        terms.push_back({{"indices", idx}, {"coeff", scalar_str(c)}});
      entry["terms"] = std::move(terms);
      forms.push_back(std::move(entry));
    }
    j["forms"] = std::move(forms);
  }
  if (!b.vectors.empty()) {
    json vecs = json::array();
    for (const auto& [name, coords] : b.vectors)
      vecs.push_back({{"name", name}, {"coords", vec_to_json(coords)}});
    j["vectors"] = std::move(vecs);
  }
  if (b.subalgebra) {
    json sub = json::array();
    for (int i = 0; i < b.subalgebra->dim(); ++i) sub.push_back(vec_to_json(b.subalgebra->basis_vector(i)));
    j["subalgebra"] = std::move(sub);
  }
  return j.dump(2) + "\n";
}

AlgebraBundle bundle_from_catalog(const CatalogEntry& e) {
  AlgebraBundle b;
  b.name = e.name;
  for (const auto& [key, value] : e.params) b.name += " " + key + "=" + scalar_str(value);
  b.algebra = e.algebra;
  if (e.hermitian) {
    b.metric = e.hermitian->metric;
    b.complex_structure = e.hermitian->J;
  }
  if (e.sasaki) {
    if (!b.metric) b.metric = e.sasaki->metric;
    if (!b.complex_structure) b.complex_structure = e.sasaki->Jtilde;
    b.forms.emplace("phi", e.sasaki->phi);
    b.vectors.emplace("eta", e.sasaki->eta);
  }
  if (e.kahler) {
    if (!b.complex_structure) b.complex_structure = e.kahler->J;
    b.forms.emplace("omega", e.kahler->omega);
    b.subalgebra = e.kahler->h;
  }
  for (const auto& [name, v] : e.vectors) b.vectors.emplace(name, v);
  for (const auto& [name, f] : e.forms) b.forms.emplace(name, f);
  return b;
}

HermitianData hermitian_from_bundle(const AlgebraBundle& b) {
  if (!b.metric) throw InputError("Hermitian data needs a \"metric\" field");
  if (!b.complex_structure) throw InputError("Hermitian data needs a \"complex_structure\" field");
  return {b.algebra, *b.metric, *b.complex_structure};
}

SasakiData sasaki_from_bundle(const AlgebraBundle& b) {
  if (!b.metric) throw InputError("Sasaki data needs a \"metric\" field");
  if (!b.complex_structure)
    throw InputError("Sasaki data needs a \"complex_structure\" field (the tensor Jtilde)");
  auto phi = b.forms.find("phi");
  if (phi == b.forms.end() || phi->second.degree() != 1)
    throw InputError("Sasaki data needs a degree-1 form named \"phi\"");
  auto eta = b.vectors.find("eta");
  if (eta == b.vectors.end()) throw InputError("Sasaki data needs a vector named \"eta\"");
  return {b.algebra, phi->second, eta->second, *b.complex_structure, *b.metric};
}

KahlerAlgebraData kahler_from_bundle(const AlgebraBundle& b) {
  if (!b.complex_structure) throw InputError("Kahler data needs a \"complex_structure\" field");
  auto omega = b.forms.find("omega");
  if (omega == b.forms.end() || omega->second.degree() != 2)
    throw InputError("Kahler data needs a degree-2 form named \"omega\"");
  Subspace h = b.subalgebra ? *b.subalgebra : Subspace(b.algebra.dim());
  return {b.algebra, h, *b.complex_structure, omega->second};
}

ModificationMap modification_map_from_json(const std::string& text, int dim) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("map document is not valid JSON: ") + e.what());
  }
  const json& gens = field(j, "generators", "$");
  if (!gens.is_array() || gens.empty()) fail("$.generators", "expected a nonempty array");
  ModificationMap m;
  for (size_t a = 0; a < gens.size(); ++a)
    m.generators.push_back(mat_field(gens[a], dim, "$.generators[" + std::to_string(a) + "]"));
  const json& coeffs = field(j, "coefficients", "$");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != dim)
    fail("$.coefficients", "expected one row per basis vector");
  m.coeffs = Mat(dim, static_cast<int>(gens.size()));
  for (int i = 0; i < dim; ++i) {
    Vec row = vec_field(coeffs[i], static_cast<int>(gens.size()),
                        "$.coefficients[" + std::to_string(i) + "]");
    for (int a = 0; a < m.coeffs.cols(); ++a) m.coeffs.at(i, a) = row[a];
  }
  return m;
}

std::string report_to_text(const StructureReport& rep) {
  std::string out;
  for (const auto& it : rep.items) {
    out += it.pass ? "[PASS] " : "[FAIL] ";
    out += it.id + ": " + it.description;
    if (it.informational) out += " (informational)";
    if (!it.witness.empty()) out += "\n       " + it.witness;
    out += "\n";
  }
  out += rep.all_pass() ? "result: PASS\n" : "result: FAIL\n";
  return out;
}

nlohmann::json report_to_json(const StructureReport& rep) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& it : rep.items) {
    nlohmann::json item;
    item["id"] = it.id;
    item["description"] = it.description;
    item["pass"] = it.pass;
    if (!it.witness.empty()) item["witness"] = it.witness;
    if (it.informational) item["informational"] = true;
    items.push_back(std::move(item));
  }
  nlohmann::json out;
  out["pass"] = rep.all_pass();
  out["items"] = std::move(items);
  return out;
}

}  // namespace lck
