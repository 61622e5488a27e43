#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "lck/io.hpp"

namespace py = pybind11;

namespace {

using namespace lck;

std::vector<std::string> vec_to_strings(const Vec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Scalar& s : v) out.push_back(scalar_str(s));
  return out;
}

Vec strings_to_vec(const std::vector<std::string>& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = parse_scalar(v[i]);
  return out;
}

std::vector<std::vector<std::string>> mat_to_strings(const Mat& m) {
  std::vector<std::vector<std::string>> out;
  for (int i = 0; i < m.rows(); ++i) out.push_back(vec_to_strings(m.row(i)));
  return out;
}

py::dict report_to_dict(const StructureReport& rep) {
  py::dict out;
  out["pass"] = rep.all_pass();
  py::list items;
  for (const auto& it : rep.items) {
    py::dict item;
    item["id"] = it.id;
    item["description"] = it.description;
    item["pass"] = it.pass;
    if (!it.witness.empty()) item["witness"] = it.witness;
    if (it.informational) item["informational"] = true;
    items.append(item);
  }
  out["items"] = items;
  return out;
}

std::map<std::string, Scalar> parse_params(const std::map<std::string, std::string>& params) {
  std::map<std::string, Scalar> out;
  for (const auto& [k, v] : params) out.emplace(k, parse_scalar(v, "param " + k));
  return out;
}

}  // namespace

PYBIND11_MODULE(_lck, m) {
  m.doc() =
      "Exact-arithmetic toolkit for locally conformally Kahler, Vaisman and Sasaki structures on "
      "Lie algebras. Rationals cross the boundary as strings \"p/q\"; algebras and structures "
      "travel as JSON documents in the same format the CLI reads.";

  py::register_exception<InputError>(m, "InputError");
  py::register_exception<ValidationError>(m, "ValidationError");

  py::class_<LieAlgebra>(m, "LieAlgebra")
      .def_static(
          "from_json", [](const std::string& text) { return parse_bundle(text).algebra; },
          py::arg("text"), "Load the algebra of an algebra-file document.")
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def_property_readonly("basis", &LieAlgebra::basis_names)
      .def("bracket",
           [](const LieAlgebra& g, const std::vector<std::string>& v, const std::vector<std::string>& w) {
             return vec_to_strings(g.bracket(strings_to_vec(v), strings_to_vec(w)));
           })
      .def("jacobi_defects", [](const LieAlgebra& g) { return jacobi_defect(g).size(); })
      .def("is_unimodular", [](const LieAlgebra& g) { return is_unimodular(g); })
      .def("is_nilpotent", [](const LieAlgebra& g) { return is_nilpotent(g); })
      .def("is_solvable", [](const LieAlgebra& g) { return is_solvable(g); })
      .def("is_semisimple", [](const LieAlgebra& g) { return is_semisimple(g); })
      .def("center_dim", [](const LieAlgebra& g) { return center(g).dim(); })
      .def("killing_form", [](const LieAlgebra& g) { return mat_to_strings(killing_form(g)); })
      .def("__repr__", [](const LieAlgebra& g) {
        return "<LieAlgebra dim=" + std::to_string(g.dim()) + ">";
      });

  m.def(
      "check",
      [](const std::string& document, const std::string& structure) {
        AlgebraBundle b = parse_bundle(document);
        if (structure == "hermitian") return report_to_dict(check_hermitian(hermitian_from_bundle(b)));
        if (structure == "lck")
          return report_to_dict(check_lck(hermitian_from_bundle(b)).to_report(b.algebra, false));
        if (structure == "vaisman")
          return report_to_dict(check_lck(hermitian_from_bundle(b)).to_report(b.algebra, true));
        if (structure == "sasaki") return report_to_dict(check_sasaki(sasaki_from_bundle(b)));
        if (structure == "kahler") return report_to_dict(check_kahler_algebra(kahler_from_bundle(b)));
        if (structure == "lie") {
          StructureReport rep;
          rep.add("jacobi", "Jacobi identity holds", jacobi_defect(b.algebra).empty());
          return report_to_dict(rep);
        }
        throw InputError("unknown structure \"" + structure + "\"");
      },
      py::arg("document"), py::arg("structure"),
      "Run a structure report (lie|hermitian|lck|vaisman|sasaki|kahler) on an algebra document.");

  m.def(
      "lee_data",
      [](const std::string& document) {
        AlgebraBundle b = parse_bundle(document);
        LcKReport rep = check_lck(hermitian_from_bundle(b));
        py::dict out;
        out["lck"] = rep.lck();
        out["vaisman"] = rep.vaisman;
        out["positive_definite"] = rep.positive_definite;
        if (rep.lck_identity) {
          out["theta"] = rep.theta.str(b.algebra.basis_names());
          std::vector<std::string> theta_coeffs;
          for (int i = 0; i < b.algebra.dim(); ++i)
            theta_coeffs.push_back(scalar_str(rep.theta.coeff({i})));
          out["theta_coeffs"] = theta_coeffs;
        }
        if (!rep.xi.empty()) {
          out["xi"] = vec_to_strings(rep.xi);
          out["xi_norm"] = scalar_str(rep.xi_norm);
        }
        return out;
      },
      py::arg("document"), "Lee form and Lee field of a Hermitian algebra document.");

  m.def(
      "classify",
      [](const std::string& document) {
        AlgebraBundle b = parse_bundle(document);
        ClassifyResult r = classify_vaisman(hermitian_from_bundle(b));
        py::dict out;
        out["ok"] = r.ok;
        if (r.ok) {
          out["verdict"] = r.verdict.tag();
          out["center_dim_ker_theta"] = r.verdict.center_dim_g0;
        } else {
          out["error"] = r.error_kind;
          out["message"] = r.message;
        }
        return out;
      },
      py::arg("document"), "Classification verdict for a unimodular Vaisman algebra document.");

  m.def(
      "modify",
      [](const std::string& document, const std::string& map_document) {
        AlgebraBundle b = parse_bundle(document);
        ModifiedAlgebra result =
            modify(hermitian_from_bundle(b), modification_map_from_json(map_document, b.algebra.dim()));
        AlgebraBundle out;
        out.name = b.name + " (modified)";
        out.algebra = result.algebra;
        out.metric = result.hermitian.metric;
        out.complex_structure = result.hermitian.J;
        return serialize_bundle(out);
      },
      py::arg("document"), py::arg("map_document"));

  m.def(
      "quantize",
      [](const std::string& document) {
        AlgebraBundle b = parse_bundle(document);
        CentralExtensionData ext = quantize(kahler_from_bundle(b));
        AlgebraBundle out;
        out.name = b.name + " (quantized)";
        out.algebra = ext.total;
        out.forms.emplace("psi", ext.psi);
        out.vectors.emplace("eta", ext.eta);
        return serialize_bundle(out);
      },
      py::arg("document"), "Central extension of a Kahler algebra document by its form omega.");

  m.def(
      "kahler_quotient",
      [](const std::string& document) {
        AlgebraBundle b = parse_bundle(document);
        KahlerAlgebraData k = kahler_quotient(sasaki_from_bundle(b));
        AlgebraBundle out;
        out.name = b.name + " (kahler quotient)";
        out.algebra = k.algebra;
        out.complex_structure = k.J;
        out.forms.emplace("omega", k.omega);
        return serialize_bundle(out);
      },
      py::arg("document"));

  m.def(
      "canonical_vaisman",
      [](const std::string& document, const std::string& b_value) {
        AlgebraBundle b = parse_bundle(document);
        HermitianData h = canonical_vaisman(sasaki_from_bundle(b), parse_scalar(b_value, "b"));
        AlgebraBundle out;
        out.name = b.name + " (canonical vaisman b=" + b_value + ")";
        out.algebra = h.algebra;
        out.metric = h.metric;
        out.complex_structure = h.J;
        return serialize_bundle(out);
      },
      py::arg("document"), py::arg("b") = "0");

  m.def("catalog_list", [] { return catalog_names(); });
  m.def(
      "catalog_show",
      [](const std::string& name, const std::map<std::string, std::string>& params) {
        return serialize_bundle(bundle_from_catalog(catalog_get(name, parse_params(params))));
      },
      py::arg("name"), py::arg("params") = std::map<std::string, std::string>{},
      "Serialize a catalog entry as an algebra-file document.");

  m.attr("__version__") = "0.1.0";
}
