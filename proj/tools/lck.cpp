#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "lck/io.hpp"

namespace fs = std::filesystem;
using lck::AlgebraBundle;
using lck::InputError;
using lck::ValidationError;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open \"" + path + "\"");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Output {
  std::string format = "text";  // text | json
  std::string out_path;

  void emit(const std::string& text, const nlohmann::json& as_json) const {
    std::string body = format == "json" ? as_json.dump(2) + "\n" : text;
    if (out_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(out_path);
      if (!out) throw InputError("cannot write \"" + out_path + "\"");
      out << body;
    }
  }
  void emit_document(const std::string& serialized) const {
    if (out_path.empty()) {
      std::cout << serialized;
    } else {
      std::ofstream out(out_path);
      if (!out) throw InputError("cannot write \"" + out_path + "\"");
      out << serialized;
    }
  }
};

lck::StructureReport lie_report(const lck::LieAlgebra& g) {
  lck::StructureReport rep;
  auto defects = lck::jacobi_defect(g);
  std::string w;
  if (!defects.empty()) {
    const auto& d = defects.front();
    w = "(" + g.basis_names()[d.i] + "," + g.basis_names()[d.j] + "," + g.basis_names()[d.k] +
        "): cyclic sum " + lck::vec_str(d.defect);
  }
  rep.add("jacobi", "Jacobi identity holds on all basis triples", defects.empty(), w);
  rep.add_info("unimodular", "trace(ad X) = 0 for every basis vector", lck::is_unimodular(g));
  rep.add_info("center", "center dimension = " + std::to_string(lck::center(g).dim()), true);
  return rep;
}

lck::StructureReport structure_report(const AlgebraBundle& b, const std::string& structure) {
  if (structure == "lie") return lie_report(b.algebra);
  if (structure == "hermitian") return lck::check_hermitian(lck::hermitian_from_bundle(b));
  if (structure == "lck")
    return lck::check_lck(lck::hermitian_from_bundle(b)).to_report(b.algebra, false);
  if (structure == "vaisman")
    return lck::check_lck(lck::hermitian_from_bundle(b)).to_report(b.algebra, true);
  if (structure == "sasaki") return lck::check_sasaki(lck::sasaki_from_bundle(b));
  if (structure == "kahler") return lck::check_kahler_algebra(lck::kahler_from_bundle(b));
  throw InputError("unknown structure \"" + structure +
                   "\" (expected lie|hermitian|lck|vaisman|sasaki|kahler)");
}

int run_check(const std::string& path, const std::string& structure, const Output& out) {
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw InputError("directory contains no .json files");
  } else {
    files.emplace_back(path);
  }
  bool all_pass = true;
  std::string text;
  nlohmann::json results = nlohmann::json::array();
  for (const auto& file : files) {
    AlgebraBundle b = lck::parse_bundle(read_file(file.string()));
    lck::StructureReport rep;
    try {
      rep = structure_report(b, structure);
    } catch (const ValidationError& e) {
      rep.add("structure", "structure data is coherent", false, e.what());
    }
    all_pass = all_pass && rep.all_pass();
    if (files.size() > 1) text += "== " + file.string() + " ==\n";
    text += report_to_text(rep);
    nlohmann::json one = report_to_json(rep);
    one["file"] = file.string();
    one["structure"] = structure;
    results.push_back(std::move(one));
  }
  out.emit(text, files.size() == 1 ? results[0] : nlohmann::json{{"results", results}});
  return all_pass ? kExitPass : kExitMathFailure;
}

int run_classify(const std::string& path, const Output& out) {
  AlgebraBundle b = lck::parse_bundle(read_file(path));
  lck::ClassifyResult r = lck::classify_vaisman(lck::hermitian_from_bundle(b));
  nlohmann::json j;
  if (r.ok) {
    j["verdict"] = r.verdict.tag();
    j["center_dim_ker_theta"] = r.verdict.center_dim_g0;
    j["killing_signature"] = r.verdict.killing_sig;
    out.emit(r.verdict.tag() + "\n", j);
    return kExitPass;
  }
  j["error"] = r.error_kind;
  j["message"] = r.message;
  out.emit(r.error_kind + ": " + r.message + "\n", j);
  return kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for locally conformally Kahler, Vaisman and Sasaki Lie algebras"};
  app.require_subcommand(1);
  Output out;
  auto add_output_options = [&out](CLI::App* cmd) {
    cmd->add_option("--format", out.format, "output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", out.out_path, "write output to a file instead of stdout");
  };

  std::string file, structure = "lie", map_file, b_value = "0", name;
  std::vector<std::string> param_args;

  auto* check = app.add_subcommand("check", "run a structure report on an algebra file (or directory)");
  check->add_option("file", file, "algebra file or directory")->required();
  check->add_option("--structure", structure, "lie|hermitian|lck|vaisman|sasaki|kahler");
  add_output_options(check);

  auto* classify = app.add_subcommand("classify", "classify a unimodular Vaisman algebra");
  classify->add_option("file", file)->required();
  add_output_options(classify);

  auto* modify = app.add_subcommand("modify", "apply a modification map to a Hermitian algebra");
  modify->add_option("file", file)->required();
  modify->add_option("--map", map_file, "modification map file")->required();
  add_output_options(modify);

  auto* quantize = app.add_subcommand("quantize", "central extension of a Kahler algebra");
  quantize->add_option("file", file)->required();
  add_output_options(quantize);

  auto* quotient = app.add_subcommand("quotient", "Kahler quotient of a Sasaki algebra");
  quotient->add_option("file", file)->required();
  add_output_options(quotient);

  auto* canonical = app.add_subcommand("canonical-vaisman", "canonical Vaisman structure over a Sasaki algebra");
  canonical->add_option("file", file)->required();
  canonical->add_option("--b", b_value, "parameter of the complex-structure family (rational)");
  add_output_options(canonical);

  auto* catalog = app.add_subcommand("catalog", "built-in algebras");
  auto* cat_list = catalog->add_subcommand("list", "list catalog entries");
  add_output_options(cat_list);
  auto* cat_show = catalog->add_subcommand("show", "print a catalog entry as an algebra file");
  cat_show->add_option("name", name)->required();
  cat_show->add_option("--param", param_args, "entry parameter k=v (repeatable)");
  add_output_options(cat_show);
  catalog->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (check->parsed()) return run_check(file, structure, out);
    if (classify->parsed()) return run_classify(file, out);
    if (modify->parsed()) {
      AlgebraBundle b = lck::parse_bundle(read_file(file));
      lck::HermitianData h = hermitian_from_bundle(b);
      lck::ModificationMap m = lck::modification_map_from_json(read_file(map_file), b.algebra.dim());
      lck::ModifiedAlgebra result = lck::modify(h, m);
      AlgebraBundle outb;
      outb.name = b.name.empty() ? "modified" : b.name + " (modified)";
      outb.algebra = result.algebra;
      outb.metric = result.hermitian.metric;
      outb.complex_structure = result.hermitian.J;
      out.emit_document(serialize_bundle(outb));
      return kExitPass;
    }
    if (quantize->parsed()) {
      AlgebraBundle b = lck::parse_bundle(read_file(file));
      lck::CentralExtensionData ext = lck::quantize(lck::kahler_from_bundle(b));
      AlgebraBundle outb;
      outb.name = b.name.empty() ? "quantized" : b.name + " (quantized)";
      outb.algebra = ext.total;
      outb.forms.emplace("psi", ext.psi);
      outb.vectors.emplace("eta", ext.eta);
      out.emit_document(serialize_bundle(outb));
      return kExitPass;
    }
    if (quotient->parsed()) {
      AlgebraBundle b = lck::parse_bundle(read_file(file));
      lck::KahlerAlgebraData k = lck::kahler_quotient(lck::sasaki_from_bundle(b));
      AlgebraBundle outb;
      outb.name = b.name.empty() ? "kahler quotient" : b.name + " (kahler quotient)";
      outb.algebra = k.algebra;
      outb.complex_structure = k.J;
      outb.forms.emplace("omega", k.omega);
      if (k.h.dim() > 0) outb.subalgebra = k.h;
      out.emit_document(serialize_bundle(outb));
      return kExitPass;
    }
    if (canonical->parsed()) {
      AlgebraBundle b = lck::parse_bundle(read_file(file));
      lck::HermitianData h = lck::canonical_vaisman(lck::sasaki_from_bundle(b),
                                                    lck::parse_scalar(b_value, "--b"));
      AlgebraBundle outb;
      outb.name = (b.name.empty() ? "sasaki" : b.name) + " (canonical vaisman b=" + b_value + ")";
      outb.algebra = h.algebra;
      outb.metric = h.metric;
      outb.complex_structure = h.J;
      out.emit_document(serialize_bundle(outb));
      return kExitPass;
    }
    if (cat_list->parsed()) {
      std::string text;
      nlohmann::json names = nlohmann::json::array();
      for (const auto& n : lck::catalog_names()) {
        text += n + "\n";
        names.push_back(n);
      }
      out.emit(text, names);
      return kExitPass;
    }
    if (cat_show->parsed()) {
      std::map<std::string, lck::Scalar> params;
      for (const auto& p : param_args) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw InputError("--param expects k=v, got \"" + p + "\"");
        params[p.substr(0, eq)] = lck::parse_scalar(p.substr(eq + 1), "--param " + p);
      }
      lck::CatalogEntry entry = lck::catalog_get(name, params);
      out.emit_document(serialize_bundle(bundle_from_catalog(entry)));
      return kExitPass;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
