// hbl: check structure files, enumerate skew braces, run theorem suites.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "hbl/error.hpp"
#include "hbl/suites.hpp"

namespace fs = std::filesystem;
using namespace hbl;

namespace {

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError(path.string() + ": cannot write file");
  out << text;
}

int finish(const RunReport& r, const std::string& report_path) {
  std::cout << r.to_text();
  std::cerr << "wall time: " << r.wall_time << " s\n";
  if (!report_path.empty()) write_file(report_path, r.to_json());
  return r.ok() ? 0 : 1;
}

void append_prefixed(LawReport& rep, const LawReport& part, const std::string& prefix) {
  for (LawResult r : part.results()) {
    r.law = prefix + r.law;
    rep.add(std::move(r));
  }
}

LawReport check_file(const fs::path& path, const std::string& laws, const std::optional<Field>& field) {
  const std::string text = read_text(path);
  const std::string source = path.string();
  const FileKind kind = detect_kind(text, source);
  auto need = [&](FileKind k, const char* what) {
    if (kind != k) throw ParseError(source + ": --laws " + laws + " needs a " + what + " file");
  };
  if (laws == "algebra" || laws == "coalgebra" || laws == "hopf") {
    need(FileKind::Structure, "structure");
    const StructureData d = parse_structure(text, source, field);
    if (laws == "algebra") return check_algebra(as_algebra(d));
    if (laws == "coalgebra") return check_coalgebra(as_coalgebra(d));
    return check_hopf(as_hopf(d));
  }
  if (laws == "brace") {
    need(FileKind::Brace, "brace");
    const HopfBrace b = parse_brace(text, source, field);
    LawReport rep = check_hopf_brace(b);
    rep.append(reconstruct_mu2(b));
    rep.append(check_gamma_module_algebras(b));
    return rep;
  }
  need(FileKind::Module, "module");
  const BraceModule m = read_module(path, field);
  LawReport rep = check_brace_module(m);
  if (laws == "zhu" && rep.ok()) append_prefixed(rep, zhu_laws(m), "");
  return rep;
}

std::vector<NamedBrace> load_catalog(const std::string& catalog, std::size_t order, const Field& field) {
  if (catalog == "builtin") return brace_catalog(order, field);
  return read_catalog(catalog, field);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for Hopf algebras, Hopf braces and their modules"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string field_text;
  app.add_option("--field", field_text, "Ground field: q or gf:<p>");

  std::string path, laws = "hopf", report_path, catalog = "builtin", theorem, out;
  std::size_t order = 4;

  auto* check = app.add_subcommand("check", "Run a law checker on a JSON file");
  check->add_option("file", path)->required()->check(CLI::ExistingFile);
  check->add_option("--laws", laws)
      ->check(CLI::IsMember({"algebra", "coalgebra", "hopf", "brace", "module", "zhu"}));
  check->add_option("--report", report_path, "Write the JSON report here");

  auto* enumerate = app.add_subcommand("enumerate-braces", "Write skew braces of one order");
  enumerate->add_option("--order", order)->required();
  enumerate->add_option("--out", out)->required();
  enumerate->add_option("--report", report_path);

  auto* verify = app.add_subcommand("verify", "Run a theorem suite over a brace catalog");
  verify->add_option("--theorem", theorem)->required()->check(CLI::IsMember(theorem_names()));
  verify->add_option("--catalog", catalog, "Directory of brace files, or 'builtin'");
  verify->add_option("--order", order, "Largest skew brace order in the builtin catalog");
  verify->add_option("--report", report_path);

  auto* dualize = app.add_subcommand("dualize", "Emit the dual Hopf algebra");
  dualize->add_option("file", path)->required()->check(CLI::ExistingFile);
  dualize->add_option("--out", out, "Output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<Field> field;
    if (!field_text.empty()) field = Field::parse(field_text);

    if (*check) {
      RunReport r("check:" + laws);
      r.record(path, check_file(path, laws, field));
      return finish(r, report_path);
    }
    if (*enumerate) {
      RunReport r("enumerate-braces");
      const auto braces = enumerate_skew_braces(order);
      fs::create_directories(out);
      std::string index = "{\n  \"order\": " + std::to_string(order) + ",\n  \"files\": [";
      for (std::size_t k = 0; k < braces.size(); ++k) {
        const std::string name = "skew" + std::to_string(order) + "-" + std::to_string(k) + ".json";
        write_file(fs::path(out) / name, to_json(braces[k]));
        r.record(name, "skew-brace", check_skew_brace(braces[k]));
        index += std::string(k == 0 ? "\n" : ",\n") + "    \"" + name + "\"";
      }
      index += braces.empty() ? "]\n}\n" : "\n  ]\n}\n";
      write_file(fs::path(out) / "index.json", index);
      return finish(r, report_path);
    }
    if (*verify) {
      const auto braces = load_catalog(catalog, order, field.value_or(Field::rationals()));
      return finish(run_theorem(theorem, braces), report_path);
    }
    if (*dualize) {
      const std::string text = read_text(path);
      const HopfAlgebra d = dual_hopf(as_hopf(parse_structure(text, path, field)));
      if (out.empty()) {
        std::cout << to_json(d);
      } else {
        write_file(out, to_json(d));
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
