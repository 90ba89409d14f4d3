#include "hbl/io.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "hbl/error.hpp"

namespace hbl {

using nlohmann::json;

namespace {

// Scalars are parsed in the file's field, then mapped into the override.
struct Reader {
  std::string source;
  Field file_field = Field::rationals();
  std::optional<Field> target;

  [[noreturn]] void fail(const std::string& where, const std::string& what) const {
    throw ParseError(source + ": " + where + ": " + what);
  }

  const json& member(const json& obj, const std::string& key, const std::string& where) const {
    if (!obj.is_object() || !obj.contains(key)) fail(where, "missing key \"" + key + "\"");
    return obj.at(key);
  }

  Scalar scalar(const json& v, const std::string& where) const {
    Scalar s;
    try {
      if (v.is_string()) {
        s = Scalar::parse(v.get<std::string>(), file_field);
      } else if (v.is_number_integer()) {
        s = Scalar(v.get<long long>()).in(file_field);
      } else {
        fail(where, "scalar must be a \"p/q\" string");
      }
      return target ? s.in(*target) : s;
    } catch (const ParseError& e) {
      fail(where, e.what());
    } catch (const FieldError& e) {
      fail(where, e.what());
    }
  }

  std::size_t count(const json& v, const std::string& where) const {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      fail(where, "expected a non-negative integer");
    }
    return v.get<std::size_t>();
  }

  // rows × cols matrix given as a list of rows.
  Morphism matrix(const json& v, const Space& dom, const Space& cod, const std::string& where) const {
    if (!v.is_array() || v.size() != cod.dim()) {
      fail(where, "expected " + std::to_string(cod.dim()) + " rows");
    }
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < v.size(); ++r) {
      const json& row = v[r];
      const std::string at = where + "[" + std::to_string(r) + "]";
      if (!row.is_array() || row.size() != dom.dim()) {
        fail(at, "expected " + std::to_string(dom.dim()) + " entries");
      }
      std::vector<Scalar> out;
      for (std::size_t c = 0; c < row.size(); ++c) out.push_back(scalar(row[c], at));
      rows.push_back(std::move(out));
    }
    return Morphism::from_rows(dom, cod, rows);
  }

  std::vector<Scalar> vector(const json& v, std::size_t n, const std::string& where) const {
    if (!v.is_array() || v.size() != n) fail(where, "expected " + std::to_string(n) + " entries");
    std::vector<Scalar> out;
    for (const auto& x : v) out.push_back(scalar(x, where));
    return out;
  }

  Morphism unit(const json& v, const Space& s, const std::string& where) const {
    std::vector<std::vector<Scalar>> rows;
    for (auto& x : vector(v, s.dim(), where)) rows.push_back({x});
    return Morphism::from_rows(Space::unit(), s, rows);
  }

  Morphism counit(const json& v, const Space& s, const std::string& where) const {
    return Morphism::from_rows(s, Space::unit(), {vector(v, s.dim(), where)});
  }

  void read_field(const json& doc) {
    if (!doc.contains("field")) return;
    try {
      file_field = Field::parse(doc.at("field").get<std::string>());
    } catch (const std::exception& e) {
      fail("field", e.what());
    }
  }

  Space space(const json& doc) const {
    const std::size_t n = count(member(doc, "dim", "top level"), "dim");
    if (!doc.contains("basis")) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
      return Space(labels);
    }
    const json& b = doc.at("basis");
    if (!b.is_array() || b.size() != n) fail("basis", "expected " + std::to_string(n) + " labels");
    return Space(b.get<std::vector<std::string>>());
  }
};

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

json unit_json(const Morphism& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.at(r, 0).to_string());
  return out;
}

json counit_json(const Morphism& m) {
  json out = json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.at(0, c).to_string());
  return out;
}

json matrix_json(const Morphism& m) {
  json out = json::array();
  for (const auto& row : m.to_rows()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    out.push_back(std::move(r));
  }
  return out;
}

Field field_of(const Morphism& unit) {
  const auto& col = unit.column(0);
  return col.empty() ? Field::rationals() : col.front().second.field();
}

json header(const Space& s, const Field& f) {
  json doc;
  doc["field"] = f.to_string();
  doc["dim"] = s.dim();
  doc["basis"] = s.basis();
  return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FileKind detect_kind(const std::string& text, const std::string& source) {
  const json doc = parse_json(text, source);
  if (!doc.is_object()) throw ParseError(source + ": top level must be an object");
  if (doc.contains("h1")) return FileKind::Brace;
  if (doc.contains("act1")) return FileKind::Module;
  if (doc.contains("dot")) return FileKind::Skew;
  return FileKind::Structure;
}

StructureData parse_structure(const std::string& text, const std::string& source,
                              const std::optional<Field>& field) {
  const json doc = parse_json(text, source);
  Reader rd{source, Field::rationals(), field};
  rd.read_field(doc);
  StructureData d;
  d.field = field.value_or(rd.file_field);
  d.space = rd.space(doc);
  const Space& s = d.space;
  const Space ss = tensor(s, s);
  if (doc.contains("unit")) d.unit = rd.unit(doc["unit"], s, "unit");
  if (doc.contains("prod")) d.prod = rd.matrix(doc["prod"], ss, s, "prod");
  if (doc.contains("counit")) d.counit = rd.counit(doc["counit"], s, "counit");
  if (doc.contains("coprod")) d.coprod = rd.matrix(doc["coprod"], s, ss, "coprod");
  if (doc.contains("antipode")) d.antipode = rd.matrix(doc["antipode"], s, s, "antipode");
  return d;
}

Algebra as_algebra(const StructureData& d) {
  if (!d.unit || !d.prod) throw ParseError("algebra needs \"unit\" and \"prod\"");
  return Algebra{d.space, *d.unit, *d.prod};
}

Coalgebra as_coalgebra(const StructureData& d) {
  if (!d.counit || !d.coprod) throw ParseError("coalgebra needs \"counit\" and \"coprod\"");
  return Coalgebra{d.space, *d.counit, *d.coprod};
}

HopfAlgebra as_hopf(const StructureData& d) {
  Bialgebra b{as_algebra(d), as_coalgebra(d)};
  if (!d.antipode) return solve_antipode(b);
  return HopfAlgebra{std::move(b), *d.antipode};
}

std::string to_json(const HopfAlgebra& h) {
  json doc = header(h.space(), field_of(h.unit()));
  doc["unit"] = unit_json(h.unit());
  doc["prod"] = matrix_json(h.prod());
  doc["counit"] = counit_json(h.counit());
  doc["coprod"] = matrix_json(h.coprod());
  doc["antipode"] = matrix_json(h.antipode);
  return dump(doc);
}

HopfBrace parse_brace(const std::string& text, const std::string& source,
                      const std::optional<Field>& field) {
  const json doc = parse_json(text, source);
  Reader rd{source, Field::rationals(), field};
  rd.read_field(doc);
  const Space s = rd.space(doc);
  const Space ss = tensor(s, s);
  const json& co = rd.member(doc, "coalgebra", "top level");
  const Coalgebra coalg{s, rd.counit(rd.member(co, "counit", "coalgebra"), s, "coalgebra.counit"),
                        rd.matrix(rd.member(co, "coprod", "coalgebra"), s, ss, "coalgebra.coprod")};
  auto component = [&](const std::string& key) {
    const json& blk = rd.member(doc, key, "top level");
    Algebra alg{s, rd.unit(rd.member(blk, "unit", key), s, key + ".unit"),
                rd.matrix(rd.member(blk, "prod", key), ss, s, key + ".prod")};
    Bialgebra bi{std::move(alg), coalg};
    if (!blk.contains("antipode")) return solve_antipode(bi);
    return HopfAlgebra{std::move(bi), rd.matrix(blk["antipode"], s, s, key + ".antipode")};
  };
  return HopfBrace(component("h1"), component("h2"));
}

std::string to_json(const HopfBrace& b) {
  json doc = header(b.space(), field_of(b.unit()));
  doc["coalgebra"] = {{"counit", counit_json(b.coalgebra().counit)},
                      {"coprod", matrix_json(b.coalgebra().coprod)}};
  for (const auto& [key, h] : {std::pair<std::string, const HopfAlgebra*>{"h1", &b.h1()},
                               std::pair<std::string, const HopfAlgebra*>{"h2", &b.h2()}}) {
    doc[key] = {{"unit", unit_json(h->unit())},
                {"prod", matrix_json(h->prod())},
                {"antipode", matrix_json(h->antipode)}};
  }
  return dump(doc);
}

BraceModule read_module(const std::filesystem::path& path, const std::optional<Field>& field) {
  const std::string source = path.string();
  const json doc = parse_json(read_text(path), source);
  Reader rd{source, Field::rationals(), field};
  rd.read_field(doc);
  const std::string brace_rel = rd.member(doc, "brace", "top level").get<std::string>();
  const std::filesystem::path brace_path = path.parent_path() / brace_rel;
  HopfBrace b = parse_brace(read_text(brace_path), brace_path.string(), field);
  const std::size_t dim = rd.count(rd.member(doc, "carrier", "top level"), "carrier");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("m" + std::to_string(i));
  const Space m(labels);
  const Space hm = tensor(b.space(), m);
  Morphism a1 = rd.matrix(doc["act1"], hm, m, "act1");
  Morphism a2 = rd.matrix(rd.member(doc, "act2", "top level"), hm, m, "act2");
  return BraceModule(m, std::move(a1), std::move(a2), std::move(b));
}

std::string module_to_json(const BraceModule& m, const std::string& brace_path) {
  json doc;
  doc["field"] = field_of(m.over().unit()).to_string();
  doc["carrier"] = m.carrier().dim();
  doc["act1"] = matrix_json(m.act1());
  doc["act2"] = matrix_json(m.act2());
  doc["brace"] = brace_path;
  return dump(doc);
}

SkewBrace parse_skew(const std::string& text, const std::string& source) {
  const json doc = parse_json(text, source);
  Reader rd{source, Field::rationals(), std::nullopt};
  const std::size_t n = rd.count(rd.member(doc, "n", "top level"), "n");
  auto table = [&](const std::string& key) {
    const json& t = rd.member(doc, key, "top level");
    if (!t.is_array() || t.size() != n) rd.fail(key, "expected " + std::to_string(n) + " rows");
    std::vector<std::vector<std::size_t>> rows;
    for (const auto& row : t) {
      if (!row.is_array() || row.size() != n) rd.fail(key, "expected square table");
      std::vector<std::size_t> r;
      for (const auto& x : row) {
        const std::size_t v = rd.count(x, key);
        if (v >= n) rd.fail(key, "entry out of range");
        r.push_back(v);
      }
      rows.push_back(std::move(r));
    }
    try {
      return make_group(rows);
    } catch (const NotAGroup& e) {
      rd.fail(key, e.what());
    }
  };
  return SkewBrace{table("dot"), table("circ")};
}

std::string to_json(const SkewBrace& s) {
  json doc;
  doc["n"] = s.order();
  doc["dot"] = s.dot.rows();
  doc["circ"] = s.circ.rows();
  return dump(doc);
}

std::vector<NamedBrace> read_catalog(const std::filesystem::path& dir, const Field& field) {
  if (!std::filesystem::is_directory(dir)) throw ParseError(dir.string() + ": not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json" && e.path().filename() != "index.json") {
      files.push_back(e.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<NamedBrace> out;
  for (const auto& f : files) {
    const std::string text = read_text(f);
    const std::string name = f.stem().string();
    switch (detect_kind(text, f.string())) {
      case FileKind::Brace:
        out.push_back({name, parse_brace(text, f.string(), field)});
        break;
      case FileKind::Skew:
        out.push_back({name, linearize(parse_skew(text, f.string()), field)});
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace hbl
