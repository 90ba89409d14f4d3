#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "hbl/catalog.hpp"
#include "hbl/error.hpp"
#include "hbl/io.hpp"

using namespace hbl;

namespace {

const std::filesystem::path kData = HBL_DATA_DIR;

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("hbl_io_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void write_file(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string parse_error_message(const std::string& text) {
  try {
    parse_structure(text, "mem.json");
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Io, HopfRoundTrip) {
  for (const auto& [name, h] : hopf_catalog(8)) {
    const std::string text = to_json(h);
    EXPECT_EQ(detect_kind(text, name), FileKind::Structure);
    const HopfAlgebra back = as_hopf(parse_structure(text, name));
    EXPECT_EQ(back.prod(), h.prod()) << name;
    EXPECT_EQ(back.coprod(), h.coprod()) << name;
    EXPECT_EQ(back.antipode, h.antipode) << name;
    EXPECT_EQ(back.space().basis(), h.space().basis()) << name;
    EXPECT_EQ(to_json(back), text);
  }
}

TEST(Io, AntipodeIsSolvedWhenAbsent) {
  StructureData d = parse_structure(read_text(kData / "h4.json"), "h4.json");
  const Morphism s = *d.antipode;
  d.antipode.reset();
  EXPECT_EQ(as_hopf(d).antipode, s);
}

TEST(Io, FieldOverride) {
  const std::string text = read_text(kData / "h4.json");
  const StructureData d = parse_structure(text, "h4.json", Field::prime(3));
  EXPECT_EQ(d.field, Field::prime(3));
  EXPECT_TRUE(check_hopf(as_hopf(d)).ok());
}

TEST(Io, ParseErrorsCarryContext) {
  EXPECT_NE(parse_error_message("{").find("mem.json"), std::string::npos);
  EXPECT_NE(parse_error_message("[]").find("top level"), std::string::npos);
  const std::string bad_entry = R"({"field":"q","dim":1,"unit":["x"]})";
  EXPECT_NE(parse_error_message(bad_entry).find("unit"), std::string::npos);
  const std::string bad_shape = R"({"field":"q","dim":2,"unit":["1"]})";
  EXPECT_NE(parse_error_message(bad_shape).find("unit"), std::string::npos);
  EXPECT_THROW(as_algebra(parse_structure(R"({"field":"q","dim":1})", "m")), ParseError);
  EXPECT_THROW(read_text("/nonexistent/file.json"), ParseError);
}

TEST(Io, BraceRoundTrip) {
  for (const auto& [name, b] : brace_catalog(4)) {
    const std::string text = to_json(b);
    EXPECT_EQ(detect_kind(text, name), FileKind::Brace);
    const HopfBrace back = parse_brace(text, name);
    EXPECT_EQ(back.h1().prod(), b.h1().prod()) << name;
    EXPECT_EQ(back.h2().prod(), b.h2().prod()) << name;
    EXPECT_EQ(back.gamma(), b.gamma()) << name;
  }
}

TEST(Io, SkewRoundTrip) {
  for (const auto& s : enumerate_skew_braces(4)) {
    const std::string text = to_json(s);
    EXPECT_EQ(detect_kind(text, "s"), FileKind::Skew);
    EXPECT_EQ(parse_skew(text, "s"), s);
  }
  EXPECT_THROW(parse_skew(R"({"n":2,"dot":[[0,1],[1,1]],"circ":[[0,1],[1,0]]})", "s"), ParseError);
}

TEST(Io, ModuleFiles) {
  const BraceModule m = read_module(kData / "h4_op_regular.json");
  EXPECT_EQ(m.carrier().dim(), 4u);
  EXPECT_TRUE(check_brace_module(m).ok());
  EXPECT_FALSE(check_zhu(m).zhu);

  const auto dir = scratch_dir("module");
  write_file(dir / "brace.json", to_json(m.over()));
  write_file(dir / "m.json", module_to_json(m, "brace.json"));
  EXPECT_EQ(detect_kind(read_text(dir / "m.json"), "m"), FileKind::Module);
  const BraceModule back = read_module(dir / "m.json");
  EXPECT_EQ(back.act1(), m.act1());
  EXPECT_EQ(back.act2(), m.act2());
  std::filesystem::remove_all(dir);
}

TEST(Io, ReadCatalogSortsAndLinearizes) {
  const auto dir = scratch_dir("catalog");
  const auto skews = enumerate_skew_braces(4);
  for (std::size_t i = 0; i < skews.size(); ++i) {
    write_file(dir / ("skew4-" + std::to_string(i + 1) + ".json"), to_json(skews[i]));
  }
  write_file(dir / "index.json", "[]");
  write_file(dir / "a_op.json", read_text(kData / "h4_op_brace.json"));
  const auto cat = read_catalog(dir, Field::rationals());
  ASSERT_EQ(cat.size(), skews.size() + 1);
  EXPECT_EQ(cat.front().name, "a_op");
  EXPECT_EQ(cat[1].name, "skew4-1");
  EXPECT_EQ(cat[1].brace.h1().prod(), linearize(skews[0]).h1().prod());
  std::filesystem::remove_all(dir);
  EXPECT_THROW(read_catalog(dir, Field::rationals()), ParseError);
}
