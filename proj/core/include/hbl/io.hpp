#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hbl/brace_module.hpp"
#include "hbl/catalog.hpp"

namespace hbl {

/// Maps are stored as lists of rows of "p/q" strings; "unit" and "counit"
/// are flat vectors. Every map in a structure file is optional so that an
/// algebra-only or coalgebra-only file still parses.
struct StructureData {
  Field field = Field::rationals();
  Space space;
  std::optional<Morphism> unit, prod, counit, coprod, antipode;
};

enum class FileKind { Structure, Brace, Module, Skew };

/// Each parser takes the text and a source name used in ParseError messages.
/// A non-empty `field` maps every scalar into that field after parsing.
FileKind detect_kind(const std::string& text, const std::string& source);
std::string read_text(const std::filesystem::path& path);

StructureData parse_structure(const std::string& text, const std::string& source,
                              const std::optional<Field>& field = std::nullopt);
/// Throw ParseError naming the missing maps.
Algebra as_algebra(const StructureData& d);
Coalgebra as_coalgebra(const StructureData& d);
/// Solves for the antipode when the file has none.
HopfAlgebra as_hopf(const StructureData& d);
std::string to_json(const HopfAlgebra& h);

/// Brace file: {"field", "dim", "basis", "coalgebra": {"counit", "coprod"},
/// "h1": {"unit", "prod", "antipode"}, "h2": {...}}.
HopfBrace parse_brace(const std::string& text, const std::string& source,
                      const std::optional<Field>& field = std::nullopt);
std::string to_json(const HopfBrace& b);

/// Module file: {"carrier": dim, "act1", "act2", "brace": path}, with the
/// brace path resolved against the module file's directory.
BraceModule read_module(const std::filesystem::path& path,
                        const std::optional<Field>& field = std::nullopt);
std::string module_to_json(const BraceModule& m, const std::string& brace_path);

/// Skew brace file: {"n", "dot": [[…]], "circ": [[…]]}.
SkewBrace parse_skew(const std::string& text, const std::string& source);
std::string to_json(const SkewBrace& s);

/// Every brace and skew brace file in `dir` in filename order, skipping
/// index.json and module files. Skew braces are linearized over `field`.
std::vector<NamedBrace> read_catalog(const std::filesystem::path& dir, const Field& field);

}  // namespace hbl
