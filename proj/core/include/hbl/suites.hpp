#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hbl/io.hpp"

namespace hbl {

struct SuiteFailure {
  std::string instance;
  std::string law;
  std::optional<std::pair<std::size_t, std::size_t>> entry;
};

struct SuiteSkip {
  std::string instance;
  std::string reason;
};

/// Outcome of one suite run. Invariant: passed + failed instances + skipped = instances.
struct RunReport {
  RunReport() = default;
  explicit RunReport(std::string name) : suite(std::move(name)) {}

  std::string suite;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::vector<SuiteFailure> failed;
  std::vector<SuiteSkip> skipped;
  /// Search outcomes and counts that are reported but never fail the run.
  std::vector<std::string> notes;
  double wall_time = 0;

  bool ok() const { return failed.empty(); }
  std::size_t failed_instances() const;
  bool consistent() const { return passed + failed_instances() + skipped.size() == instances; }

  /// One instance; passes iff every law in `rep` passed.
  void record(const std::string& instance, const LawReport& rep);
  void record(const std::string& instance, const std::string& law, bool holds);
  void skip(const std::string& instance, const std::string& reason);
  void merge(const RunReport& other);

  /// Deterministic JSON; wall time is left out so reruns are byte-identical.
  std::string to_json() const;
  std::string to_text() const;
};

/// Criterion-style suites. Each returns a report whose instances are named
/// "<brace>/<module>" or "<structure>".
RunReport suite_hopf_groups(const Field& field = Field::rationals());
RunReport suite_duals(const std::vector<NamedHopf>& hopfs);
RunReport suite_braces(const std::vector<NamedBrace>& braces);
RunReport suite_semidirect(std::size_t max_order, const Field& field = Field::rationals());

RunReport suite_mainth(const std::vector<NamedBrace>& braces);
RunReport suite_firstM(const std::vector<NamedBrace>& braces);
/// Catalog pairs, every relabeling of H₂ by a basis permutation fixing the unit
/// and the coalgebra, and `raw_mutations` single-entry mutations of μ². The same
/// number of μ¹ mutations is reported in the notes only.
RunReport suite_equiv2(const std::vector<NamedBrace>& braces, std::size_t raw_mutations = 60,
                       std::uint64_t seed = 2024);
constexpr std::size_t kMaxDoiHopfDim = 256;
RunReport suite_smashcat(const std::vector<NamedBrace>& braces, std::size_t max_total = kMaxDoiHopfDim);
RunReport suite_modcc(const std::vector<NamedBrace>& braces);
RunReport suite_ucat(const std::vector<NamedBrace>& braces);
RunReport suite_adjointcc(const std::vector<NamedHopf>& hopfs);
/// `count` single-entry mutations spread over `hopfs` and `braces`; an instance
/// passes iff the mutation is detected or a full recheck proves the result valid.
RunReport suite_mutations(const std::vector<NamedHopf>& hopfs, const std::vector<NamedBrace>& braces,
                          std::size_t count = 100, std::uint64_t seed = 7);

/// Names accepted by run_theorem.
const std::vector<std::string>& theorem_names();
/// Throws PreconditionFailed for unknown names.
RunReport run_theorem(const std::string& name, const std::vector<NamedBrace>& braces);

/// `f` with entry (row, col) replaced by value + delta.
Morphism mutate_entry(const Morphism& f, std::size_t row, std::size_t col, const Scalar& delta);

}  // namespace hbl
