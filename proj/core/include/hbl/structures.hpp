#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hbl/morphism.hpp"

namespace hbl {

/// Where two sides of a failed law first disagree.
struct Mismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string lhs;
  std::string rhs;
};

struct LawResult {
  std::string law;
  bool passed = false;
  std::optional<Mismatch> mismatch;
};

/// Pass/fail per named law. Law names are stable keys (see README).
class LawReport {
 public:
  LawReport() = default;
  explicit LawReport(std::string subject) : subject_(std::move(subject)) {}

  void add(LawResult r) { results_.push_back(std::move(r)); }
  void append(const LawReport& other);

  const std::string& subject() const { return subject_; }
  const std::vector<LawResult>& results() const { return results_; }
  bool ok() const;
  /// Result for `law`; throws std::out_of_range when the law was not checked.
  const LawResult& at(const std::string& law) const;
  bool passed(const std::string& law) const { return at(law).passed; }
  bool contains(const std::string& law) const;
  std::vector<std::string> failed_laws() const;
  std::string summary() const;

 private:
  std::string subject_;
  std::vector<LawResult> results_;
};

/// Exact comparison of two sides of an equation.
LawResult check_law(std::string law, const Morphism& lhs, const Morphism& rhs);
LawResult check_flag(std::string law, bool holds);

/// Throws ShapeMismatch unless f: dom → cod dimension-wise.
void require_shape(const Morphism& f, const Space& dom, const Space& cod, const std::string& what);

struct Algebra {
  Space space;
  Morphism unit;  ///< K → A
  Morphism prod;  ///< A⊗A → A
};

struct Coalgebra {
  Space space;
  Morphism counit;  ///< C → K
  Morphism coprod;  ///< C → C⊗C
};

/// Left module (M, φ_M) over an algebra.
struct ModuleStr {
  Space carrier;
  Morphism action;  ///< A⊗M → M
  Algebra over;
};

/// Right comodule (M, ρ_M) over a coalgebra.
struct ComoduleStr {
  Space carrier;
  Morphism coaction;  ///< M → M⊗C
  Coalgebra over;
};

LawReport check_algebra(const Algebra& a);
LawReport check_coalgebra(const Coalgebra& c);
LawReport check_module(const ModuleStr& m);
LawReport check_comodule(const ComoduleStr& m);

/// f ∗ g = μ_A ∘ (f⊗g) ∘ δ_C for f, g: C → A.
Morphism convolution(const Morphism& f, const Morphism& g, const Coalgebra& c, const Algebra& a);
/// η_A ∘ ε_C, the unit of the convolution monoid.
Morphism convolution_unit(const Coalgebra& c, const Algebra& a);

/// f ∘ φ_M = φ_N ∘ (A⊗f).
bool is_module_morphism(const Morphism& f, const ModuleStr& m, const ModuleStr& n);
/// ρ_N ∘ f = (f⊗C) ∘ ρ_M.
bool is_comodule_morphism(const Morphism& f, const ComoduleStr& m, const ComoduleStr& n);

LawReport check_algebra_morphism(const Morphism& f, const Algebra& a, const Algebra& b);
LawReport check_coalgebra_morphism(const Morphism& f, const Coalgebra& c, const Coalgebra& d);

/// μ_{A⊗B} = (μ_A⊗μ_B) ∘ (A⊗c_{B,A}⊗B), η_{A⊗B} = η_A⊗η_B.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);
/// δ_{C⊗D} = (C⊗c_{C,D}⊗D) ∘ (δ_C⊗δ_D), ε_{C⊗D} = ε_C⊗ε_D.
Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d);

bool is_commutative(const Algebra& a);
bool is_cocommutative(const Coalgebra& c);

/// The trivial coalgebra on K (and the trivial algebra) used as a monoidal unit.
Algebra unit_algebra();
Coalgebra unit_coalgebra();

}  // namespace hbl
