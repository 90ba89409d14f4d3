#pragma once

#include <string>
#include <vector>

#include "hbl/hopfbrace.hpp"

namespace hbl {

/// Γ_M = φ¹∘(λ¹⊗φ²)∘(δ⊗M).
Morphism compute_gamma_M(const HopfBrace& b, const Morphism& act1, const Morphism& act2,
                         const Space& carrier);

/// (M, φ¹, φ²) over a Hopf brace, with Γ_M cached.
class BraceModule {
 public:
  /// Throws ShapeMismatch unless both actions are H⊗M → M.
  BraceModule(Space carrier, Morphism act1, Morphism act2, HopfBrace over);

  const Space& carrier() const { return carrier_; }
  const Morphism& act1() const { return act1_; }
  const Morphism& act2() const { return act2_; }
  const HopfBrace& over() const { return over_; }
  const Morphism& gamma_M() const { return gamma_m_; }

 private:
  Space carrier_;
  Morphism act1_;
  Morphism act2_;
  HopfBrace over_;
  Morphism gamma_m_;
};

/// (M, φ, ϕ): φ an H₁-action, ϕ an H₂-action, φ H₂-linear (linearphi).
struct AcObject {
  Space carrier;
  Morphism act;
  Morphism phi;
  HopfBrace over;
};

/// Component module laws ("m1." / "m2."), compatmodH, compatmodHprime and
/// their agreement, varphi2expression, and the H₂-module laws of Γ_M ("gammaM.").
LawReport check_brace_module(const BraceModule& m);

LawReport check_ac_object(const AcObject& a);

struct ZhuResult {
  bool compat = false;      ///< compatmodH
  bool zhu = false;         ///< realZhu
  bool cond_only = false;   ///< condModZhu
  bool cc_gamma_M = false;  ///< (M, Γ_M) in the cocommutativity class of H₂
  /// realZhu ⇔ compatmodH ∧ condModZhu, and realZhu ⇔ cc-class of Γ_M.
  bool contract_holds() const { return zhu == (compat && cond_only) && zhu == cc_gamma_M; }
};

/// Throws PreconditionFailed unless m passes check_brace_module.
ZhuResult check_zhu(const BraceModule& m);

/// Both sides of realZhu and condModZhu, exposed for reports.
LawReport zhu_laws(const BraceModule& m);

/// (M, φ¹∘(H⊗φ²)) over H₁♯H₂.
ModuleStr functor_F(const BraceModule& m);
/// φ¹ = φ∘(H⊗η⊗M), φ² = φ∘(η⊗H⊗M). Throws PreconditionFailed unless s is an H₁♯H₂-module.
BraceModule functor_G(const ModuleStr& s, const HopfBrace& b);

/// (M, φ, φ∘(H⊗ϕ)∘(δ⊗M)).
BraceModule functor_U(const AcObject& a);
/// (M, φ¹, Γ_M).
AcObject functor_V(const BraceModule& m);

/// (K, ε, ε).
BraceModule unit_module(const HopfBrace& b);

/// Diagonal actions on M⊗N. Throws NotInCCClass unless Γ_M and Γ_N are in the
/// cocommutativity class of H₂.
BraceModule tensor_module(const BraceModule& m, const BraceModule& n);

/// Gammamodtensor for m⊗n, plus the cocommutativity class of Γ_{M⊗N} ("ccclassGammaM").
LawReport check_tensor_module(const BraceModule& m, const BraceModule& n, const BraceModule& mn);

/// S∘F with A = H₁ (action Γ′) and H = H₂; the base is (H₁, ρ̂) over H₂*.
DoiHopfModule doi_hopf_of_brace_module(const BraceModule& m);
/// G∘R.
BraceModule brace_module_of_doi_hopf(const DoiHopfModule& d, const HopfBrace& b);

struct NamedModule {
  std::string name;
  BraceModule module;
};

constexpr std::size_t kMaxModuleDim = 16;

/// Regular, trivial, modules induced from H₂-modules (M, ε⊗M, ϕ), and pullbacks
/// through G of the regular H₁♯H₂-module, all of carrier dimension ≤ max_dim.
std::vector<NamedModule> standard_modules(const HopfBrace& b, std::size_t max_dim = kMaxModuleDim);

/// H₂-modules used for induction: regular, trivial, adjoint, Γ, Γ′, and for a
/// group-like basis the permutation modules on cosets of cyclic subgroups.
std::vector<std::pair<std::string, ModuleStr>> h2_modules(const HopfBrace& b, std::size_t max_dim);

}  // namespace hbl
