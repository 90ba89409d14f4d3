#pragma once

#include "hbl/hopf.hpp"

namespace hbl {

/// An algebra A with a left H-action φ_A: H⊗A → A.
struct ModuleAlgebra {
  Algebra algebra;
  Morphism action;
  HopfAlgebra over;
};

/// A coalgebra C with a left H-action φ_C: H⊗C → C.
struct ModuleCoalgebra {
  Coalgebra coalgebra;
  Morphism action;
  HopfAlgebra over;
};

/// An algebra A with a right H-coaction ρ_A: A → A⊗H.
struct ComoduleAlgebra {
  Algebra algebra;
  Morphism coaction;
  HopfAlgebra over;
};

/// A Hopf algebra A with a left H-action, the input of the smash Hopf algebra.
struct ModuleHopf {
  HopfAlgebra hopf;
  Morphism action;
  HopfAlgebra over;
};

/// Left-right (A,H)-Doi-Hopf module (M, φ_M, ρ_M) over a right H-comodule algebra.
struct DoiHopfModule {
  Space carrier;
  Morphism action;    ///< A⊗M → M
  Morphism coaction;  ///< M → M⊗H
  ComoduleAlgebra base;
};

/// φ_{A⊗A} = (φ⊗φ)∘(H⊗c_{H,A}⊗A)∘(δ⊗A⊗A).
Morphism diagonal_action(const Morphism& phi_a, const Morphism& phi_b, const Space& a,
                         const Space& b, const HopfAlgebra& h);

/// Module laws plus Hmodalg1, Hmodalg2.
LawReport check_module_algebra(const ModuleAlgebra& a);
/// Module laws plus Hmodcoalg1, Hmodcoalg2, and agreement with "φ_C is a coalgebra morphism".
LawReport check_module_coalgebra(const ModuleCoalgebra& c);
/// Comodule laws plus Hcomodalg1, Hcomodalg2, and agreement with "ρ_A is an algebra morphism".
LawReport check_comodule_algebra(const ComoduleAlgebra& a);

/// Ψ = (φ_A⊗H)∘(H⊗c_{H,A})∘(δ⊗A): H⊗A → A⊗H.
Morphism smash_psi(const Morphism& action, const Space& a, const HopfAlgebra& h);

/// A♯H. Throws PreconditionFailed unless the module-algebra laws hold.
Algebra smash_algebra(const ModuleAlgebra& a);
/// A♯H without validating the input.
Algebra smash_algebra_unchecked(const ModuleAlgebra& a);

/// A♯H with the tensor coalgebra and λ = Ψ∘(λ_H⊗λ_A)∘c_{A,H}. Throws
/// PreconditionFailed unless (A, φ) is a module algebra and a module coalgebra,
/// and NotInCCClass when the cocommutativity-class condition fails.
HopfAlgebra smash_hopf(const ModuleHopf& a);

/// Module law over A, comodule law over H, and lrHopfmod.
/// Throws PreconditionFailed when the base is not a comodule algebra.
LawReport doi_hopf_check(const DoiHopfModule& m);

/// (A, ρ̂_A) over H*, where H* = dual_hopf(a.over).
ComoduleAlgebra dual_comodule_algebra(const ModuleAlgebra& a);
/// φ̃_A: H⊗A → A from a right H*-comodule algebra; `h` is the Hopf algebra whose dual is a.over.
Morphism action_from_dual_coaction(const ComoduleAlgebra& a, const HopfAlgebra& h);

/// A♯H-module (M, ψ) ↦ (M, φ*, ρ*) in A-Mod^{H*}. Throws PreconditionFailed
/// unless `m` is a module over smash_algebra(a).
DoiHopfModule functor_S(const ModuleStr& m, const ModuleAlgebra& a);
/// (M, φ, ρ) ↦ (M, ψ♯). Throws PreconditionFailed unless `d` passes doi_hopf_check
/// and its base is (A, ρ̂_A) over H*.
ModuleStr functor_R(const DoiHopfModule& d, const ModuleAlgebra& a);

}  // namespace hbl
