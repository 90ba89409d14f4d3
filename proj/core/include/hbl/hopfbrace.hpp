#pragma once

#include "hbl/skewbrace.hpp"
#include "hbl/smash.hpp"

namespace hbl {

/// Γ = μ¹∘(λ¹⊗μ²)∘(δ⊗H).
Morphism compute_gamma(const HopfAlgebra& h1, const HopfAlgebra& h2);
/// Γ′ = μ¹∘(μ²⊗λ¹)∘(H⊗c)∘(δ⊗H).
Morphism compute_gamma_prime(const HopfAlgebra& h1, const HopfAlgebra& h2);

/// A pair of Hopf algebras on one coalgebra, with Γ and Γ′ cached.
class HopfBrace {
 public:
  /// Throws PreconditionFailed unless h1 and h2 share ε and δ, and
  /// DistinctUnits unless η¹ = η².
  HopfBrace(HopfAlgebra h1, HopfAlgebra h2);

  const HopfAlgebra& h1() const { return h1_; }
  const HopfAlgebra& h2() const { return h2_; }
  const Space& space() const { return h1_.space(); }
  const Coalgebra& coalgebra() const { return h1_.coalgebra(); }
  const Morphism& unit() const { return h1_.unit(); }
  const Morphism& gamma() const { return gamma_; }
  const Morphism& gamma_prime() const { return gamma_prime_; }

 private:
  HopfAlgebra h1_;
  HopfAlgebra h2_;
  Morphism gamma_;
  Morphism gamma_prime_;
};

/// Both sides of compatHbrace (μ²∘(H⊗μ¹) = rhs), and compatHprimabrace.
Morphism compat_lhs(const HopfAlgebra& h1, const HopfAlgebra& h2);
Morphism compat_rhs(const HopfAlgebra& h1, const HopfAlgebra& h2, const Morphism& gamma);
Morphism compat_prime_rhs(const HopfAlgebra& h1, const HopfAlgebra& h2, const Morphism& gamma_prime);

/// Hopf laws of both components (prefixed "h1." / "h2."), unit coincidence,
/// compatHbrace, compatHprimabrace and their agreement, and the Γ/Γ′ caches.
LawReport check_hopf_brace(const HopfBrace& b);

/// mu2-exp and mu2prime-exp, with Γ and Γ′ recomputed from the current maps.
LawReport reconstruct_mu2(const HopfBrace& b);

/// Module-algebra laws for (H₁, Γ) and (H₁, Γ′) over H₂, prefixed "gamma." / "gammaprime.".
LawReport check_gamma_module_algebras(const HopfBrace& b);

struct BraceCharResult {
  bool is_brace = false;         ///< compatHbrace holds
  bool gamma_prime_law = false;  ///< Γ′∘(H⊗μ¹) = μ¹∘(Γ′⊗Γ′)∘(H⊗c⊗H)∘(δ⊗H⊗H)
  bool gamma_law = false;        ///< μ¹∘(Γ⊗Γ)∘(H⊗c⊗H)∘(δ⊗H⊗H) = Γ∘(H⊗μ¹)
  bool agree() const { return is_brace == gamma_prime_law && is_brace == gamma_law; }
};

/// Evaluates the three characterizations independently. Throws
/// PreconditionFailed unless h1 and h2 share a coalgebra.
BraceCharResult brace_char_equiv(const HopfAlgebra& h1, const HopfAlgebra& h2);

struct GammaCoalgebraResult {
  bool cc_gamma = false;
  bool coalg_gamma = false;
  bool cc_gamma_prime = false;
  bool coalg_gamma_prime = false;
  /// cc ⇒ coalgebra morphism, for both actions.
  bool implications_hold() const {
    return (!cc_gamma || coalg_gamma) && (!cc_gamma_prime || coalg_gamma_prime);
  }
};

GammaCoalgebraResult gamma_coalgebra_morphism_check(const HopfBrace& b);

/// (H, H). Throws PreconditionFailed unless h passes check_hopf.
HopfBrace trivial_brace(const HopfAlgebra& h);
/// (H, H^op). Throws PreconditionFailed unless h passes check_hopf.
HopfBrace op_brace(const HopfAlgebra& h);

/// (K[G_·], K[G_∘]). Throws PreconditionFailed on an invalid brace.
HopfBrace linearize(const SkewBrace& s, const Field& field = Field::rationals());

/// (H₁, Γ′) as a left H₂-module algebra.
ModuleAlgebra gamma_prime_module_algebra(const HopfBrace& b);

/// H₁♯H₂ with the Γ′ action. Throws PreconditionFailed unless the brace checks pass.
Algebra brace_smash(const HopfBrace& b);
Algebra brace_smash_unchecked(const HopfBrace& b);

}  // namespace hbl
