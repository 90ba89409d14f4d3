#pragma once

#include "hbl/linsolve.hpp"
#include "hbl/structures.hpp"

namespace hbl {

struct Bialgebra {
  Algebra alg;
  Coalgebra coalg;
};

/// (η, μ, ε, δ, λ) on a common space.
struct HopfAlgebra {
  Bialgebra bi;
  Morphism antipode;

  const Space& space() const { return bi.alg.space; }
  const Morphism& unit() const { return bi.alg.unit; }
  const Morphism& prod() const { return bi.alg.prod; }
  const Morphism& counit() const { return bi.coalg.counit; }
  const Morphism& coprod() const { return bi.coalg.coprod; }
  const Algebra& algebra() const { return bi.alg; }
  const Coalgebra& coalgebra() const { return bi.coalg; }
};

HopfAlgebra make_hopf(const Space& space, Morphism unit, Morphism prod, Morphism counit,
                      Morphism coprod, Morphism antipode);

/// Algebra and coalgebra laws plus: ε and δ are algebra morphisms.
LawReport check_bialgebra(const Bialgebra& b);

/// Solves μ∘(S⊗id)∘δ = η∘ε for S, then verifies both convolution identities.
/// Throws NoAntipode when id has no convolution inverse.
HopfAlgebra solve_antipode(const Bialgebra& b, PivotOrder order = PivotOrder::Forward);

/// Bialgebra laws, both antipode identities, anti(co)multiplicativity,
/// λ∘η = η, ε∘λ = ε, and λ∘λ = id when H is commutative or cocommutative.
LawReport check_hopf(const HopfAlgebra& h);

bool is_commutative(const HopfAlgebra& h);
bool is_cocommutative(const HopfAlgebra& h);

/// H* on the dual basis, built from evaluation and coevaluation.
HopfAlgebra dual_hopf(const HopfAlgebra& h);

/// H^op: product μ∘c, same coalgebra, antipode λ⁻¹. Throws AntipodeNotInvertible.
HopfAlgebra opposite_hopf(const HopfAlgebra& h);

/// Tensor product Hopf algebra A⊗B.
HopfAlgebra tensor_hopf(const HopfAlgebra& a, const HopfAlgebra& b);

/// φ^ad = μ∘(μ⊗λ)∘(H⊗c)∘(δ⊗H), making H a left H-module.
ModuleStr adjoint_action(const HopfAlgebra& h);

/// Trivial action ε⊗M on a carrier.
Morphism trivial_action(const HopfAlgebra& h, const Space& carrier);

/// Both equivalent forms of the cocommutativity-class condition for an
/// H-action on `carrier`.
struct CcClassForms {
  bool ccclass = false;   ///< (φ⊗H)∘(H⊗c)∘(δ⊗M) = (φ⊗H)∘(H⊗c)∘((c∘δ)⊗M)
  bool ccclass2 = false;  ///< (H⊗φ)∘(δ⊗M) = (H⊗φ)∘((c∘δ)⊗M)
};

CcClassForms cc_class_forms(const Morphism& action, const Space& carrier, const HopfAlgebra& h);

/// True iff the module lies in the cocommutativity class of `h`. Throws
/// InternalInconsistency if the two equivalent forms disagree.
bool cc_class_check(const Morphism& action, const Space& carrier, const HopfAlgebra& h);
bool cc_class_check(const ModuleStr& m, const HopfAlgebra& h);

struct AdjointCcResult {
  bool coalgebra_morphism = false;  ///< φ^ad is a coalgebra morphism H⊗H → H
  bool cc_class = false;            ///< (H, φ^ad) is in the cocommutativity class
  bool agrees() const { return coalgebra_morphism == cc_class; }
};

/// Evaluates both sides of the adjoint-action characterization independently.
/// Throws AntipodeNotInvertible when λ is singular.
AdjointCcResult check_adjoint_cc_iff(const HopfAlgebra& h);

/// Same algebra and coalgebra but every entry mapped into `f`.
HopfAlgebra in_field(const HopfAlgebra& h, const Field& f);

}  // namespace hbl
