#include "hbl/smash.hpp"

#include "hbl/error.hpp"

namespace hbl {

Morphism diagonal_action(const Morphism& phi_a, const Morphism& phi_b, const Space& a,
                         const Space& b, const HopfAlgebra& h) {
  const Space& s = h.space();
  return compose(tensor(phi_a, phi_b), tensor(id(s), swap(s, a), id(b)),
                 tensor(h.coprod(), id(a), id(b)));
}

LawReport check_module_algebra(const ModuleAlgebra& a) {
  const Space& s = a.over.space();
  const Space& sa = a.algebra.space;
  LawReport rep("module algebra");
  rep.append(check_module(ModuleStr{sa, a.action, a.over.algebra()}));
  rep.add(check_law("Hmodalg1", compose(a.action, tensor(id(s), a.algebra.unit)),
                    tensor(a.over.counit(), a.algebra.unit)));
  rep.add(check_law("Hmodalg2", compose(a.action, tensor(id(s), a.algebra.prod)),
                    compose(a.algebra.prod, diagonal_action(a.action, a.action, sa, sa, a.over))));
  return rep;
}

LawReport check_module_coalgebra(const ModuleCoalgebra& c) {
  const Space& s = c.over.space();
  const Space& sc = c.coalgebra.space;
  LawReport rep("module coalgebra");
  rep.append(check_module(ModuleStr{sc, c.action, c.over.algebra()}));
  LawResult m1 = check_law("Hmodcoalg1", compose(c.coalgebra.counit, c.action),
                           tensor(c.over.counit(), c.coalgebra.counit));
  LawResult m2 = check_law("Hmodcoalg2", compose(c.coalgebra.coprod, c.action),
                           compose(diagonal_action(c.action, c.action, sc, sc, c.over),
                                   tensor(id(s), c.coalgebra.coprod)));
  const bool morphism =
      check_coalgebra_morphism(c.action, tensor_coalgebra(c.over.coalgebra(), c.coalgebra),
                               c.coalgebra)
          .ok();
  rep.add(check_flag("Hmodcoalg-iff", morphism == (m1.passed && m2.passed)));
  rep.add(std::move(m1));
  rep.add(std::move(m2));
  return rep;
}

LawReport check_comodule_algebra(const ComoduleAlgebra& a) {
  const Space& s = a.over.space();
  const Space& sa = a.algebra.space;
  const Morphism ia = id(sa);
  LawReport rep("comodule algebra");
  rep.append(check_comodule(ComoduleStr{sa, a.coaction, a.over.coalgebra()}));
  const Morphism rho_aa = compose(tensor(ia, ia, a.over.prod()), tensor(ia, swap(s, sa), id(s)),
                                  tensor(a.coaction, a.coaction));
  LawResult c1 = check_law("Hcomodalg1", compose(a.coaction, a.algebra.unit),
                           tensor(a.algebra.unit, a.over.unit()));
  LawResult c2 = check_law("Hcomodalg2", compose(a.coaction, a.algebra.prod),
                           compose(tensor(a.algebra.prod, id(s)), rho_aa));
  const bool morphism =
      check_algebra_morphism(a.coaction, a.algebra, tensor_algebra(a.algebra, a.over.algebra()))
          .ok();
  rep.add(check_flag("Hcomodalg-iff", morphism == (c1.passed && c2.passed)));
  rep.add(std::move(c1));
  rep.add(std::move(c2));
  return rep;
}

Morphism smash_psi(const Morphism& action, const Space& a, const HopfAlgebra& h) {
  const Space& s = h.space();
  return compose(tensor(action, id(s)), tensor(id(s), swap(s, a)), tensor(h.coprod(), id(a)));
}

Algebra smash_algebra_unchecked(const ModuleAlgebra& a) {
  const Space& s = a.over.space();
  const Space& sa = a.algebra.space;
  const Space ah = tensor(sa, s);
  const Morphism psi = smash_psi(a.action, sa, a.over);
  Morphism prod = compose(tensor(a.algebra.prod, a.over.prod()), tensor(id(sa), psi, id(s)));
  return Algebra{ah, tensor(a.algebra.unit, a.over.unit()).retyped(Space::unit(), ah),
                 prod.retyped(tensor(ah, ah), ah)};
}

Algebra smash_algebra(const ModuleAlgebra& a) {
  LawReport rep = check_module_algebra(a);
  if (!rep.ok()) throw PreconditionFailed("smash product needs a module algebra: " + rep.summary());
  return smash_algebra_unchecked(a);
}

HopfAlgebra smash_hopf(const ModuleHopf& a) {
  const ModuleAlgebra ma{a.hopf.algebra(), a.action, a.over};
  LawReport alg = check_module_algebra(ma);
  if (!alg.ok()) throw PreconditionFailed("smash Hopf algebra needs a module algebra: " + alg.summary());
  if (!cc_class_check(a.action, a.hopf.space(), a.over)) {
    throw NotInCCClass("the action is not in the cocommutativity class; A♯H is only an algebra");
  }
  LawReport coalg = check_module_coalgebra(ModuleCoalgebra{a.hopf.coalgebra(), a.action, a.over});
  if (!coalg.ok()) {
    throw PreconditionFailed("smash Hopf algebra needs a module coalgebra: " + coalg.summary());
  }
  const Space& sa = a.hopf.space();
  const Space& s = a.over.space();
  Algebra alg_out = smash_algebra_unchecked(ma);
  Coalgebra coalg_out = tensor_coalgebra(a.hopf.coalgebra(), a.over.coalgebra());
  Morphism antipode = compose(smash_psi(a.action, sa, a.over), tensor(a.over.antipode, a.hopf.antipode),
                              swap(sa, s));
  const Space& ah = alg_out.space;
  return HopfAlgebra{Bialgebra{alg_out, Coalgebra{ah, coalg_out.counit, coalg_out.coprod}},
                     antipode.retyped(ah, ah)};
}

LawReport doi_hopf_check(const DoiHopfModule& m) {
  LawReport base = check_comodule_algebra(m.base);
  if (!base.ok()) {
    throw PreconditionFailed("Doi-Hopf base is not a comodule algebra: " + base.summary());
  }
  const Space& sa = m.base.algebra.space;
  const Space& s = m.base.over.space();
  LawReport rep("doi-hopf module");
  rep.append(check_module(ModuleStr{m.carrier, m.action, m.base.algebra}));
  rep.append(check_comodule(ComoduleStr{m.carrier, m.coaction, m.base.over.coalgebra()}));
  rep.add(check_law("lrHopfmod", compose(m.coaction, m.action),
                    compose(tensor(m.action, m.base.over.prod()),
                            tensor(id(sa), swap(s, m.carrier), id(s)),
                            tensor(m.base.coaction, m.coaction))));
  return rep;
}

ComoduleAlgebra dual_comodule_algebra(const ModuleAlgebra& a) {
  const Space& s = a.over.space();
  const Space& sa = a.algebra.space;
  const DualPair dp = dual_pair(s);
  Morphism rho = compose(tensor(a.action, id(dp.dual)), tensor(id(s), swap(dp.dual, sa)),
                         tensor(dp.coev, id(sa)));
  HopfAlgebra hd = dual_hopf(a.over);
  return ComoduleAlgebra{a.algebra, rho.retyped(sa, tensor(sa, hd.space())), std::move(hd)};
}

Morphism action_from_dual_coaction(const ComoduleAlgebra& a, const HopfAlgebra& h) {
  const Space& s = h.space();
  const Space& sa = a.algebra.space;
  if (a.over.space().dim() != s.dim()) {
    throw ShapeMismatch("coaction is not over a dual of the given Hopf algebra");
  }
  const DualPair dp = dual_pair(s);
  Morphism phi = compose(tensor(id(sa), dp.eval), tensor(a.coaction, id(s)), swap(s, sa));
  return phi.retyped(tensor(s, sa), sa);
}

DoiHopfModule functor_S(const ModuleStr& m, const ModuleAlgebra& a) {
  const Algebra sm = smash_algebra(a);
  LawReport rep = check_module(ModuleStr{m.carrier, m.action, sm});
  if (!rep.ok()) throw PreconditionFailed("functor S needs an A♯H-module: " + rep.summary());
  const Space& s = a.over.space();
  const Space& sa = a.algebra.space;
  const Space& sm_space = m.carrier;
  const DualPair dp = dual_pair(s);
  const Morphism& psi = m.action;
  Morphism phi_star = compose(psi, tensor(id(sa), a.over.unit(), id(sm_space)));
  Morphism rho_star = compose(tensor(psi, id(dp.dual)), tensor(id(sa), id(s), swap(dp.dual, sm_space)),
                              tensor(a.algebra.unit, dp.coev, id(sm_space)));
  ComoduleAlgebra base = dual_comodule_algebra(a);
  return DoiHopfModule{sm_space, phi_star.retyped(tensor(sa, sm_space), sm_space),
                       rho_star.retyped(sm_space, tensor(sm_space, base.over.space())),
                       std::move(base)};
}

ModuleStr functor_R(const DoiHopfModule& d, const ModuleAlgebra& a) {
  const ComoduleAlgebra expected = dual_comodule_algebra(a);
  if (d.base.coaction != expected.coaction || d.base.algebra.prod != a.algebra.prod ||
      d.base.algebra.unit != a.algebra.unit) {
    throw PreconditionFailed("functor R needs a Doi-Hopf module over (A, ρ̂_A)");
  }
  LawReport rep = doi_hopf_check(d);
  if (!rep.ok()) throw PreconditionFailed("functor R needs a Doi-Hopf module: " + rep.summary());
  const Space& s = a.over.space();
  const Space& sa = a.algebra.space;
  const DualPair dp = dual_pair(s);
  Morphism psi = compose(tensor(d.action, dp.eval),
                         tensor(id(sa), compose(tensor(d.coaction, id(s)), swap(s, d.carrier))));
  Algebra sm = smash_algebra_unchecked(a);
  return ModuleStr{d.carrier, psi.retyped(tensor(sm.space, d.carrier), d.carrier), std::move(sm)};
}

}  // namespace hbl
