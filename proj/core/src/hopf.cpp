#include "hbl/hopf.hpp"

#include "hbl/error.hpp"

namespace hbl {

HopfAlgebra make_hopf(const Space& space, Morphism unit, Morphism prod, Morphism counit,
                      Morphism coprod, Morphism antipode) {
  return HopfAlgebra{Bialgebra{Algebra{space, std::move(unit), std::move(prod)},
                               Coalgebra{space, std::move(counit), std::move(coprod)}},
                     std::move(antipode)};
}

LawReport check_bialgebra(const Bialgebra& b) {
  if (b.alg.space.dim() != b.coalg.space.dim()) {
    throw ShapeMismatch("bialgebra: algebra and coalgebra live on different spaces");
  }
  LawReport rep("bialgebra");
  rep.append(check_algebra(b.alg));
  rep.append(check_coalgebra(b.coalg));
  const Space& h = b.alg.space;
  const Morphism& mu = b.alg.prod;
  const Morphism& eta = b.alg.unit;
  const Morphism& eps = b.coalg.counit;
  const Morphism& delta = b.coalg.coprod;
  rep.add(check_law("counit-mult", compose(eps, mu), tensor(eps, eps)));
  rep.add(check_law("counit-unit", compose(eps, eta), id(Space::unit())));
  rep.add(check_law("coprod-mult", compose(delta, mu),
                    compose(tensor(mu, mu), tensor(id(h), swap(h, h), id(h)),
                            tensor(delta, delta))));
  rep.add(check_law("coprod-unit", compose(delta, eta), tensor(eta, eta)));
  return rep;
}

HopfAlgebra solve_antipode(const Bialgebra& b, PivotOrder order) {
  const Space& h = b.alg.space;
  require_shape(b.alg.prod, tensor(h, h), h, "product");
  require_shape(b.coalg.coprod, h, tensor(h, h), "coproduct");
  const std::size_t n = h.dim();
  // Unknown s(a,i) = entry (a, i) of S, flattened as a*n+i.
  // Equation (r,k): Σ_{δ(e_k) ∋ c·e_i⊗e_j} Σ_a c · s(a,i) · μ(e_a⊗e_j)_r = η_r ε_k.
  std::vector<std::vector<Scalar>> a(n * n, std::vector<Scalar>(n * n));
  std::vector<Scalar> rhs(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& [idx, c] : b.coalg.coprod.column(k)) {
      const std::size_t i = idx / n;
      const std::size_t j = idx % n;
      for (std::size_t x = 0; x < n; ++x) {
        for (const auto& [r, m] : b.alg.prod.column(x * n + j)) a[r * n + k][x * n + i] += c * m;
      }
    }
  }
  const Morphism unit_counit = compose(b.alg.unit, b.coalg.counit);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) rhs[r * n + k] = unit_counit.at(r, k);
  }
  auto sol = solve_linear(std::move(a), std::move(rhs), order);
  if (!sol) throw NoAntipode("S∗id = η∘ε has no solution");
  if (!sol->unique) throw NoAntipode("S∗id = η∘ε has no unique solution; id is not invertible");
  std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < n; ++i) rows[x][i] = sol->x[x * n + i];
  }
  HopfAlgebra out{b, Morphism::from_rows(h, h, rows)};
  const Morphism ih = id(h);
  if (convolution(out.antipode, ih, b.coalg, b.alg) != unit_counit ||
      convolution(ih, out.antipode, b.coalg, b.alg) != unit_counit) {
    throw NoAntipode("candidate antipode fails a convolution identity");
  }
  return out;
}

bool is_commutative(const HopfAlgebra& h) { return is_commutative(h.algebra()); }
bool is_cocommutative(const HopfAlgebra& h) { return is_cocommutative(h.coalgebra()); }

LawReport check_hopf(const HopfAlgebra& h) {
  LawReport rep("hopf");
  rep.append(check_bialgebra(h.bi));
  const Space& s = h.space();
  require_shape(h.antipode, s, s, "antipode");
  const Morphism& lam = h.antipode;
  const Morphism ih = id(s);
  const Morphism unit_counit = convolution_unit(h.coalgebra(), h.algebra());
  const Morphism c = swap(s, s);
  rep.add(check_law("antipode-left", convolution(lam, ih, h.coalgebra(), h.algebra()),
                    unit_counit));
  rep.add(check_law("antipode-right", convolution(ih, lam, h.coalgebra(), h.algebra()),
                    unit_counit));
  rep.add(check_law("a-antip1", compose(lam, h.prod()), compose(h.prod(), c, tensor(lam, lam))));
  rep.add(check_law("a-antip2", compose(h.coprod(), lam),
                    compose(tensor(lam, lam), c, h.coprod())));
  rep.add(check_law("antipode-unit", compose(lam, h.unit()), h.unit()));
  rep.add(check_law("antipode-counit", compose(h.counit(), lam), h.counit()));
  if (is_commutative(h) || is_cocommutative(h)) {
    rep.add(check_law("lambdasquareid", compose(lam, lam), ih));
  }
  return rep;
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  const Space& s = h.space();
  const DualPair dp = dual_pair(s);
  const Space& sd = dp.dual;
  const Morphism ih = id(s);
  const Morphism id_ = id(sd);
  const Morphism& a = dp.coev;  // a_H(K)
  const Morphism& b = dp.eval;  // b_H(K)
  const Morphism c = swap(s, s);

  Morphism unit = compose(tensor(h.counit(), id_), a);
  Morphism counit = compose(b, tensor(id_, h.unit()));
  Morphism prod = compose(tensor(compose(b, tensor(id_, b, ih)), id_),
                          tensor(id_, id_, compose(tensor(compose(c, h.coprod()), id_), a)));
  Morphism coprod = compose(tensor(compose(b, tensor(id_, compose(h.prod(), c))), id_, id_),
                            tensor(id_, compose(tensor(ih, a, id_), a)));
  Morphism antipode = compose(tensor(compose(b, tensor(id_, h.antipode)), id_), tensor(id_, a));

  const Space sdsd = tensor(sd, sd);
  return make_hopf(sd, unit.retyped(Space::unit(), sd), prod.retyped(sdsd, sd),
                   counit.retyped(sd, Space::unit()), coprod.retyped(sd, sdsd),
                   antipode.retyped(sd, sd));
}

HopfAlgebra opposite_hopf(const HopfAlgebra& h) {
  auto inv = inverse(h.antipode);
  if (!inv) throw AntipodeNotInvertible("opposite Hopf algebra needs an invertible antipode");
  const Space& s = h.space();
  return make_hopf(s, h.unit(), compose(h.prod(), swap(s, s)), h.counit(), h.coprod(), *inv);
}

HopfAlgebra tensor_hopf(const HopfAlgebra& a, const HopfAlgebra& b) {
  Algebra alg = tensor_algebra(a.algebra(), b.algebra());
  Coalgebra coalg = tensor_coalgebra(a.coalgebra(), b.coalgebra());
  return HopfAlgebra{Bialgebra{alg, coalg}, tensor(a.antipode, b.antipode)};
}

ModuleStr adjoint_action(const HopfAlgebra& h) {
  const Space& s = h.space();
  const Morphism ih = id(s);
  Morphism ad = compose(h.prod(), tensor(h.prod(), h.antipode), tensor(ih, swap(s, s)),
                        tensor(h.coprod(), ih));
  return ModuleStr{s, ad, h.algebra()};
}

Morphism trivial_action(const HopfAlgebra& h, const Space& carrier) {
  return tensor(h.counit(), id(carrier)).retyped(tensor(h.space(), carrier), carrier);
}

CcClassForms cc_class_forms(const Morphism& action, const Space& carrier, const HopfAlgebra& h) {
  const Space& s = h.space();
  require_shape(action, tensor(s, carrier), carrier, "action");
  const Morphism ih = id(s);
  const Morphism im = id(carrier);
  const Morphism twisted = compose(swap(s, s), h.coprod());
  const Morphism lead = compose(tensor(action, ih), tensor(ih, swap(s, carrier)));
  CcClassForms f;
  f.ccclass = compose(lead, tensor(h.coprod(), im)) == compose(lead, tensor(twisted, im));
  const Morphism tail = tensor(ih, action);
  f.ccclass2 = compose(tail, tensor(h.coprod(), im)) == compose(tail, tensor(twisted, im));
  return f;
}

bool cc_class_check(const Morphism& action, const Space& carrier, const HopfAlgebra& h) {
  CcClassForms f = cc_class_forms(action, carrier, h);
  if (f.ccclass != f.ccclass2) {
    throw InternalInconsistency("the two forms of the cocommutativity-class condition disagree");
  }
  return f.ccclass;
}

bool cc_class_check(const ModuleStr& m, const HopfAlgebra& h) {
  return cc_class_check(m.action, m.carrier, h);
}

AdjointCcResult check_adjoint_cc_iff(const HopfAlgebra& h) {
  if (!inverse(h.antipode)) throw AntipodeNotInvertible("antipode is not an isomorphism");
  ModuleStr ad = adjoint_action(h);
  AdjointCcResult r;
  Coalgebra hh = tensor_coalgebra(h.coalgebra(), h.coalgebra());
  r.coalgebra_morphism = check_coalgebra_morphism(ad.action, hh, h.coalgebra()).ok();
  r.cc_class = cc_class_check(ad, h);
  return r;
}

HopfAlgebra in_field(const HopfAlgebra& h, const Field& f) {
  return make_hopf(h.space(), h.unit().in(f), h.prod().in(f), h.counit().in(f),
                   h.coprod().in(f), h.antipode.in(f));
}

}  // namespace hbl
