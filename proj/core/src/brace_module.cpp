#include "hbl/brace_module.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "hbl/error.hpp"

namespace hbl {

Morphism compute_gamma_M(const HopfBrace& b, const Morphism& act1, const Morphism& act2,
                         const Space& carrier) {
  return compose(act1, tensor(b.h1().antipode, act2), tensor(b.h1().coprod(), id(carrier)));
}

BraceModule::BraceModule(Space carrier, Morphism act1, Morphism act2, HopfBrace over)
    : carrier_(std::move(carrier)),
      act1_(std::move(act1)),
      act2_(std::move(act2)),
      over_(std::move(over)) {
  const Space hm = tensor(over_.space(), carrier_);
  require_shape(act1_, hm, carrier_, "first action");
  require_shape(act2_, hm, carrier_, "second action");
  gamma_m_ = compute_gamma_M(over_, act1_, act2_, carrier_);
}

namespace {

void append_prefixed(LawReport& rep, const LawReport& part, const std::string& prefix) {
  for (LawResult r : part.results()) {
    r.law = prefix + r.law;
    rep.add(std::move(r));
  }
}

// (H⊗c_{H,H}⊗M)∘(δ⊗H⊗M).
Morphism spread(const HopfBrace& b, const Space& m) {
  const Space& s = b.space();
  return compose(tensor(id(s), swap(s, s), id(m)), tensor(b.h1().coprod(), id(s), id(m)));
}

// (Γ⊗H)∘(H⊗c_{H,M})∘((c∘δ)⊗M): H⊗M → M⊗H.
Morphism twisted_leg(const HopfBrace& b, const Morphism& gamma, const Space& m) {
  const Space& s = b.space();
  return compose(tensor(gamma, id(s)), tensor(id(s), swap(s, m)),
                 tensor(compose(swap(s, s), b.h1().coprod()), id(m)));
}

}  // namespace

LawReport check_brace_module(const BraceModule& m) {
  const HopfBrace& b = m.over();
  const Space& s = b.space();
  const Space& sm = m.carrier();
  LawReport rep("brace module");
  append_prefixed(rep, check_module(ModuleStr{sm, m.act1(), b.h1().algebra()}), "m1.");
  append_prefixed(rep, check_module(ModuleStr{sm, m.act2(), b.h2().algebra()}), "m2.");
  const Morphism gm = compute_gamma_M(b, m.act1(), m.act2(), sm);
  const Morphism lhs = compose(m.act2(), tensor(id(s), m.act1()));
  LawResult c1 = check_law("compatmodH", lhs,
                           compose(m.act1(), tensor(b.h2().prod(), gm), spread(b, sm)));
  LawResult c2 = check_law(
      "compatmodHprime", lhs,
      compose(m.act1(), tensor(compute_gamma_prime(b.h1(), b.h2()), m.act2()), spread(b, sm)));
  rep.add(check_flag("compatmod-forms-agree", c1.passed == c2.passed));
  rep.add(std::move(c1));
  rep.add(std::move(c2));
  rep.add(check_law("varphi2expression", m.act2(),
                    compose(m.act1(), tensor(id(s), gm), tensor(b.h1().coprod(), id(sm)))));
  append_prefixed(rep, check_module(ModuleStr{sm, gm, b.h2().algebra()}), "gammaM.");
  return rep;
}

LawReport check_ac_object(const AcObject& a) {
  const HopfBrace& b = a.over;
  const Space& s = b.space();
  const Space& sm = a.carrier;
  LawReport rep("ac object");
  append_prefixed(rep, check_module(ModuleStr{sm, a.act, b.h1().algebra()}), "m1.");
  append_prefixed(rep, check_module(ModuleStr{sm, a.phi, b.h2().algebra()}), "phi.");
  rep.add(check_law("linearphi", compose(a.phi, tensor(id(s), a.act)),
                    compose(a.act, tensor(compute_gamma(b.h1(), b.h2()), a.phi), spread(b, sm))));
  return rep;
}

LawReport zhu_laws(const BraceModule& m) {
  const HopfBrace& b = m.over();
  const Space& s = b.space();
  const Space& sm = m.carrier();
  const Morphism gm = compute_gamma_M(b, m.act1(), m.act2(), sm);
  const Morphism x = twisted_leg(b, gm, sm);
  const Morphism lead = compose(tensor(m.act2(), id(s)), tensor(id(s), swap(s, sm)));
  LawReport rep("zhu");
  rep.add(check_law("realZhu", compose(lead, tensor(b.h1().coprod(), m.act1())),
                    compose(tensor(m.act1(), id(s)), tensor(b.h2().prod(), x), spread(b, sm))));
  rep.add(check_law("condModZhu", compose(lead, tensor(b.h1().coprod(), id(sm))),
                    compose(tensor(m.act1(), id(s)), tensor(id(s), x),
                            tensor(b.h1().coprod(), id(sm)))));
  return rep;
}

ZhuResult check_zhu(const BraceModule& m) {
  LawReport rep = check_brace_module(m);
  if (!rep.ok()) throw PreconditionFailed("Zhu check needs a brace module: " + rep.summary());
  LawReport z = zhu_laws(m);
  ZhuResult r;
  r.compat = rep.passed("compatmodH");
  r.zhu = z.passed("realZhu");
  r.cond_only = z.passed("condModZhu");
  r.cc_gamma_M = cc_class_check(m.gamma_M(), m.carrier(), m.over().h2());
  return r;
}

ModuleStr functor_F(const BraceModule& m) {
  const HopfBrace& b = m.over();
  const Space& s = b.space();
  Algebra sm = brace_smash_unchecked(b);
  Morphism act = compose(m.act1(), tensor(id(s), m.act2()));
  return ModuleStr{m.carrier(), act.retyped(tensor(sm.space, m.carrier()), m.carrier()),
                   std::move(sm)};
}

BraceModule functor_G(const ModuleStr& s, const HopfBrace& b) {
  Algebra sm = brace_smash_unchecked(b);
  LawReport rep = check_module(ModuleStr{s.carrier, s.action, sm});
  if (!rep.ok()) throw PreconditionFailed("functor G needs an H₁♯H₂-module: " + rep.summary());
  const Space& h = b.space();
  const Morphism im = id(s.carrier);
  Morphism act1 = compose(s.action, tensor(id(h), b.unit(), im));
  Morphism act2 = compose(s.action, tensor(b.unit(), id(h), im));
  const Space hm = tensor(h, s.carrier);
  return BraceModule(s.carrier, act1.retyped(hm, s.carrier), act2.retyped(hm, s.carrier), b);
}

BraceModule functor_U(const AcObject& a) {
  LawReport rep = check_ac_object(a);
  if (!rep.ok()) throw PreconditionFailed("functor U needs an Ac object: " + rep.summary());
  const Space& s = a.over.space();
  Morphism act2 = compose(a.act, tensor(id(s), a.phi), tensor(a.over.h1().coprod(), id(a.carrier)));
  return BraceModule(a.carrier, a.act, act2.retyped(a.act.dom(), a.carrier), a.over);
}

AcObject functor_V(const BraceModule& m) {
  LawReport rep = check_brace_module(m);
  if (!rep.ok()) throw PreconditionFailed("functor V needs a brace module: " + rep.summary());
  return AcObject{m.carrier(), m.act1(), m.gamma_M().retyped(m.act1().dom(), m.carrier()),
                  m.over()};
}

BraceModule unit_module(const HopfBrace& b) {
  const Morphism eps = b.h1().counit();
  return BraceModule(Space::unit(), eps, eps, b);
}

BraceModule tensor_module(const BraceModule& m, const BraceModule& n) {
  const HopfBrace& b = m.over();
  if (!cc_class_check(m.gamma_M(), m.carrier(), b.h2()) ||
      !cc_class_check(n.gamma_M(), n.carrier(), b.h2())) {
    throw NotInCCClass("tensor product of brace modules needs Γ_M and Γ_N in the cocommutativity class");
  }
  const Space mn = tensor(m.carrier(), n.carrier());
  const Space hmn = tensor(b.space(), mn);
  Morphism a1 = diagonal_action(m.act1(), n.act1(), m.carrier(), n.carrier(), b.h1());
  Morphism a2 = diagonal_action(m.act2(), n.act2(), m.carrier(), n.carrier(), b.h2());
  return BraceModule(mn, a1.retyped(hmn, mn), a2.retyped(hmn, mn), b);
}

LawReport check_tensor_module(const BraceModule& m, const BraceModule& n, const BraceModule& mn) {
  const HopfBrace& b = m.over();
  LawReport rep("tensor module");
  rep.add(check_law("Gammamodtensor", mn.gamma_M(),
                    diagonal_action(m.gamma_M(), n.gamma_M(), m.carrier(), n.carrier(), b.h2())));
  rep.add(check_flag("ccclassGammaM", cc_class_check(mn.gamma_M(), mn.carrier(), b.h2())));
  return rep;
}

DoiHopfModule doi_hopf_of_brace_module(const BraceModule& m) {
  LawReport rep = check_brace_module(m);
  if (!rep.ok()) throw PreconditionFailed("Doi-Hopf image needs a brace module: " + rep.summary());
  return functor_S(functor_F(m), gamma_prime_module_algebra(m.over()));
}

BraceModule brace_module_of_doi_hopf(const DoiHopfModule& d, const HopfBrace& b) {
  return functor_G(functor_R(d, gamma_prime_module_algebra(b)), b);
}

namespace {

// Group table of H₂ when its basis is group-like and closed under μ².
std::optional<GroupTable> group_of_basis(const HopfAlgebra& h) {
  const std::size_t n = h.space().dim();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& d = h.coprod().column(i);
    if (d.size() != 1 || d[0].first != i * n + i || !d[0].second.is_one()) return std::nullopt;
  }
  std::vector<std::size_t> op(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    const auto& c = h.prod().column(k);
    if (c.size() != 1 || !c[0].second.is_one()) return std::nullopt;
    op[k] = c[0].first;
  }
  if (!is_group(n, op)) return std::nullopt;
  return make_group(n, std::move(op));
}

ModuleStr coset_module(const HopfAlgebra& h, const GroupTable& g, const std::vector<std::size_t>& sub) {
  // Left cosets xC, numbered by first appearance.
  const std::size_t n = g.n;
  std::vector<std::size_t> coset_of(n, n);
  std::size_t count = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset_of[x] != n) continue;
    for (std::size_t c : sub) coset_of[g.mul(x, c)] = count;
    ++count;
  }
  std::vector<std::size_t> rep(count);
  for (std::size_t x = n; x-- > 0;) rep[coset_of[x]] = x;
  const Space carrier(count);
  const Space hm = tensor(h.space(), carrier);
  std::vector<SparseVector> cols(n * count);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t k = 0; k < count; ++k) cols[a * count + k] = {{coset_of[g.mul(a, rep[k])], Scalar(1)}};
  }
  Morphism act = Morphism::from_columns(hm, carrier, std::move(cols)).in(h.unit().column(0).front().second.field());
  return ModuleStr{carrier, act, h.algebra()};
}

}  // namespace

std::vector<std::pair<std::string, ModuleStr>> h2_modules(const HopfBrace& b, std::size_t max_dim) {
  const HopfAlgebra& h2 = b.h2();
  const Space& s = b.space();
  std::vector<std::pair<std::string, ModuleStr>> out;
  out.emplace_back("trivial", ModuleStr{Space::unit(), h2.counit(), h2.algebra()});
  if (s.dim() <= max_dim) {
    out.emplace_back("regular", ModuleStr{s, h2.prod(), h2.algebra()});
    out.emplace_back("adjoint", adjoint_action(h2));
    out.emplace_back("gamma", ModuleStr{s, b.gamma(), h2.algebra()});
    out.emplace_back("gammaprime", ModuleStr{s, b.gamma_prime(), h2.algebra()});
  }
  if (auto g = group_of_basis(h2)) {
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t x = 0; x < g->n; ++x) {
      std::vector<std::size_t> sub{g->id};
      for (std::size_t p = x; p != g->id; p = g->mul(p, x)) sub.push_back(p);
      std::sort(sub.begin(), sub.end());
      if (sub.size() == 1 || sub.size() == g->n || !seen.insert(sub).second) continue;
      if (g->n / sub.size() > max_dim) continue;
      std::string name = "cosets<" + std::to_string(x) + ">";
      out.emplace_back(name, coset_module(h2, *g, sub));
    }
  }
  return out;
}

std::vector<NamedModule> standard_modules(const HopfBrace& b, std::size_t max_dim) {
  const Space& s = b.space();
  std::vector<NamedModule> out;
  if (s.dim() <= max_dim) {
    out.push_back({"regular", BraceModule(s, b.h1().prod(), b.h2().prod(), b)});
  }
  out.push_back({"trivial", unit_module(b)});
  for (auto& [name, mod] : h2_modules(b, max_dim)) {
    Morphism eps = trivial_action(b.h1(), mod.carrier);
    out.push_back({"induced:" + name, BraceModule(mod.carrier, eps, mod.action, b)});
  }
  if (s.dim() * s.dim() <= max_dim) {
    Algebra sm = brace_smash_unchecked(b);
    out.push_back({"smash-regular", functor_G(ModuleStr{sm.space, sm.prod, sm}, b)});
  }
  return out;
}

}  // namespace hbl
