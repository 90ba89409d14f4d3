#include "hbl/structures.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hbl/error.hpp"

namespace hbl {

void LawReport::append(const LawReport& other) {
  results_.insert(results_.end(), other.results_.begin(), other.results_.end());
}

bool LawReport::ok() const {
  return std::all_of(results_.begin(), results_.end(), [](const auto& r) { return r.passed; });
}

const LawResult& LawReport::at(const std::string& law) const {
  for (const auto& r : results_) {
    if (r.law == law) return r;
  }
  throw std::out_of_range("law '" + law + "' not in report for " + subject_);
}

bool LawReport::contains(const std::string& law) const {
  return std::any_of(results_.begin(), results_.end(), [&](const auto& r) { return r.law == law; });
}

std::vector<std::string> LawReport::failed_laws() const {
  std::vector<std::string> out;
  for (const auto& r : results_) {
    if (!r.passed) out.push_back(r.law);
  }
  return out;
}

std::string LawReport::summary() const {
  std::ostringstream os;
  os << (subject_.empty() ? "report" : subject_) << ":";
  for (const auto& r : results_) {
    os << "\n  " << (r.passed ? "pass " : "FAIL ") << r.law;
    if (r.mismatch) {
      os << " at (" << r.mismatch->row << "," << r.mismatch->col << "): " << r.mismatch->lhs
         << " != " << r.mismatch->rhs;
    }
  }
  return os.str();
}

LawResult check_law(std::string law, const Morphism& lhs, const Morphism& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw ShapeMismatch("law " + law + ": sides have different shapes");
  }
  LawResult r{std::move(law), true, std::nullopt};
  if (auto diff = lhs.first_difference(rhs)) {
    r.passed = false;
    r.mismatch = Mismatch{diff->first, diff->second, lhs.at(diff->first, diff->second).to_string(),
                          rhs.at(diff->first, diff->second).to_string()};
  }
  return r;
}

LawResult check_flag(std::string law, bool holds) { return {std::move(law), holds, std::nullopt}; }

void require_shape(const Morphism& f, const Space& dom, const Space& cod, const std::string& what) {
  if (f.cols() != dom.dim() || f.rows() != cod.dim()) {
    throw ShapeMismatch(what + ": expected " + std::to_string(cod.dim()) + "x" +
                        std::to_string(dom.dim()) + ", got " + std::to_string(f.rows()) + "x" +
                        std::to_string(f.cols()));
  }
}

namespace {

void require_algebra_shape(const Algebra& a) {
  require_shape(a.unit, Space::unit(), a.space, "unit");
  require_shape(a.prod, tensor(a.space, a.space), a.space, "product");
}

void require_coalgebra_shape(const Coalgebra& c) {
  require_shape(c.counit, c.space, Space::unit(), "counit");
  require_shape(c.coprod, c.space, tensor(c.space, c.space), "coproduct");
}

}  // namespace

LawReport check_algebra(const Algebra& a) {
  require_algebra_shape(a);
  const Morphism ia = id(a.space);
  LawReport rep("algebra");
  rep.add(check_law("unit-left", compose(a.prod, tensor(a.unit, ia)), ia));
  rep.add(check_law("unit-right", compose(a.prod, tensor(ia, a.unit)), ia));
  rep.add(check_law("assoc", compose(a.prod, tensor(a.prod, ia)),
                    compose(a.prod, tensor(ia, a.prod))));
  return rep;
}

LawReport check_coalgebra(const Coalgebra& c) {
  require_coalgebra_shape(c);
  const Morphism ic = id(c.space);
  LawReport rep("coalgebra");
  rep.add(check_law("counit-left", compose(tensor(c.counit, ic), c.coprod), ic));
  rep.add(check_law("counit-right", compose(tensor(ic, c.counit), c.coprod), ic));
  rep.add(check_law("coassoc", compose(tensor(c.coprod, ic), c.coprod),
                    compose(tensor(ic, c.coprod), c.coprod)));
  return rep;
}

LawReport check_module(const ModuleStr& m) {
  require_algebra_shape(m.over);
  require_shape(m.action, tensor(m.over.space, m.carrier), m.carrier, "action");
  const Morphism im = id(m.carrier);
  LawReport rep("module");
  rep.add(check_law("actioneta", compose(m.action, tensor(m.over.unit, im)), im));
  rep.add(check_law("actionprod", compose(m.action, tensor(id(m.over.space), m.action)),
                    compose(m.action, tensor(m.over.prod, im))));
  return rep;
}

LawReport check_comodule(const ComoduleStr& m) {
  require_coalgebra_shape(m.over);
  require_shape(m.coaction, m.carrier, tensor(m.carrier, m.over.space), "coaction");
  const Morphism im = id(m.carrier);
  LawReport rep("comodule");
  rep.add(check_law("coactioncounit", compose(tensor(im, m.over.counit), m.coaction), im));
  rep.add(check_law("coactioncoprod", compose(tensor(m.coaction, id(m.over.space)), m.coaction),
                    compose(tensor(im, m.over.coprod), m.coaction)));
  return rep;
}

Morphism convolution(const Morphism& f, const Morphism& g, const Coalgebra& c, const Algebra& a) {
  require_shape(f, c.space, a.space, "convolution left factor");
  require_shape(g, c.space, a.space, "convolution right factor");
  return compose(a.prod, tensor(f, g), c.coprod);
}

Morphism convolution_unit(const Coalgebra& c, const Algebra& a) {
  return compose(a.unit, c.counit);
}

bool is_module_morphism(const Morphism& f, const ModuleStr& m, const ModuleStr& n) {
  require_shape(f, m.carrier, n.carrier, "module morphism");
  if (m.over.space.dim() != n.over.space.dim()) {
    throw ShapeMismatch("modules over algebras of different dimension");
  }
  return compose(f, m.action) == compose(n.action, tensor(id(m.over.space), f));
}

bool is_comodule_morphism(const Morphism& f, const ComoduleStr& m, const ComoduleStr& n) {
  require_shape(f, m.carrier, n.carrier, "comodule morphism");
  return compose(n.coaction, f) == compose(tensor(f, id(m.over.space)), m.coaction);
}

LawReport check_algebra_morphism(const Morphism& f, const Algebra& a, const Algebra& b) {
  require_shape(f, a.space, b.space, "algebra morphism");
  LawReport rep("algebra morphism");
  rep.add(check_law("morph-unit", compose(f, a.unit), b.unit));
  rep.add(check_law("morph-prod", compose(f, a.prod), compose(b.prod, tensor(f, f))));
  return rep;
}

LawReport check_coalgebra_morphism(const Morphism& f, const Coalgebra& c, const Coalgebra& d) {
  require_shape(f, c.space, d.space, "coalgebra morphism");
  LawReport rep("coalgebra morphism");
  rep.add(check_law("morph-counit", compose(d.counit, f), c.counit));
  rep.add(check_law("morph-coprod", compose(d.coprod, f), compose(tensor(f, f), c.coprod)));
  return rep;
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  Space ab = tensor(a.space, b.space);
  Morphism prod = compose(tensor(a.prod, b.prod),
                          tensor(id(a.space), swap(b.space, a.space), id(b.space)));
  return Algebra{ab, tensor(a.unit, b.unit), prod.retyped(tensor(ab, ab), ab)};
}

Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d) {
  Space cd = tensor(c.space, d.space);
  Morphism coprod = compose(tensor(id(c.space), swap(c.space, d.space), id(d.space)),
                            tensor(c.coprod, d.coprod));
  return Coalgebra{cd, tensor(c.counit, d.counit), coprod.retyped(cd, tensor(cd, cd))};
}

bool is_commutative(const Algebra& a) {
  return compose(a.prod, swap(a.space, a.space)) == a.prod;
}

bool is_cocommutative(const Coalgebra& c) {
  return compose(swap(c.space, c.space), c.coprod) == c.coprod;
}

Algebra unit_algebra() {
  return Algebra{Space::unit(), id(Space::unit()), id(Space::unit())};
}

Coalgebra unit_coalgebra() {
  return Coalgebra{Space::unit(), id(Space::unit()), id(Space::unit())};
}

}  // namespace hbl
