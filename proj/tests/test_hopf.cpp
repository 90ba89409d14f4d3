#include <gtest/gtest.h>

#include "generators.hpp"
#include "hbl/catalog.hpp"
#include "hbl/error.hpp"

using namespace hbl;

namespace {

// The monoid {1, z} with z² = z: a bialgebra with no antipode.
Bialgebra idempotent_monoid() {
  const Space s(std::vector<std::string>{"1", "z"});
  const Space ss = tensor(s, s);
  Algebra a{s, Morphism::from_rows(Space::unit(), s, {{1}, {0}}),
            Morphism::from_columns(ss, s, {{{0, 1}}, {{1, 1}}, {{1, 1}}, {{1, 1}}})};
  Coalgebra c{s, Morphism::from_rows(s, Space::unit(), {{1, 1}}),
              Morphism::from_columns(s, ss, {{{0, 1}}, {{3, 1}}})};
  return Bialgebra{a, c};
}

}  // namespace

TEST(Structures, GroupAlgebraLaws) {
  const HopfAlgebra h = group_algebra(dihedral_group(3));
  EXPECT_TRUE(check_algebra(h.algebra()).ok());
  EXPECT_TRUE(check_coalgebra(h.coalgebra()).ok());
  EXPECT_FALSE(is_commutative(h));
  EXPECT_TRUE(is_cocommutative(h));
}

TEST(Structures, MutatedProductNamesTheLaw) {
  HopfAlgebra h = group_algebra(cyclic_group(3));
  h.bi.alg.prod = h.bi.alg.prod.with_entry(0, 0, 2);
  const LawReport rep = check_algebra(h.algebra());
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.passed("unit-left"));
  EXPECT_TRUE(rep.at("unit-left").mismatch.has_value());
}

TEST(StructuresProperty, TensorAlgebrasOfCatalogPairs) {
  const auto cat = hopf_catalog(4);
  for (const auto& a : cat) {
    for (const auto& b : cat) {
      EXPECT_TRUE(check_algebra(tensor_algebra(a.hopf.algebra(), b.hopf.algebra())).ok()) << a.name << "⊗" << b.name;
      EXPECT_TRUE(check_coalgebra(tensor_coalgebra(a.hopf.coalgebra(), b.hopf.coalgebra())).ok());
    }
  }
}

TEST(StructuresProperty, ConvolutionMonoid) {
  std::mt19937_64 rng(31);
  const HopfAlgebra c = group_algebra(cyclic_group(3));
  const HopfAlgebra a = sweedler_h4();
  const Morphism e = convolution_unit(c.coalgebra(), a.algebra());
  for (int t = 0; t < 20; ++t) {
    const Morphism f = gen::random_morphism(rng, 4, 3).retyped(c.space(), a.space());
    const Morphism g = gen::random_morphism(rng, 4, 3).retyped(c.space(), a.space());
    const Morphism h = gen::random_morphism(rng, 4, 3).retyped(c.space(), a.space());
    auto conv = [&](const Morphism& x, const Morphism& y) { return convolution(x, y, c.coalgebra(), a.algebra()); };
    EXPECT_EQ(conv(conv(f, g), h), conv(f, conv(g, h)));
    EXPECT_EQ(conv(e, f), f);
    EXPECT_EQ(conv(f, e), f);
  }
}

TEST(Structures, ModuleMorphismsCompose) {
  // Right multiplications are left-module endomorphisms of the regular module.
  const HopfAlgebra h = group_algebra(dihedral_group(3));
  const ModuleStr reg{h.space(), h.prod(), h.algebra()};
  EXPECT_TRUE(is_module_morphism(id(h.space()), reg, reg));
  auto right_mult = [&](std::size_t x) {
    const Morphism ex = Morphism::from_columns(Space::unit(), h.space(), {{{x, 1}}});
    return compose(h.prod(), tensor(id(h.space()), ex));
  };
  const Morphism r1 = right_mult(1), r3 = right_mult(3);
  EXPECT_TRUE(is_module_morphism(r1, reg, reg));
  EXPECT_TRUE(is_module_morphism(compose(r1, r3), reg, reg));
  // Left multiplication by a non-central element is not.
  const Morphism l3 = compose(h.prod(), tensor(Morphism::from_columns(Space::unit(), h.space(), {{{3, 1}}}), id(h.space())));
  EXPECT_FALSE(is_module_morphism(l3, reg, reg));
}

TEST(Hopf, SweedlerAntipodeMatchesHandComputation) {
  const HopfAlgebra h4 = sweedler_h4();
  EXPECT_TRUE(check_hopf(h4).ok()) << check_hopf(h4).summary();
  // S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x.
  const Morphism s = Morphism::from_rows(h4.space(), h4.space(),
                                         {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  EXPECT_EQ(solve_antipode(h4.bi).antipode, s);
  EXPECT_EQ(solve_antipode(h4.bi, PivotOrder::Reverse).antipode, s);
  EXPECT_FALSE(is_commutative(h4));
  EXPECT_FALSE(is_cocommutative(h4));
  EXPECT_FALSE(check_hopf(h4).contains("lambdasquareid"));
  EXPECT_NE(compose(s, s), id(h4.space()));
}

TEST(Hopf, SweedlerOverPrimeFields) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    EXPECT_TRUE(check_hopf(sweedler_h4(Field::prime(p))).ok()) << p;
  }
}

TEST(Hopf, GroupAntipodeIsInversion) {
  for (const auto& g : group_catalog(8)) {
    const HopfAlgebra h = group_algebra(g.table);
    EXPECT_EQ(solve_antipode(h.bi).antipode, gen::permutation_matrix(h.space(), g.table.inv)) << g.name;
    EXPECT_TRUE(check_hopf(h).passed("lambdasquareid"));
  }
}

TEST(Hopf, NoAntipodeForAMonoid) {
  const Bialgebra b = idempotent_monoid();
  EXPECT_TRUE(check_bialgebra(b).ok());
  EXPECT_THROW(solve_antipode(b), NoAntipode);
}

TEST(Hopf, DualIsTheTranspose) {
  for (const auto& [name, h] : hopf_catalog(8)) {
    const HopfAlgebra d = dual_hopf(h);
    EXPECT_EQ(d.prod(), transpose(h.coprod())) << name;
    EXPECT_EQ(d.coprod(), transpose(h.prod())) << name;
    EXPECT_EQ(d.unit(), transpose(h.counit())) << name;
    EXPECT_EQ(d.counit(), transpose(h.unit())) << name;
    EXPECT_EQ(d.antipode, transpose(h.antipode)) << name;
    EXPECT_EQ(is_commutative(d), is_cocommutative(h)) << name;
  }
}

TEST(Hopf, OppositeHasInverseAntipode) {
  for (const HopfAlgebra& h : {sweedler_h4(), group_algebra(dihedral_group(3))}) {
    const HopfAlgebra op = opposite_hopf(h);
    EXPECT_TRUE(check_hopf(op).ok());
    EXPECT_EQ(compose(op.antipode, h.antipode), id(h.space()));
  }
  HopfAlgebra bad = group_algebra(cyclic_group(2));
  bad.antipode = Morphism(bad.space(), bad.space());
  EXPECT_THROW(opposite_hopf(bad), AntipodeNotInvertible);
}

TEST(Hopf, TensorOfHopfAlgebras) {
  EXPECT_TRUE(check_hopf(tensor_hopf(group_algebra(cyclic_group(2)), sweedler_h4())).ok());
}

TEST(Hopf, AdjointActionCcIff) {
  for (const auto& [name, h] : hopf_catalog(8)) {
    const AdjointCcResult r = check_adjoint_cc_iff(h);
    EXPECT_TRUE(r.agrees()) << name;
    if (is_cocommutative(h) || is_commutative(h)) {
      EXPECT_TRUE(r.cc_class) << name;
    }
  }
  EXPECT_FALSE(check_adjoint_cc_iff(sweedler_h4()).cc_class);
}

TEST(Hopf, CcClassFormsAgreeOnTrivialAndRegular) {
  const HopfAlgebra h4 = sweedler_h4();
  EXPECT_TRUE(cc_class_check(trivial_action(h4, Space(3)), Space(3), h4));
  const CcClassForms f = cc_class_forms(h4.prod(), h4.space(), h4);
  EXPECT_EQ(f.ccclass, f.ccclass2);
  EXPECT_FALSE(f.ccclass);
}

TEST(Hopf, MutationsAreDetected) {
  std::mt19937_64 rng(32);
  const auto cat = hopf_catalog(6);
  for (int t = 0; t < 40; ++t) {
    HopfAlgebra h = cat[rng() % cat.size()].hopf;
    Morphism* maps[] = {&h.bi.alg.prod, &h.bi.coalg.coprod, &h.antipode};
    Morphism& f = *maps[rng() % 3];
    const std::size_t r = rng() % f.rows(), c = rng() % f.cols();
    f = f.with_entry(r, c, f.at(r, c) + 1);
    EXPECT_FALSE(check_hopf(h).ok());
  }
}
