#include <gtest/gtest.h>

#include "generators.hpp"
#include "hbl/error.hpp"
#include "hbl/smash.hpp"
#include "hbl/group.hpp"

using namespace hbl;

namespace {

// Group-like action g ▷ b = f_g(b) of K[G] on K[A] given by automorphisms.
Morphism automorphism_action(const HopfAlgebra& g, const HopfAlgebra& a,
                             const std::vector<std::vector<std::size_t>>& f) {
  const std::size_t n = a.space().dim();
  std::vector<SparseVector> cols(g.space().dim() * n);
  for (std::size_t x = 0; x < g.space().dim(); ++x)
    for (std::size_t b = 0; b < n; ++b) cols[x * n + b] = {{f[x][b], Scalar(1)}};
  return Morphism::from_columns(tensor(g.space(), a.space()), a.space(), std::move(cols));
}

// K[C3] with C2 acting by inversion.
ModuleAlgebra inversion_c3() {
  const HopfAlgebra c3 = group_algebra(cyclic_group(3));
  const HopfAlgebra c2 = group_algebra(cyclic_group(2));
  return ModuleAlgebra{c3.algebra(), automorphism_action(c2, c3, {{0, 1, 2}, {0, 2, 1}}), c2};
}

// p_x ▷ g = δ_{x,g} g: K[G] as a K[G]*-module algebra.
ModuleHopf grading_action(const GroupTable& g) {
  const HopfAlgebra kg = group_algebra(g);
  const HopfAlgebra dual = dual_hopf(kg);
  std::vector<SparseVector> cols(g.n * g.n);
  for (std::size_t x = 0; x < g.n; ++x) cols[x * g.n + x] = {{x, Scalar(1)}};
  return ModuleHopf{kg, Morphism::from_columns(tensor(dual.space(), kg.space()), kg.space(), std::move(cols)), dual};
}

}  // namespace

TEST(Smash, TrivialActionGivesTensorAlgebra) {
  const HopfAlgebra c3 = group_algebra(cyclic_group(3));
  const HopfAlgebra h4 = group_algebra(cyclic_group(2));
  const ModuleAlgebra a{c3.algebra(), trivial_action(h4, c3.space()), h4};
  EXPECT_TRUE(check_module_algebra(a).ok());
  const Algebra sm = smash_algebra(a);
  EXPECT_EQ(sm.prod, tensor_algebra(c3.algebra(), h4.algebra()).prod);
  EXPECT_EQ(sm.unit, tensor_algebra(c3.algebra(), h4.algebra()).unit);
}

TEST(Smash, InversionActionGivesS3) {
  const ModuleAlgebra a = inversion_c3();
  ASSERT_TRUE(check_module_algebra(a).ok());
  const Algebra sm = smash_algebra(a);
  EXPECT_TRUE(check_algebra(sm).ok());
  // (r^a, s^h) ↦ r^a s^h; in the dihedral labelling r^a s = s r^{-a} sits at 3 + (-a mod 3).
  const HopfAlgebra d3 = group_algebra(dihedral_group(3));
  std::vector<std::size_t> p(6);
  for (std::size_t r = 0; r < 3; ++r) {
    p[r * 2 + 0] = r;
    p[r * 2 + 1] = 3 + (3 - r) % 3;
  }
  const Morphism pm = gen::permutation_matrix(sm.space, p);
  EXPECT_EQ(compose(pm, sm.prod), compose(d3.prod(), tensor(pm, pm)));
}

TEST(Smash, LeftMultiplicationIsNotAModuleAlgebra) {
  const HopfAlgebra c3 = group_algebra(cyclic_group(3));
  const ModuleAlgebra a{c3.algebra(), c3.prod(), c3};
  EXPECT_FALSE(check_module_algebra(a).ok());
  EXPECT_THROW(smash_algebra(a), PreconditionFailed);
}

TEST(Smash, SmashHopfChecksInOrder) {
  // Nonabelian grading: module algebra, but outside the cocommutativity class.
  EXPECT_THROW(smash_hopf(grading_action(dihedral_group(3))), NotInCCClass);
  // Abelian grading: cc class holds, module coalgebra fails.
  EXPECT_THROW(smash_hopf(grading_action(cyclic_group(3))), PreconditionFailed);
  // Left multiplication already fails the module algebra laws.
  const HopfAlgebra c3 = group_algebra(cyclic_group(3));
  EXPECT_THROW(smash_hopf(ModuleHopf{c3, c3.prod(), c3}), PreconditionFailed);
}

TEST(Smash, SmashHopfOfAdjointAction) {
  const HopfAlgebra s3 = group_algebra(dihedral_group(3));
  const ModuleStr ad = adjoint_action(s3);
  const HopfAlgebra sm = smash_hopf(ModuleHopf{s3, ad.action, s3});
  EXPECT_TRUE(check_hopf(sm).ok()) << check_hopf(sm).summary();
  EXPECT_EQ(sm.space().dim(), 36u);
}

TEST(Smash, ModuleCoalgebraFlagAgrees) {
  const HopfAlgebra s3 = group_algebra(dihedral_group(3));
  const LawReport rep = check_module_coalgebra(ModuleCoalgebra{s3.coalgebra(), adjoint_action(s3).action, s3});
  EXPECT_TRUE(rep.ok()) << rep.summary();
}

TEST(Smash, DualComoduleAlgebra) {
  const ModuleAlgebra a = inversion_c3();
  const ComoduleAlgebra c = dual_comodule_algebra(a);
  EXPECT_TRUE(check_comodule_algebra(c).ok());
  EXPECT_EQ(action_from_dual_coaction(c, a.over), a.action);
}

TEST(Smash, DoiHopfRoundTripOnRegularModule) {
  const ModuleAlgebra a = inversion_c3();
  const Algebra sm = smash_algebra(a);
  const ModuleStr reg{sm.space, sm.prod, sm};
  const DoiHopfModule d = functor_S(reg, a);
  EXPECT_TRUE(doi_hopf_check(d).ok()) << doi_hopf_check(d).summary();
  const ModuleStr back = functor_R(d, a);
  EXPECT_EQ(back.action, reg.action);
  // A module over the wrong algebra is refused.
  const ModuleStr wrong{sm.space, sm.prod.with_entry(0, 0, 5), sm};
  EXPECT_THROW(functor_S(wrong, a), PreconditionFailed);
}
