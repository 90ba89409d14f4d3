#include <gtest/gtest.h>

#include "generators.hpp"
#include "hbl/catalog.hpp"
#include "hbl/error.hpp"

using namespace hbl;

namespace {

// Γ(a⊗b) = a⁻¹·(a∘b) and Γ′(a⊗b) = (a∘b)·a⁻¹ computed on the tables.
std::pair<Morphism, Morphism> gamma_from_tables(const SkewBrace& s, const Space& sp) {
  const std::size_t n = s.order();
  std::vector<SparseVector> g(n * n), gp(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = s.circ.mul(a, b);
      g[a * n + b] = {{s.dot.mul(s.dot.inv[a], ab), Scalar(1)}};
      gp[a * n + b] = {{s.dot.mul(ab, s.dot.inv[a]), Scalar(1)}};
    }
  }
  const Space ss = tensor(sp, sp);
  return {Morphism::from_columns(ss, sp, std::move(g)), Morphism::from_columns(ss, sp, std::move(gp))};
}

HopfAlgebra relabelled(const HopfAlgebra& h, const std::vector<std::size_t>& p) {
  const Morphism pm = gen::permutation_matrix(h.space(), p);
  const Morphism qm = *inverse(pm);
  return make_hopf(h.space(), compose(pm, h.unit()), compose(pm, h.prod(), tensor(qm, qm)),
                   compose(h.counit(), qm), compose(tensor(pm, pm), h.coprod(), qm), compose(pm, h.antipode, qm));
}

}  // namespace

TEST(HopfBrace, LinearizedBracesPassEveryCheck) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& s : enumerate_skew_braces(n)) {
      const HopfBrace b = linearize(s);
      EXPECT_TRUE(check_hopf_brace(b).ok()) << check_hopf_brace(b).summary();
      EXPECT_TRUE(reconstruct_mu2(b).ok());
      EXPECT_TRUE(check_gamma_module_algebras(b).ok());
      const auto [g, gp] = gamma_from_tables(s, b.space());
      EXPECT_EQ(b.gamma(), g);
      EXPECT_EQ(b.gamma_prime(), gp);
    }
  }
}

TEST(HopfBrace, TrivialBraceGammas) {
  for (const auto& [name, h] : hopf_catalog(8)) {
    const HopfBrace b = trivial_brace(h);
    EXPECT_EQ(b.gamma(), trivial_action(h, h.space())) << name;
    EXPECT_EQ(b.gamma_prime(), adjoint_action(h).action) << name;
    EXPECT_TRUE(check_hopf_brace(b).ok()) << name;
  }
}

TEST(HopfBrace, CatalogBraces) {
  for (const auto& [name, b] : brace_catalog(4)) {
    EXPECT_TRUE(check_hopf_brace(b).ok()) << name << ": " << check_hopf_brace(b).summary();
    EXPECT_TRUE(reconstruct_mu2(b).ok()) << name;
    EXPECT_TRUE(check_gamma_module_algebras(b).ok()) << name;
    EXPECT_TRUE(gamma_coalgebra_morphism_check(b).implications_hold()) << name;
  }
}

TEST(HopfBrace, ConstructorPreconditions) {
  const HopfAlgebra c2 = group_algebra(cyclic_group(2));
  EXPECT_THROW(HopfBrace(c2, dual_hopf(c2)), PreconditionFailed);
  // Swapping the two group-likes keeps the coalgebra but moves the unit.
  EXPECT_THROW(HopfBrace(c2, relabelled(c2, {1, 0})), DistinctUnits);
  HopfAlgebra not_hopf = c2;
  not_hopf.antipode = Morphism(c2.space(), c2.space());
  EXPECT_THROW(trivial_brace(not_hopf), PreconditionFailed);
  EXPECT_THROW(op_brace(not_hopf), PreconditionFailed);
}

TEST(HopfBrace, CharacterizationMatchesSetLevelCheck) {
  // Every pair of labelled group tables of order 4 with identity 0.
  const auto tables = all_group_tables(4);
  int braces = 0;
  for (const auto& dot : tables) {
    for (const auto& circ : tables) {
      const BraceCharResult r = brace_char_equiv(group_algebra(dot), group_algebra(circ));
      EXPECT_TRUE(r.agree());
      EXPECT_EQ(r.is_brace, check_skew_brace(SkewBrace{dot, circ}));
      braces += r.is_brace;
    }
  }
  EXPECT_GT(braces, 4);
  EXPECT_LT(braces, 16);
}

TEST(HopfBrace, AntipodeMutationsBreakReconstruction) {
  std::mt19937_64 rng(51);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& s : enumerate_skew_braces(n)) {
      const HopfBrace b = linearize(s);
      HopfAlgebra h1 = b.h1();
      const std::size_t r = rng() % n, c = rng() % n;
      h1.antipode = h1.antipode.with_entry(r, c, h1.antipode.at(r, c) + 1);
      EXPECT_FALSE(reconstruct_mu2(HopfBrace(h1, b.h2())).ok());
    }
  }
}

TEST(HopfBrace, BraceSmashNeedsABrace) {
  const auto tables = all_group_tables(4);
  for (const auto& dot : tables) {
    for (const auto& circ : tables) {
      if (check_skew_brace(SkewBrace{dot, circ})) continue;
      EXPECT_THROW(brace_smash(HopfBrace(group_algebra(dot), group_algebra(circ))), PreconditionFailed);
      return;
    }
  }
}

TEST(HopfBrace, OpBraceOfSweedler) {
  const HopfBrace b = op_brace(sweedler_h4());
  EXPECT_TRUE(check_hopf_brace(b).ok());
  const GammaCoalgebraResult g = gamma_coalgebra_morphism_check(b);
  EXPECT_FALSE(g.cc_gamma);
  EXPECT_TRUE(g.implications_hold());
}

TEST(HopfBrace, LinearizeOverPrimeField) {
  for (const auto& s : enumerate_skew_braces(4)) {
    EXPECT_TRUE(check_hopf_brace(linearize(s, Field::prime(3))).ok());
  }
}
