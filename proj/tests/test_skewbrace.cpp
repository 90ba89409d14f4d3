#include <gtest/gtest.h>

#include <cstdlib>
#include <map>

#include "generators.hpp"
#include "hbl/error.hpp"
#include "hbl/skewbrace.hpp"

using namespace hbl;

namespace {

GroupTable find_group(const std::string& name) {
  for (const auto& g : group_catalog(8)) {
    if (g.name == name) return g.table;
  }
  throw std::runtime_error("no group " + name);
}

GroupTable opposite(const GroupTable& g) {
  std::vector<std::size_t> op(g.n * g.n);
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t b = 0; b < g.n; ++b) op[a * g.n + b] = g.mul(b, a);
  return make_group(g.n, op);
}

// Relabels both tables by the permutation p.
SkewBrace relabel(const SkewBrace& s, const std::vector<std::size_t>& p) {
  const std::size_t n = s.order();
  auto table = [&](const GroupTable& g) {
    std::vector<std::size_t> op(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) op[p[a] * n + p[b]] = p[g.mul(a, b)];
    return make_group(n, op);
  };
  return SkewBrace{table(s.dot), table(s.circ)};
}

}  // namespace

TEST(Group, CatalogHasOneGroupPerClass) {
  const auto cat = group_catalog(8);
  EXPECT_EQ(cat.size(), 14u);
  std::map<std::size_t, int> per_order;
  for (const auto& g : cat) {
    EXPECT_TRUE(is_group(g.table.n, g.table.op)) << g.name;
    ++per_order[g.table.n];
  }
  const std::map<std::size_t, int> expected = {{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 2}, {7, 1}, {8, 5}};
  EXPECT_EQ(per_order, expected);
}

TEST(Group, AutomorphismGroupOrders) {
  const std::map<std::string, std::size_t> expected = {
      {"C4", 2}, {"V4", 6}, {"C6", 2}, {"S3", 6}, {"C8", 4}, {"C4xC2", 8}, {"C2^3", 168}, {"D4", 8}, {"Q8", 24}};
  for (const auto& [name, order] : expected) {
    const auto autos = automorphisms(find_group(name));
    EXPECT_EQ(autos.size(), order) << name;
    for (std::size_t i = 0; i < autos.front().size(); ++i) EXPECT_EQ(autos.front()[i], i);
  }
}

TEST(Group, LabelledTableCounts) {
  // Tables with identity 0: sum over classes of (n-1)!/|Aut G|.
  EXPECT_EQ(all_group_tables(1).size(), 1u);
  EXPECT_EQ(all_group_tables(3).size(), 1u);
  EXPECT_EQ(all_group_tables(4).size(), 4u);
  EXPECT_EQ(all_group_tables(5).size(), 6u);
  EXPECT_EQ(all_group_tables(6).size(), 80u);
}

TEST(Group, RejectsNonGroups) {
  EXPECT_FALSE(is_group(2, {0, 1, 1, 1}));
  EXPECT_THROW(make_group(2, {0, 1, 1, 1}), NotAGroup);
  // Latin square with identity 0 that is not associative.
  EXPECT_FALSE(is_group(5, {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0}));
  EXPECT_THROW(make_group({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}), NotAGroup);
}

TEST(Group, DirectProductAndDihedral) {
  const GroupTable d3 = dihedral_group(3);
  EXPECT_EQ(d3.n, 6u);
  EXPECT_NE(d3.mul(1, 3), d3.mul(3, 1));
  const GroupTable c2c2 = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_EQ(automorphisms(c2c2).size(), 6u);
}

TEST(SkewBrace, TrivialAndOppositeBracesAreValid) {
  for (const auto& g : group_catalog(8)) {
    EXPECT_TRUE(check_skew_brace(SkewBrace{g.table, g.table})) << g.name;
    EXPECT_TRUE(check_skew_brace(SkewBrace{g.table, opposite(g.table)})) << g.name;
  }
}

TEST(SkewBrace, InvalidPairsAreRejected) {
  // C4 under · and C4 relabelled by the transposition (1 2) under ∘.
  const GroupTable c4 = cyclic_group(4);
  const SkewBrace swapped = relabel(SkewBrace{c4, c4}, {0, 2, 1, 3});
  EXPECT_FALSE(check_skew_brace(SkewBrace{c4, swapped.circ}));
  GroupTable shifted = cyclic_group(2);
  shifted.id = 1;
  EXPECT_THROW(check_skew_brace(SkewBrace{cyclic_group(2), shifted}), NotAGroup);
}

TEST(SkewBrace, CountsUpToOrderSix) {
  // Known numbers of skew braces of orders 1..6.
  const std::vector<std::size_t> expected = {1, 1, 1, 4, 1, 6};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto braces = enumerate_skew_braces(n);
    EXPECT_EQ(braces.size(), expected[n - 1]) << n;
    for (const auto& s : braces) {
      EXPECT_TRUE(check_skew_brace(s));
      EXPECT_EQ(canonical_form(s), s);
    }
  }
}

TEST(SkewBrace, EnumeratorsAgree) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(enumerate_skew_braces(n), enumerate_skew_braces_naive(n)) << n;
  }
}

TEST(SkewBrace, OrderCap) {
  EXPECT_THROW(enumerate_skew_braces(kDefaultMaxBraceOrder + 1), OrderTooLarge);
  EXPECT_THROW(enumerate_skew_braces_naive(7), OrderTooLarge);
}

TEST(SkewBraceProperty, CanonicalFormIsRelabelingInvariant) {
  std::mt19937_64 rng(41);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& s : enumerate_skew_braces(n)) {
      for (int t = 0; t < 5; ++t) {
        auto p = gen::random_permutation(rng, n);
        const SkewBrace r = relabel(s, p);
        EXPECT_TRUE(check_skew_brace(r));
        EXPECT_EQ(canonical_form(r), s);
      }
    }
  }
}

TEST(SkewBrace, SemidirectOfTrivialAbelianBraceIsDirect) {
  for (const auto& name : {"C2", "C3", "C4", "V4"}) {
    const GroupTable g = find_group(name);
    EXPECT_EQ(semidirect_product(SkewBrace{g, g}), direct_product(g, g)) << name;
  }
}

TEST(SkewBrace, SemidirectIsAGroupOfSquareOrder) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& s : enumerate_skew_braces(n)) {
      const GroupTable sd = semidirect_product(s);
      EXPECT_EQ(sd.n, n * n);
      EXPECT_TRUE(is_group(sd.n, sd.op));
    }
  }
  const SkewBrace swapped = relabel(SkewBrace{cyclic_group(4), cyclic_group(4)}, {0, 2, 1, 3});
  EXPECT_THROW(semidirect_product(SkewBrace{cyclic_group(4), swapped.circ}), PreconditionFailed);
}

TEST(SkewBrace, EnvOverrideRaisesCap) {
  ::setenv("HBL_MAX_ORDER", "8", 1);
  EXPECT_EQ(max_brace_order(), 8u);
  ::unsetenv("HBL_MAX_ORDER");
  EXPECT_EQ(max_brace_order(), kDefaultMaxBraceOrder);
}
