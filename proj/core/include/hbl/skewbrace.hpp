#pragma once

#include <cstddef>
#include <vector>

#include "hbl/group.hpp"

namespace hbl {

/// (G, ·, ∘) on {0..n-1} with a common identity.
struct SkewBrace {
  GroupTable dot;
  GroupTable circ;

  std::size_t order() const { return dot.n; }
  friend bool operator==(const SkewBrace&, const SkewBrace&) = default;
};

/// a∘(b·c) = (a∘b)·a⁻¹·(a∘c) for all triples. Throws NotAGroup when either
/// table is not a group or the identities differ.
bool check_skew_brace(const SkewBrace& s);

/// Default cap on enumeration order; HBL_MAX_ORDER overrides it.
constexpr std::size_t kDefaultMaxBraceOrder = 6;
std::size_t max_brace_order();

/// Skew braces of order n up to isomorphism, in canonical form, sorted.
///
/// For each additive group G, builds a∘b = a·λ_a(b) with λ: (G,∘) → Aut(G,·)
/// a homomorphism, filling λ by backtracking with propagation.
/// Throws OrderTooLarge above max_brace_order().
std::vector<SkewBrace> enumerate_skew_braces(std::size_t n);

/// Independent check: every normalized group table on {0..n-1}, every pair
/// tested against the brace identity, canonicalized. Throws OrderTooLarge above 6.
std::vector<SkewBrace> enumerate_skew_braces_naive(std::size_t n);

/// Group tables on {0..n-1} with identity 0.
std::vector<GroupTable> all_group_tables(std::size_t n);

/// Lexicographically least relabeling over permutations fixing the identity.
/// Identity is moved to 0 first.
SkewBrace canonical_form(const SkewBrace& s);

/// G_· ⋊ G_∘ with g ▷ b = (g∘b)·g⁻¹ and (a,g)(b,h) = (a·(g▷b), g∘h);
/// element (a, g) at a·n+g. Throws PreconditionFailed on an invalid brace.
GroupTable semidirect_product(const SkewBrace& s);

}  // namespace hbl
