#include "hbl/catalog.hpp"

namespace hbl {

HopfAlgebra sweedler_h4(const Field& field) {
  // Basis index 2b + a for g^a x^b.
  const Space s(std::vector<std::string>{"1", "g", "x", "gx"});
  const Space ss = tensor(s, s);
  const Scalar one = Scalar(1).in(field);
  const Scalar minus = Scalar(-1).in(field);
  std::vector<SparseVector> prod(16);
  for (std::size_t p = 0; p < 4; ++p) {
    for (std::size_t q = 0; q < 4; ++q) {
      const std::size_t a = p % 2, b = p / 2, c = q % 2, d = q / 2;
      if (b + d == 2) continue;
      const Scalar sign = (b * c) % 2 == 1 ? minus : one;
      prod[p * 4 + q] = {{2 * (b + d) + (a + c) % 2, sign}};
    }
  }
  std::vector<SparseVector> coprod = {
      {{0, one}},                  // 1 ↦ 1⊗1
      {{1 * 4 + 1, one}},          // g ↦ g⊗g
      {{1 * 4 + 2, one}, {2 * 4 + 0, one}},  // x ↦ g⊗x + x⊗1
      {{0 * 4 + 3, one}, {3 * 4 + 1, one}},  // gx ↦ 1⊗gx + gx⊗g
  };
  std::vector<SparseVector> counit = {{{0, one}}, {{0, one}}, {}, {}};
  std::vector<SparseVector> antipode = {{{0, one}}, {{1, one}}, {{3, minus}}, {{2, one}}};
  std::vector<SparseVector> unit = {{{0, one}}};
  return make_hopf(s, Morphism::from_columns(Space::unit(), s, std::move(unit)),
                   Morphism::from_columns(ss, s, std::move(prod)),
                   Morphism::from_columns(s, Space::unit(), std::move(counit)),
                   Morphism::from_columns(s, ss, std::move(coprod)),
                   Morphism::from_columns(s, s, std::move(antipode)));
}

std::vector<NamedHopf> hopf_catalog(std::size_t max_dim, const Field& field) {
  std::vector<NamedHopf> out;
  for (const auto& g : group_catalog(std::min<std::size_t>(max_dim, 8))) {
    HopfAlgebra h = group_algebra(g.table, field);
    out.push_back({"K[" + g.name + "]*", dual_hopf(h)});
    out.push_back({"K[" + g.name + "]", std::move(h)});
  }
  if (max_dim >= 4) {
    HopfAlgebra h4 = sweedler_h4(field);
    out.push_back({"H4*", dual_hopf(h4)});
    out.push_back({"H4", std::move(h4)});
  }
  return out;
}

std::vector<NamedBrace> linearized_braces(std::size_t max_order, const Field& field) {
  std::vector<NamedBrace> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    const auto braces = enumerate_skew_braces(n);
    for (std::size_t k = 0; k < braces.size(); ++k) {
      out.push_back({"skew" + std::to_string(n) + "-" + std::to_string(k), linearize(braces[k], field)});
    }
  }
  return out;
}

std::vector<NamedBrace> brace_catalog(std::size_t max_order, const Field& field) {
  std::vector<NamedBrace> out = linearized_braces(max_order, field);
  const auto groups = group_catalog(8);
  auto group = [&](const std::string& name) {
    for (const auto& g : groups) {
      if (g.name == name) return group_algebra(g.table, field);
    }
    return group_algebra(cyclic_group(1), field);
  };
  const HopfAlgebra h4 = sweedler_h4(field);
  out.push_back({"triv(K[S3]*)", trivial_brace(dual_hopf(group("S3")))});
  out.push_back({"triv(K[D4]*)", trivial_brace(dual_hopf(group("D4")))});
  out.push_back({"triv(K[Q8]*)", trivial_brace(dual_hopf(group("Q8")))});
  out.push_back({"triv(H4)", trivial_brace(h4)});
  out.push_back({"triv(H4*)", trivial_brace(dual_hopf(h4))});
  out.push_back({"op(K[S3])", op_brace(group("S3"))});
  out.push_back({"op(H4)", op_brace(h4)});
  return out;
}

}  // namespace hbl
