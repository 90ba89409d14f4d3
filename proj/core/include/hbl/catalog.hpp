#pragma once

#include <string>
#include <vector>

#include "hbl/hopfbrace.hpp"

namespace hbl {

/// Sweedler's 4-dimensional Hopf algebra on 1, g, x, gx:
/// g² = 1, x² = 0, xg = -gx, δg = g⊗g, δx = x⊗1 + g⊗x.
HopfAlgebra sweedler_h4(const Field& field = Field::rationals());

struct NamedHopf {
  std::string name;
  HopfAlgebra hopf;
};

struct NamedBrace {
  std::string name;
  HopfBrace brace;
};

/// K[G] and K[G]* for every catalog group of order ≤ max_dim, plus H4 and H4*.
std::vector<NamedHopf> hopf_catalog(std::size_t max_dim = 8,
                                    const Field& field = Field::rationals());

/// Linearized skew braces of order ≤ max_order, trivial braces of the
/// non-cocommutative catalog duals and of H4, H4*, and the op braces (H, H^op)
/// of K[S3] and H4.
std::vector<NamedBrace> brace_catalog(std::size_t max_order = 4,
                                      const Field& field = Field::rationals());

/// Linearized enumerated skew braces only, named "skew<n>-<k>".
std::vector<NamedBrace> linearized_braces(std::size_t max_order,
                                          const Field& field = Field::rationals());

}  // namespace hbl
