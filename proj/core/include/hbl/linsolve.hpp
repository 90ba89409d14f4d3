#pragma once

#include <optional>
#include <vector>

#include "hbl/morphism.hpp"

namespace hbl {

/// Column order in which Gauss-Jordan elimination picks pivots.
enum class PivotOrder { Forward, Reverse };

struct LinearSolution {
  std::vector<Scalar> x;  ///< one solution; free variables set to zero
  std::size_t rank = 0;
  bool unique = false;    ///< rank == number of unknowns
};

/// Solves A x = b exactly. nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(std::vector<std::vector<Scalar>> a,
                                           std::vector<Scalar> b,
                                           PivotOrder order = PivotOrder::Forward);

std::size_t rank(const Morphism& f);

/// Two-sided inverse, or nullopt when f is not square or singular.
std::optional<Morphism> inverse(const Morphism& f);

}  // namespace hbl
