#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hbl/morphism.hpp"

namespace hbl::gen {

// Small rationals, about a third of them zero so the sparse paths get exercised.
inline Scalar random_scalar(std::mt19937_64& rng) {
  if (rng() % 3 == 0) return Scalar(0);
  const long long num = static_cast<long long>(rng() % 7) - 3;
  const long long den = 1 + static_cast<long long>(rng() % 3);
  return Scalar(num, den);
}

inline Scalar random_residue(std::mt19937_64& rng, std::uint64_t p) {
  return Scalar::residue(static_cast<long long>(rng() % p), p);
}

inline Morphism random_morphism(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols));
  for (auto& row : m) {
    for (auto& x : row) x = random_scalar(rng);
  }
  return Morphism::from_rows(Space(cols), Space(rows), m);
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng() % i]);
  return p;
}

inline Morphism permutation_matrix(const Space& s, const std::vector<std::size_t>& p) {
  std::vector<SparseVector> cols(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) cols[i] = {{p[i], Scalar(1)}};
  return Morphism::from_columns(s, s, std::move(cols));
}

}  // namespace hbl::gen
