#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hbl/hopf.hpp"

namespace hbl {

/// A finite group on {0, ..., n-1} given by its multiplication table.
struct GroupTable {
  std::size_t n = 0;
  std::vector<std::size_t> op;   ///< op[a*n+b] = a·b
  std::size_t id = 0;
  std::vector<std::size_t> inv;

  std::size_t mul(std::size_t a, std::size_t b) const { return op[a * n + b]; }
  std::vector<std::vector<std::size_t>> rows() const;
  friend bool operator==(const GroupTable&, const GroupTable&) = default;
};

/// Latin square, associativity, two-sided identity. Does not throw.
bool is_group(std::size_t n, const std::vector<std::size_t>& op);

/// Validates the table and fills id and inv. Throws NotAGroup.
GroupTable make_group(std::size_t n, std::vector<std::size_t> op);
GroupTable make_group(const std::vector<std::vector<std::size_t>>& rows);

GroupTable cyclic_group(std::size_t n);
/// Order 2n; rotations r^k at k, reflections s·r^k at n+k.
GroupTable dihedral_group(std::size_t n);
GroupTable quaternion_group();
/// Flat index a·|H|+b.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

struct NamedGroup {
  std::string name;
  GroupTable table;
};

/// One representative per isomorphism class of order ≤ max_order (at most 8).
std::vector<NamedGroup> group_catalog(std::size_t max_order = 8);

/// Automorphisms as permutations of {0..n-1}, identity first.
std::vector<std::vector<std::size_t>> automorphisms(const GroupTable& g);

/// Basis names for group elements: "e" for the identity, "g<i>" otherwise.
Space group_space(const GroupTable& g);

/// K[G]: group-like basis, product from the table, antipode the inversion.
HopfAlgebra group_algebra(const GroupTable& g, const Field& field = Field::rationals());

}  // namespace hbl
