#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hbl/scalar.hpp"

namespace hbl {

/// A finite-dimensional vector space with an ordered basis.
///
/// Basis names are cosmetic: two spaces of equal dimension are the same
/// object of the ambient category, and morphism equality ignores names.
class Space {
 public:
  Space() = default;
  explicit Space(std::size_t dim) : dim_(dim) {}
  explicit Space(std::vector<std::string> basis);

  /// The monoidal unit K.
  static Space unit() { return Space(1); }

  std::size_t dim() const { return dim_; }
  bool labelled() const { return labels_ != nullptr; }
  /// Basis names; unlabelled spaces use e0, e1, ...
  std::vector<std::string> basis() const;
  std::string name(std::size_t i) const;

 private:
  std::size_t dim_ = 0;
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Left-major tensor product: basis vector (i, j) of A⊗B has index i*dim(B)+j.
Space tensor(const Space& a, const Space& b);
/// Dual space with the dual basis.
Space dual(const Space& a);

/// One column of a morphism: (row, value) pairs sorted by row, no zero values.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// An arrow dom → cod of the ambient category, stored column-wise.
///
/// Column j is the image of basis vector j of the domain. The public surface
/// is that of a dense cod.dim × dom.dim matrix; only nonzero entries are kept.
class Morphism {
 public:
  Morphism() = default;
  /// The zero morphism.
  Morphism(Space dom, Space cod);

  static Morphism identity(const Space& s);
  /// Row-major dense entries, `rows.size() == cod.dim()`.
  static Morphism from_rows(Space dom, Space cod, const std::vector<std::vector<Scalar>>& rows);
  /// Columns given directly; entries are re-sorted and zeros dropped.
  static Morphism from_columns(Space dom, Space cod, std::vector<SparseVector> cols);

  const Space& dom() const { return dom_; }
  const Space& cod() const { return cod_; }
  std::size_t rows() const { return cod_.dim(); }
  std::size_t cols() const { return dom_.dim(); }

  Scalar at(std::size_t row, std::size_t col) const;
  const SparseVector& column(std::size_t col) const { return cols_.at(col); }
  std::vector<std::vector<Scalar>> to_rows() const;
  std::size_t nonzeros() const;

  /// Copy with one entry replaced.
  Morphism with_entry(std::size_t row, std::size_t col, const Scalar& value) const;
  /// Copy relabelled with new (same-dimensional) spaces.
  Morphism retyped(Space dom, Space cod) const;
  /// Every entry mapped into `f`.
  Morphism in(const Field& f) const;

  bool is_zero() const;

  /// First (col-major) coordinate where the two differ; nullopt if equal.
  /// Throws ShapeMismatch when the shapes differ.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Morphism& other) const;

  friend bool operator==(const Morphism& a, const Morphism& b);
  friend bool operator!=(const Morphism& a, const Morphism& b) { return !(a == b); }

 private:
  Space dom_;
  Space cod_;
  std::vector<SparseVector> cols_;
};

inline Morphism id(const Space& s) { return Morphism::identity(s); }

/// g ∘ f. Throws DimensionMismatch unless f.cod == g.dom.
Morphism compose(const Morphism& g, const Morphism& f);

/// compose(a, b, c, ...) = a ∘ b ∘ c ∘ ...
template <typename... Rest>
Morphism compose(const Morphism& g, const Morphism& f, const Rest&... rest) {
  return compose(g, compose(f, rest...));
}

/// Kronecker product, left factor major.
Morphism tensor(const Morphism& f, const Morphism& g);

template <typename... Rest>
Morphism tensor(const Morphism& f, const Morphism& g, const Rest&... rest) {
  return tensor(tensor(f, g), rest...);
}

/// The symmetry c_{A,B}: A⊗B → B⊗A.
Morphism swap(const Space& a, const Space& b);

Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Scalar& s, const Morphism& f);
Morphism transpose(const Morphism& f);

/// Evaluation and coevaluation for a space and its dual basis.
struct DualPair {
  Space space;
  Space dual;
  Morphism coev;  ///< K → P⊗P*, 1 ↦ Σ e_i⊗e^i
  Morphism eval;  ///< P*⊗P → K, e^i⊗e_j ↦ δ_ij
};

DualPair dual_pair(const Space& p);

}  // namespace hbl
