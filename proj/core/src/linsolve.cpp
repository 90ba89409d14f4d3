#include "hbl/linsolve.hpp"

#include "hbl/error.hpp"

namespace hbl {

namespace {

struct Reduced {
  std::vector<std::vector<Scalar>> rows;
  std::vector<std::size_t> pivot_cols;  // pivot column of each of the first rank rows
};

// Gauss-Jordan on an augmented matrix; only the first `ncols` columns are pivot candidates.
Reduced reduce(std::vector<std::vector<Scalar>> m, std::size_t ncols, PivotOrder order) {
  Reduced out;
  std::size_t next_row = 0;
  for (std::size_t step = 0; step < ncols && next_row < m.size(); ++step) {
    std::size_t col = order == PivotOrder::Forward ? step : ncols - 1 - step;
    std::size_t pivot = next_row;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[next_row]);
    auto& prow = m[next_row];
    Scalar inv = prow[col].inverse();
    for (auto& v : prow) {
      if (!v.is_zero()) v *= inv;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == next_row || m[r][col].is_zero()) continue;
      Scalar factor = m[r][col];
      for (std::size_t c = 0; c < prow.size(); ++c) {
        if (!prow[c].is_zero()) m[r][c] -= factor * prow[c];
      }
    }
    out.pivot_cols.push_back(col);
    ++next_row;
  }
  out.rows = std::move(m);
  return out;
}

}  // namespace

std::optional<LinearSolution> solve_linear(std::vector<std::vector<Scalar>> a,
                                           std::vector<Scalar> b, PivotOrder order) {
  if (a.size() != b.size()) throw DimensionMismatch("right-hand side length differs from rows");
  const std::size_t n = a.empty() ? 0 : a.front().size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != n) throw DimensionMismatch("ragged coefficient matrix");
    a[i].push_back(b[i]);
  }
  Reduced red = reduce(std::move(a), n, order);
  const std::size_t rank = red.pivot_cols.size();
  for (std::size_t r = rank; r < red.rows.size(); ++r) {
    if (!red.rows[r][n].is_zero()) return std::nullopt;
  }
  LinearSolution sol;
  sol.x.assign(n, Scalar(0));
  for (std::size_t r = 0; r < rank; ++r) sol.x[red.pivot_cols[r]] = red.rows[r][n];
  sol.rank = rank;
  sol.unique = rank == n;
  return sol;
}

std::size_t rank(const Morphism& f) {
  return reduce(f.to_rows(), f.cols(), PivotOrder::Forward).pivot_cols.size();
}

std::optional<Morphism> inverse(const Morphism& f) {
  const std::size_t n = f.rows();
  if (n != f.cols()) return std::nullopt;
  auto m = f.to_rows();
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n, Scalar(0));
    m[i][n + i] = Scalar(1);
  }
  Reduced red = reduce(std::move(m), n, PivotOrder::Forward);
  if (red.pivot_cols.size() != n) return std::nullopt;
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv[red.pivot_cols[r]][c] = red.rows[r][n + c];
  }
  return Morphism::from_rows(f.cod(), f.dom(), inv);
}

}  // namespace hbl
