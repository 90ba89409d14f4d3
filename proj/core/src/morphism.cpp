#include "hbl/morphism.hpp"

#include <algorithm>
#include <map>

#include "hbl/error.hpp"

namespace hbl {

namespace {

std::string shape(const Morphism& f) {
  return std::to_string(f.rows()) + "x" + std::to_string(f.cols());
}

// Sorts by row, merges duplicates, drops zeros.
SparseVector normalize(SparseVector v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  out.reserve(v.size());
  for (auto& [row, value] : v) {
    if (!out.empty() && out.back().first == row) {
      out.back().second += value;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!value.is_zero()) {
      out.emplace_back(row, std::move(value));
    }
  }
  return out;
}

}  // namespace

Space::Space(std::vector<std::string> basis)
    : dim_(basis.size()),
      labels_(std::make_shared<const std::vector<std::string>>(std::move(basis))) {}

std::vector<std::string> Space::basis() const {
  if (labels_) return *labels_;
  std::vector<std::string> names;
  names.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) names.push_back(name(i));
  return names;
}

std::string Space::name(std::size_t i) const {
  if (i >= dim_) throw ShapeMismatch("basis index out of range");
  return labels_ ? (*labels_)[i] : "e" + std::to_string(i);
}

// Labels are carried through products only while they stay short enough to read.
Space tensor(const Space& a, const Space& b) {
  constexpr std::size_t kMaxLabelled = 256;
  if (a.dim() == 1 && !a.labelled()) return b;
  if (b.dim() == 1 && !b.labelled()) return a;
  if (!a.labelled() || !b.labelled() || a.dim() * b.dim() > kMaxLabelled) {
    return Space(a.dim() * b.dim());
  }
  std::vector<std::string> names;
  names.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) names.push_back(a.name(i) + "⊗" + b.name(j));
  }
  return Space(std::move(names));
}

Space dual(const Space& a) {
  std::vector<std::string> names;
  names.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) names.push_back(a.name(i) + "*");
  return Space(std::move(names));
}

Morphism::Morphism(Space dom, Space cod)
    : dom_(std::move(dom)), cod_(std::move(cod)), cols_(dom_.dim()) {}

Morphism Morphism::identity(const Space& s) {
  Morphism m(s, s);
  for (std::size_t j = 0; j < s.dim(); ++j) m.cols_[j].emplace_back(j, Scalar(1));
  return m;
}

Morphism Morphism::from_rows(Space dom, Space cod, const std::vector<std::vector<Scalar>>& rows) {
  Morphism m(std::move(dom), std::move(cod));
  if (rows.size() != m.rows()) {
    throw ShapeMismatch("expected " + std::to_string(m.rows()) + " rows, got " +
                        std::to_string(rows.size()));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) {
      throw ShapeMismatch("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                          " entries, expected " + std::to_string(m.cols()));
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!rows[i][j].is_zero()) m.cols_[j].emplace_back(i, rows[i][j]);
    }
  }
  return m;
}

Morphism Morphism::from_columns(Space dom, Space cod, std::vector<SparseVector> cols) {
  Morphism m(std::move(dom), std::move(cod));
  if (cols.size() != m.cols()) {
    throw ShapeMismatch("expected " + std::to_string(m.cols()) + " columns, got " +
                        std::to_string(cols.size()));
  }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& entry : cols[j]) {
      if (entry.first >= m.rows()) throw ShapeMismatch("row index out of range");
    }
    m.cols_[j] = normalize(std::move(cols[j]));
  }
  return m;
}

Scalar Morphism::at(std::size_t row, std::size_t col) const {
  if (row >= rows()) throw ShapeMismatch("row index out of range");
  for (const auto& [r, v] : cols_.at(col)) {
    if (r == row) return v;
    if (r > row) break;
  }
  return Scalar(0);
}

std::vector<std::vector<Scalar>> Morphism::to_rows() const {
  std::vector<std::vector<Scalar>> out(rows(), std::vector<Scalar>(cols()));
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& [r, v] : cols_[j]) out[r][j] = v;
  }
  return out;
}

std::size_t Morphism::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

Morphism Morphism::with_entry(std::size_t row, std::size_t col, const Scalar& value) const {
  if (row >= rows() || col >= cols()) throw ShapeMismatch("entry out of range");
  Morphism m = *this;
  auto& c = m.cols_[col];
  auto it = std::find_if(c.begin(), c.end(), [row](const auto& e) { return e.first >= row; });
  if (it != c.end() && it->first == row) {
    if (value.is_zero()) {
      c.erase(it);
    } else {
      it->second = value;
    }
  } else if (!value.is_zero()) {
    c.insert(it, {row, value});
  }
  return m;
}

Morphism Morphism::retyped(Space dom, Space cod) const {
  if (dom.dim() != dom_.dim() || cod.dim() != cod_.dim()) {
    throw ShapeMismatch("retyped() must preserve dimensions");
  }
  Morphism m = *this;
  m.dom_ = std::move(dom);
  m.cod_ = std::move(cod);
  return m;
}

Morphism Morphism::in(const Field& f) const {
  Morphism m = *this;
  for (auto& c : m.cols_) {
    for (auto& e : c) e.second = e.second.in(f);
    c = normalize(std::move(c));
  }
  return m;
}

bool Morphism::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.empty(); });
}

std::optional<std::pair<std::size_t, std::size_t>> Morphism::first_difference(
    const Morphism& other) const {
  if (rows() != other.rows() || cols() != other.cols()) {
    throw ShapeMismatch("comparing " + shape(*this) + " with " + shape(other));
  }
  for (std::size_t j = 0; j < cols(); ++j) {
    const auto& a = cols_[j];
    const auto& b = other.cols_[j];
    std::size_t ia = 0;
    std::size_t ib = 0;
    while (ia < a.size() || ib < b.size()) {
      if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first)) return {{a[ia].first, j}};
      if (ia == a.size() || b[ib].first < a[ia].first) return {{b[ib].first, j}};
      if (a[ia].second != b[ib].second) return {{a[ia].first, j}};
      ++ia;
      ++ib;
    }
  }
  return std::nullopt;
}

bool operator==(const Morphism& a, const Morphism& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return !a.first_difference(b).has_value();
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.rows() != g.cols()) {
    throw DimensionMismatch("cannot compose " + shape(g) + " after " + shape(f));
  }
  std::vector<SparseVector> cols(f.cols());
  std::vector<Scalar> acc(g.rows());
  std::vector<char> touched(g.rows(), 0);
  std::vector<std::size_t> rows_hit;
  for (std::size_t j = 0; j < f.cols(); ++j) {
    rows_hit.clear();
    for (const auto& [k, a] : f.column(j)) {
      for (const auto& [r, b] : g.column(k)) {
        if (!touched[r]) {
          touched[r] = 1;
          rows_hit.push_back(r);
          acc[r] = a * b;
        } else {
          acc[r] += a * b;
        }
      }
    }
    std::sort(rows_hit.begin(), rows_hit.end());
    SparseVector col;
    col.reserve(rows_hit.size());
    for (std::size_t r : rows_hit) {
      touched[r] = 0;
      if (!acc[r].is_zero()) col.emplace_back(r, std::move(acc[r]));
    }
    cols[j] = std::move(col);
  }
  return Morphism::from_columns(f.dom(), g.cod(), std::move(cols));
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  const std::size_t gr = g.rows();
  const std::size_t gc = g.cols();
  std::vector<SparseVector> cols(f.cols() * gc);
  for (std::size_t i = 0; i < f.cols(); ++i) {
    for (std::size_t j = 0; j < gc; ++j) {
      SparseVector col;
      col.reserve(f.column(i).size() * g.column(j).size());
      for (const auto& [ra, a] : f.column(i)) {
        for (const auto& [rb, b] : g.column(j)) col.emplace_back(ra * gr + rb, a * b);
      }
      cols[i * gc + j] = std::move(col);
    }
  }
  return Morphism::from_columns(tensor(f.dom(), g.dom()), tensor(f.cod(), g.cod()),
                                std::move(cols));
}

Morphism swap(const Space& a, const Space& b) {
  std::vector<SparseVector> cols(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      cols[i * b.dim() + j].emplace_back(j * a.dim() + i, Scalar(1));
    }
  }
  return Morphism::from_columns(tensor(a, b), tensor(b, a), std::move(cols));
}

Morphism add(const Morphism& f, const Morphism& g) {
  if (f.rows() != g.rows() || f.cols() != g.cols()) {
    throw DimensionMismatch("cannot add " + shape(f) + " and " + shape(g));
  }
  std::vector<SparseVector> cols(f.cols());
  for (std::size_t j = 0; j < f.cols(); ++j) {
    cols[j] = f.column(j);
    cols[j].insert(cols[j].end(), g.column(j).begin(), g.column(j).end());
  }
  return Morphism::from_columns(f.dom(), f.cod(), std::move(cols));
}

Morphism scale(const Scalar& s, const Morphism& f) {
  std::vector<SparseVector> cols(f.cols());
  for (std::size_t j = 0; j < f.cols(); ++j) {
    for (const auto& [r, v] : f.column(j)) cols[j].emplace_back(r, s * v);
  }
  return Morphism::from_columns(f.dom(), f.cod(), std::move(cols));
}

Morphism transpose(const Morphism& f) {
  std::vector<SparseVector> cols(f.rows());
  for (std::size_t j = 0; j < f.cols(); ++j) {
    for (const auto& [r, v] : f.column(j)) cols[r].emplace_back(j, v);
  }
  return Morphism::from_columns(f.cod(), f.dom(), std::move(cols));
}

DualPair dual_pair(const Space& p) {
  Space pd = dual(p);
  const std::size_t n = p.dim();
  std::vector<SparseVector> coev(1);
  for (std::size_t i = 0; i < n; ++i) coev[0].emplace_back(i * n + i, Scalar(1));
  std::vector<SparseVector> eval(n * n);
  for (std::size_t i = 0; i < n; ++i) eval[i * n + i].emplace_back(0, Scalar(1));
  return DualPair{p, pd,
                  Morphism::from_columns(Space::unit(), tensor(p, pd), std::move(coev)),
                  Morphism::from_columns(tensor(pd, p), Space::unit(), std::move(eval))};
}

}  // namespace hbl
