#include "hbl/group.hpp"

#include <algorithm>
#include <numeric>

#include "hbl/error.hpp"

namespace hbl {

std::vector<std::vector<std::size_t>> GroupTable::rows() const {
  std::vector<std::vector<std::size_t>> out(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) out[a][b] = mul(a, b);
  }
  return out;
}

namespace {

std::optional<std::size_t> find_identity(std::size_t n, const std::vector<std::size_t>& op) {
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = op[e * n + a] == a && op[a * n + e] == a;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace

bool is_group(std::size_t n, const std::vector<std::size_t>& op) {
  if (n == 0 || op.size() != n * n) return false;
  for (std::size_t v : op) {
    if (v >= n) return false;
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n), col(n);
    for (std::size_t b = 0; b < n; ++b) {
      if (row[op[a * n + b]] || col[op[b * n + a]]) return false;
      row[op[a * n + b]] = true;
      col[op[b * n + a]] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = op[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (op[ab * n + c] != op[a * n + op[b * n + c]]) return false;
      }
    }
  }
  return find_identity(n, op).has_value();
}

GroupTable make_group(std::size_t n, std::vector<std::size_t> op) {
  if (!is_group(n, op)) throw NotAGroup("table of order " + std::to_string(n) + " is not a group");
  GroupTable g;
  g.n = n;
  g.op = std::move(op);
  g.id = *find_identity(n, g.op);
  g.inv.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.mul(a, b) == g.id) g.inv[a] = b;
    }
  }
  return g;
}

GroupTable make_group(const std::vector<std::vector<std::size_t>>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::size_t> op;
  op.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw NotAGroup("group table is not square");
    op.insert(op.end(), r.begin(), r.end());
  }
  return make_group(n, std::move(op));
}

GroupTable cyclic_group(std::size_t n) {
  std::vector<std::size_t> op(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) op[a * n + b] = (a + b) % n;
  }
  return make_group(n, std::move(op));
}

GroupTable dihedral_group(std::size_t n) {
  // r^a s^x with s r = r^{-1} s; element (x, a) at x*n + a.
  const std::size_t m = 2 * n;
  std::vector<std::size_t> op(m * m);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      const std::size_t x = p / n, a = p % n, y = q / n, b = q % n;
      // (s^x r^a)(s^y r^b) = s^{x+y} r^{(-1)^y a + b}
      const std::size_t ra = y == 0 ? a : (n - a) % n;
      op[p * m + q] = ((x + y) % 2) * n + (ra + b) % n;
    }
  }
  return make_group(m, std::move(op));
}

GroupTable quaternion_group() {
  // Elements ±1, ±i, ±j, ±k encoded as sign*4 + unit, unit 0..3 = 1, i, j, k.
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::size_t> op(64);
  for (std::size_t p = 0; p < 8; ++p) {
    for (std::size_t q = 0; q < 8; ++q) {
      const std::size_t u = p % 4, v = q % 4;
      const std::size_t sign = (p / 4 + q / 4 + kSign[u][v]) % 2;
      op[p * 8 + q] = sign * 4 + kUnit[u][v];
    }
  }
  return make_group(8, std::move(op));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const std::size_t n = g.n * h.n;
  std::vector<std::size_t> op(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      op[p * n + q] = g.mul(p / h.n, q / h.n) * h.n + h.mul(p % h.n, q % h.n);
    }
  }
  return make_group(n, std::move(op));
}

std::vector<NamedGroup> group_catalog(std::size_t max_order) {
  if (max_order > 8) throw OrderTooLarge("the built-in group catalog stops at order 8");
  const GroupTable c2 = cyclic_group(2);
  std::vector<NamedGroup> all = {
      {"C1", cyclic_group(1)},
      {"C2", c2},
      {"C3", cyclic_group(3)},
      {"C4", cyclic_group(4)},
      {"V4", direct_product(c2, c2)},
      {"C5", cyclic_group(5)},
      {"C6", cyclic_group(6)},
      {"S3", dihedral_group(3)},
      {"C7", cyclic_group(7)},
      {"C8", cyclic_group(8)},
      {"C4xC2", direct_product(cyclic_group(4), c2)},
      {"C2^3", direct_product(direct_product(c2, c2), c2)},
      {"D4", dihedral_group(4)},
      {"Q8", quaternion_group()},
  };
  std::vector<NamedGroup> out;
  for (auto& g : all) {
    if (g.table.n <= max_order) out.push_back(std::move(g));
  }
  return out;
}

namespace {

// Extends a partial map from generators; returns false on conflict.
bool extend_hom(const GroupTable& g, std::vector<std::size_t>& img) {
  const std::size_t unset = g.n;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < g.n; ++a) {
      if (img[a] == unset) continue;
      for (std::size_t b = 0; b < g.n; ++b) {
        if (img[b] == unset) continue;
        const std::size_t ab = g.mul(a, b);
        const std::size_t want = g.mul(img[a], img[b]);
        if (img[ab] == unset) {
          img[ab] = want;
          changed = true;
        } else if (img[ab] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

void search_auts(const GroupTable& g, std::vector<std::size_t>& img,
                 std::vector<std::vector<std::size_t>>& out) {
  const std::size_t unset = g.n;
  auto it = std::find(img.begin(), img.end(), unset);
  if (it == img.end()) {
    std::vector<bool> seen(g.n);
    for (std::size_t v : img) {
      if (seen[v]) return;
      seen[v] = true;
    }
    out.push_back(img);
    return;
  }
  const std::size_t a = static_cast<std::size_t>(it - img.begin());
  for (std::size_t t = 0; t < g.n; ++t) {
    if (std::find(img.begin(), img.end(), t) != img.end()) continue;
    std::vector<std::size_t> next = img;
    next[a] = t;
    if (extend_hom(g, next)) search_auts(g, next, out);
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> automorphisms(const GroupTable& g) {
  std::vector<std::size_t> img(g.n, g.n);
  img[g.id] = g.id;
  std::vector<std::vector<std::size_t>> out;
  search_auts(g, img, out);
  std::sort(out.begin(), out.end());
  return out;
}

Space group_space(const GroupTable& g) {
  std::vector<std::string> names;
  names.reserve(g.n);
  for (std::size_t a = 0; a < g.n; ++a) names.push_back(a == g.id ? "e" : "g" + std::to_string(a));
  return Space(std::move(names));
}

HopfAlgebra group_algebra(const GroupTable& g, const Field& field) {
  const Space s = group_space(g);
  const Space ss = tensor(s, s);
  const std::size_t n = g.n;
  const Scalar one = Scalar(1).in(field);
  std::vector<SparseVector> unit(1), prod(n * n), counit(n), coprod(n), antipode(n);
  unit[0] = {{g.id, one}};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) prod[a * n + b] = {{g.mul(a, b), one}};
    counit[a] = {{0, one}};
    coprod[a] = {{a * n + a, one}};
    antipode[a] = {{g.inv[a], one}};
  }
  return make_hopf(s, Morphism::from_columns(Space::unit(), s, std::move(unit)),
                   Morphism::from_columns(ss, s, std::move(prod)),
                   Morphism::from_columns(s, Space::unit(), std::move(counit)),
                   Morphism::from_columns(s, ss, std::move(coprod)),
                   Morphism::from_columns(s, s, std::move(antipode)));
}

}  // namespace hbl
