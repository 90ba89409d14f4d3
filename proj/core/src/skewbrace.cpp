#include "hbl/skewbrace.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "hbl/error.hpp"

namespace hbl {

bool check_skew_brace(const SkewBrace& s) {
  if (!is_group(s.dot.n, s.dot.op) || !is_group(s.circ.n, s.circ.op)) {
    throw NotAGroup("skew brace component is not a group");
  }
  if (s.dot.n != s.circ.n) throw NotAGroup("skew brace tables have different orders");
  if (s.dot.id != s.circ.id) throw NotAGroup("skew brace tables have different identities");
  const std::size_t n = s.order();
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t ai = s.dot.inv[a];
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = s.circ.mul(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t lhs = s.circ.mul(a, s.dot.mul(b, c));
        const std::size_t rhs = s.dot.mul(s.dot.mul(ab, ai), s.circ.mul(a, c));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

std::size_t max_brace_order() {
  if (const char* env = std::getenv("HBL_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxBraceOrder;
}

namespace {

using Perm = std::vector<std::size_t>;

std::vector<std::size_t> relabel(const GroupTable& g, const Perm& p) {
  const std::size_t n = g.n;
  std::vector<std::size_t> op(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) op[p[a] * n + p[b]] = p[g.mul(a, b)];
  }
  return op;
}

// Key used for canonical ordering: dot table then circ table.
std::vector<std::size_t> key_under(const SkewBrace& s, const Perm& p) {
  std::vector<std::size_t> k = relabel(s.dot, p);
  std::vector<std::size_t> c = relabel(s.circ, p);
  k.insert(k.end(), c.begin(), c.end());
  return k;
}

SkewBrace from_key(std::size_t n, const std::vector<std::size_t>& k) {
  std::vector<std::size_t> dot(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n * n));
  std::vector<std::size_t> circ(k.begin() + static_cast<std::ptrdiff_t>(n * n), k.end());
  return SkewBrace{make_group(n, std::move(dot)), make_group(n, std::move(circ))};
}

// Backtracking state: lambda[a] is an index into auts, or unset.
struct LambdaSearch {
  const GroupTable& g;
  const std::vector<Perm>& auts;
  std::map<Perm, std::size_t> aut_index;
  std::vector<std::vector<std::size_t>> aut_mul;  // index of auts[x]∘auts[y]
  std::vector<std::vector<std::size_t>> found;    // complete lambda assignments
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  LambdaSearch(const GroupTable& grp, const std::vector<Perm>& a) : g(grp), auts(a) {
    for (std::size_t i = 0; i < auts.size(); ++i) aut_index[auts[i]] = i;
    aut_mul.assign(auts.size(), std::vector<std::size_t>(auts.size()));
    for (std::size_t x = 0; x < auts.size(); ++x) {
      for (std::size_t y = 0; y < auts.size(); ++y) {
        Perm p(g.n);
        for (std::size_t i = 0; i < g.n; ++i) p[i] = auts[x][auts[y][i]];
        aut_mul[x][y] = aut_index.at(p);
      }
    }
  }

  // λ_{a·λ_a(b)} = λ_a λ_b for all assigned a, b; forces new values where possible.
  bool propagate(std::vector<std::size_t>& lam) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < g.n; ++a) {
        if (lam[a] == kUnset) continue;
        for (std::size_t b = 0; b < g.n; ++b) {
          if (lam[b] == kUnset) continue;
          const std::size_t c = g.mul(a, auts[lam[a]][b]);
          const std::size_t want = aut_mul[lam[a]][lam[b]];
          if (lam[c] == kUnset) {
            lam[c] = want;
            changed = true;
          } else if (lam[c] != want) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void run(std::vector<std::size_t> lam) {
    if (!propagate(lam)) return;
    auto it = std::find(lam.begin(), lam.end(), kUnset);
    if (it == lam.end()) {
      found.push_back(std::move(lam));
      return;
    }
    for (std::size_t x = 0; x < auts.size(); ++x) {
      std::vector<std::size_t> next = lam;
      next[static_cast<std::size_t>(it - lam.begin())] = x;
      run(std::move(next));
    }
  }
};

std::vector<Perm> perms_fixing(std::size_t n, std::size_t fixed) {
  Perm rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != fixed) rest.push_back(i);
  }
  std::vector<Perm> out;
  Perm targets = rest;
  do {
    Perm p(n);
    p[fixed] = fixed;
    for (std::size_t i = 0; i < rest.size(); ++i) p[rest[i]] = targets[i];
    out.push_back(std::move(p));
  } while (std::next_permutation(targets.begin(), targets.end()));
  return out;
}

std::vector<SkewBrace> dedup_sorted(std::vector<SkewBrace> v) {
  std::vector<std::pair<std::vector<std::size_t>, SkewBrace>> keyed;
  Perm ident;
  for (auto& s : v) {
    ident.resize(s.order());
    std::iota(ident.begin(), ident.end(), 0);
    keyed.emplace_back(key_under(s, ident), std::move(s));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<SkewBrace> out;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) out.push_back(std::move(keyed[i].second));
  }
  return out;
}

}  // namespace

SkewBrace canonical_form(const SkewBrace& s) {
  const std::size_t n = s.order();
  // Move the identity to 0.
  Perm to_zero(n);
  std::iota(to_zero.begin(), to_zero.end(), 0);
  std::swap(to_zero[0], to_zero[s.dot.id]);
  SkewBrace z = from_key(n, key_under(s, to_zero));
  std::vector<std::size_t> best;
  for (const Perm& p : perms_fixing(n, 0)) {
    auto k = key_under(z, p);
    if (best.empty() || k < best) best = std::move(k);
  }
  return from_key(n, best);
}

std::vector<SkewBrace> enumerate_skew_braces(std::size_t n) {
  if (n == 0) return {};
  if (n > max_brace_order()) {
    throw OrderTooLarge("order " + std::to_string(n) + " exceeds the enumeration cap " +
                        std::to_string(max_brace_order()) + " (set HBL_MAX_ORDER)");
  }
  std::vector<GroupTable> additive;
  if (n <= 8) {
    for (auto& g : group_catalog(8)) {
      if (g.table.n == n) additive.push_back(g.table);
    }
  } else {
    // Beyond the catalog, fall back to all tables and let dedup merge isomorphic ones.
    additive = all_group_tables(n);
  }
  std::vector<SkewBrace> out;
  for (const GroupTable& g : additive) {
    const std::vector<Perm> auts = automorphisms(g);
    LambdaSearch search(g, auts);
    std::vector<std::size_t> lam(n, LambdaSearch::kUnset);
    lam[g.id] = 0;  // automorphisms() lists the identity first
    search.run(std::move(lam));
    for (const auto& l : search.found) {
      std::vector<std::size_t> circ(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) circ[a * n + b] = g.mul(a, auts[l[a]][b]);
      }
      out.push_back(canonical_form(SkewBrace{g, make_group(n, std::move(circ))}));
    }
  }
  return dedup_sorted(std::move(out));
}

namespace {

void fill_tables(std::size_t n, std::vector<std::size_t>& op, std::size_t cell,
                 std::vector<GroupTable>& out) {
  if (cell == n * n) {
    if (is_group(n, op)) out.push_back(make_group(n, op));
    return;
  }
  const std::size_t a = cell / n, b = cell % n;
  if (a == 0 || b == 0) {
    op[cell] = a == 0 ? b : a;
    fill_tables(n, op, cell + 1, out);
    return;
  }
  for (std::size_t v = 0; v < n; ++v) {
    bool clash = false;
    for (std::size_t j = 0; j < b && !clash; ++j) clash = op[a * n + j] == v;
    for (std::size_t i = 0; i < a && !clash; ++i) clash = op[i * n + b] == v;
    if (clash) continue;
    op[cell] = v;
    // Associativity on fully known triples ending at this cell.
    bool ok = true;
    for (std::size_t x = 0; x <= a && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) {
        const std::size_t xy_cell = x * n + y;
        if (xy_cell > cell) break;
        const std::size_t xy = op[xy_cell];
        for (std::size_t z = 0; z < n && ok; ++z) {
          const std::size_t yz_cell = y * n + z;
          if (yz_cell > cell) break;
          const std::size_t yz = op[yz_cell];
          const std::size_t l_cell = xy * n + z, r_cell = x * n + yz;
          if (l_cell <= cell && r_cell <= cell) ok = op[l_cell] == op[r_cell];
        }
      }
    }
    if (ok) fill_tables(n, op, cell + 1, out);
  }
}

}  // namespace

std::vector<GroupTable> all_group_tables(std::size_t n) {
  if (n == 0) return {};
  std::vector<std::size_t> op(n * n);
  std::vector<GroupTable> out;
  fill_tables(n, op, 0, out);
  return out;
}

std::vector<SkewBrace> enumerate_skew_braces_naive(std::size_t n) {
  if (n > 6) throw OrderTooLarge("the naive enumerator is limited to order 6");
  const std::vector<GroupTable> tables = all_group_tables(n);
  std::vector<SkewBrace> out;
  for (const auto& dot : tables) {
    for (const auto& circ : tables) {
      SkewBrace s{dot, circ};
      if (check_skew_brace(s)) out.push_back(canonical_form(s));
    }
  }
  return dedup_sorted(std::move(out));
}

GroupTable semidirect_product(const SkewBrace& s) {
  bool valid = false;
  try {
    valid = check_skew_brace(s);
  } catch (const NotAGroup&) {
  }
  if (!valid) throw PreconditionFailed("semidirect product needs a valid skew brace");
  const std::size_t n = s.order();
  const std::size_t m = n * n;
  auto act = [&](std::size_t g, std::size_t b) {
    return s.dot.mul(s.circ.mul(g, b), s.dot.inv[g]);
  };
  std::vector<std::size_t> op(m * m);
  for (std::size_t p = 0; p < m; ++p) {
    const std::size_t a = p / n, g = p % n;
    for (std::size_t q = 0; q < m; ++q) {
      const std::size_t b = q / n, h = q % n;
      op[p * m + q] = s.dot.mul(a, act(g, b)) * n + s.circ.mul(g, h);
    }
  }
  return make_group(m, std::move(op));
}

}  // namespace hbl
