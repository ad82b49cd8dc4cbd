#include "declab/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace declab::poset {

void FinPoset::validate() const {
  check(static_cast<int>(leq.size()) == n, "poset: relation size mismatch");
  for (int i = 0; i < n; ++i) {
    check(static_cast<int>(leq[i].size()) == n, "poset: relation row size mismatch");
    check(leq[i][i], "poset: not reflexive");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) fail("poset: not antisymmetric");
      if (!leq[i][j]) continue;
      for (int t = 0; t < n; ++t)
        if (leq[j][t] && !leq[i][t]) fail("poset: not transitive");
    }
}

FinPoset antichain(int n) {
  FinPoset p;
  p.n = n;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) p.leq[i][i] = true;
  return p;
}

FinPoset chain(int n) {
  FinPoset p = antichain(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.leq[i][j] = true;
  return p;
}

FinPoset poset_from_relation(int n, const std::vector<std::pair<int, int>>& lt_pairs) {
  FinPoset p = antichain(n);
  for (auto [i, j] : lt_pairs) p.leq[i][j] = true;
  // transitive closure
  for (int t = 0; t < n; ++t)
    for (int i = 0; i < n; ++i)
      if (p.leq[i][t])
        for (int j = 0; j < n; ++j)
          if (p.leq[t][j]) p.leq[i][j] = true;
  p.validate();
  return p;
}

long long SimplicialComplex::euler_characteristic() const {
  long long chi = 0;
  for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * simplex_count(d);
  return chi;
}

void SimplicialComplex::validate() const {
  for (int d = 0; d <= dimension(); ++d) {
    check(std::is_sorted(by_dim[d].begin(), by_dim[d].end()), "complex: dimension list unsorted");
    check(std::adjacent_find(by_dim[d].begin(), by_dim[d].end()) == by_dim[d].end(),
          "complex: duplicate simplex");
    for (const auto& s : by_dim[d]) {
      check(static_cast<int>(s.size()) == d + 1, "complex: tuple size != dim+1");
      for (size_t i = 0; i + 1 < s.size(); ++i)
        check(s[i] < s[i + 1], "complex: tuple not strictly increasing");
      check(s.front() >= 0 && s.back() < vertex_count, "complex: vertex out of range");
      if (d == 0) continue;
      for (size_t omit = 0; omit < s.size(); ++omit) {
        std::vector<int> face;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != omit) face.push_back(s[i]);
        check(std::binary_search(by_dim[d - 1].begin(), by_dim[d - 1].end(), face),
              "complex: missing face");
      }
    }
  }
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
  std::vector<std::vector<int>> out;
  for (int d = 0; d <= dimension(); ++d) {
    for (const auto& s : by_dim[d]) {
      bool maximal = true;
      if (d + 1 <= dimension()) {
        // s is non-maximal iff it is a face of some (d+1)-simplex
        for (const auto& t : by_dim[d + 1]) {
          if (std::includes(t.begin(), t.end(), s.begin(), s.end())) { maximal = false; break; }
        }
      }
      if (maximal) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex order_complex(const FinPoset& p) {
  return order_complex_on_subset(p, std::vector<bool>(p.n, true));
}

SimplicialComplex order_complex_on_subset(const FinPoset& p, const std::vector<bool>& in_subset) {
  SimplicialComplex k;
  k.vertex_count = p.n;
  std::vector<int> chain_buf;
  // chains are generated in increasing poset order; tuples are recorded
  // sorted by element index
  auto record = [&](const std::vector<int>& c) {
    std::vector<int> tup = c;
    std::sort(tup.begin(), tup.end());
    int d = static_cast<int>(tup.size()) - 1;
    if (d >= static_cast<int>(k.by_dim.size())) k.by_dim.resize(d + 1);
    k.by_dim[d].push_back(std::move(tup));
  };
  std::vector<int> stack;
  auto extend = [&](auto&& self, int last) -> void {
    record(stack);
    for (int j = 0; j < p.n; ++j) {
      if (!in_subset[j] || !p.lt(last, j)) continue;
      stack.push_back(j);
      self(self, j);
      stack.pop_back();
    }
  };
  for (int i = 0; i < p.n; ++i) {
    if (!in_subset[i]) continue;
    stack.push_back(i);
    extend(extend, i);
    stack.pop_back();
  }
  for (auto& lst : k.by_dim) std::sort(lst.begin(), lst.end());
  return k;
}

EdgewiseSubdivision edgewise_subdivision(const FinPoset& p) {
  EdgewiseSubdivision sd;
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y)
      if (p.le(x, y)) sd.pairs.emplace_back(x, y);
  int m = static_cast<int>(sd.pairs.size());
  sd.poset.n = m;
  sd.poset.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto [x, y] = sd.pairs[i];
      auto [c, d] = sd.pairs[j];
      sd.poset.leq[i][j] = p.le(c, x) && p.le(y, d);
    }
  return sd;
}

FinPoset cone(const FinPoset& p, bool apex_on_top) {
  FinPoset out;
  out.n = p.n + 1;
  out.leq.assign(out.n, std::vector<bool>(out.n, false));
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) out.leq[i][j] = p.leq[i][j];
  out.leq[p.n][p.n] = true;
  for (int i = 0; i < p.n; ++i) {
    if (apex_on_top)
      out.leq[i][p.n] = true;
    else
      out.leq[p.n][i] = true;
  }
  return out;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  SimplicialComplex k;
  k.vertex_count = a.vertex_count + b.vertex_count;
  auto add = [&](std::vector<int> tup) {
    int d = static_cast<int>(tup.size()) - 1;
    if (d >= static_cast<int>(k.by_dim.size())) k.by_dim.resize(d + 1);
    k.by_dim[d].push_back(std::move(tup));
  };
  for (int da = -1; da <= a.dimension(); ++da)
    for (int db = -1; db <= b.dimension(); ++db) {
      if (da < 0 && db < 0) continue;
      long long ca = (da < 0) ? 1 : a.simplex_count(da);
      long long cb = (db < 0) ? 1 : b.simplex_count(db);
      for (long long i = 0; i < ca; ++i)
        for (long long j = 0; j < cb; ++j) {
          std::vector<int> tup;
          if (da >= 0) tup = a.by_dim[da][i];
          if (db >= 0)
            for (int v : b.by_dim[db][j]) tup.push_back(v + a.vertex_count);
          add(std::move(tup));
        }
    }
  for (auto& lst : k.by_dim) std::sort(lst.begin(), lst.end());
  return k;
}

void PosetMap::validate() const {
  check(static_cast<int>(assignment.size()) == source.n, "poset map: size mismatch");
  for (int v : assignment) check(v >= 0 && v < target.n, "poset map: target out of range");
  for (int i = 0; i < source.n; ++i)
    for (int j = 0; j < source.n; ++j)
      if (source.leq[i][j] && !target.leq[assignment[i]][assignment[j]])
        fail("poset map: not order-preserving");
}

namespace {

bool downward_closed(const FinPoset& p, const std::vector<bool>& s) {
  for (int j = 0; j < p.n; ++j) {
    if (!s[j]) continue;
    for (int i = 0; i < p.n; ++i)
      if (p.le(i, j) && !s[i]) return false;
  }
  return true;
}

bool upward_closed(const FinPoset& p, const std::vector<bool>& s) {
  for (int i = 0; i < p.n; ++i) {
    if (!s[i]) continue;
    for (int j = 0; j < p.n; ++j)
      if (p.le(i, j) && !s[j]) return false;
  }
  return true;
}

}  // namespace

NerveCover union_and_intersection(const FinPoset& p, const std::vector<bool>& a,
                                  const std::vector<bool>& b) {
  check(static_cast<int>(a.size()) == p.n && static_cast<int>(b.size()) == p.n,
        "union_and_intersection: subset size mismatch");
  bool ok = (downward_closed(p, a) && downward_closed(p, b)) ||
            (upward_closed(p, a) && upward_closed(p, b));
  check(ok, "union_and_intersection: subposets are not closed under chain extremes");
  std::vector<bool> u(p.n), inter(p.n);
  for (int i = 0; i < p.n; ++i) {
    u[i] = a[i] || b[i];
    inter[i] = a[i] && b[i];
  }
  NerveCover cov;
  cov.cover_union = order_complex_on_subset(p, u);
  cov.part_a = order_complex_on_subset(p, a);
  cov.part_b = order_complex_on_subset(p, b);
  cov.intersection = order_complex_on_subset(p, inter);
  // every chain in the union must lie in one of the parts
  for (int d = 0; d <= cov.cover_union.dimension(); ++d) {
    std::vector<std::vector<int>> merged;
    if (d <= cov.part_a.dimension()) merged = cov.part_a.by_dim[d];
    if (d <= cov.part_b.dimension())
      merged.insert(merged.end(), cov.part_b.by_dim[d].begin(), cov.part_b.by_dim[d].end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    check(merged == cov.cover_union.by_dim[d],
          "union_and_intersection: nerve of union is not the union of nerves");
  }
  return cov;
}

FinPoset random_poset(std::uint64_t seed, int max_n) {
  std::mt19937_64 rng(seed);
  int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 3 == 0) rel.emplace_back(order[i], order[j]);
  return poset_from_relation(n, rel);
}

namespace {

struct PosetInvariant {
  int indeg, outdeg, height, depth;
  auto operator<=>(const PosetInvariant&) const = default;
};

std::vector<PosetInvariant> poset_invariants(const FinPoset& p) {
  std::vector<PosetInvariant> inv(p.n);
  // height: longest chain below; depth: longest chain above
  std::vector<int> height(p.n, 0), depth(p.n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        if (p.lt(i, j)) {
          if (height[j] < height[i] + 1) { height[j] = height[i] + 1; changed = true; }
          if (depth[i] < depth[j] + 1) { depth[i] = depth[j] + 1; changed = true; }
        }
  }
  for (int i = 0; i < p.n; ++i) {
    int in = 0, out = 0;
    for (int j = 0; j < p.n; ++j) {
      if (p.lt(j, i)) ++in;
      if (p.lt(i, j)) ++out;
    }
    inv[i] = {in, out, height[i], depth[i]};
  }
  return inv;
}

bool iso_backtrack(const FinPoset& a, const FinPoset& b,
                   const std::vector<std::vector<int>>& candidates, std::vector<int>& img,
                   std::vector<bool>& used, int i) {
  if (i == a.n) return true;
  for (int j : candidates[i]) {
    if (used[j]) continue;
    bool ok = true;
    for (int t = 0; t < i && ok; ++t) {
      if (a.leq[i][t] != b.leq[j][img[t]]) ok = false;
      if (a.leq[t][i] != b.leq[img[t]][j]) ok = false;
    }
    if (!ok) continue;
    img[i] = j;
    used[j] = true;
    if (iso_backtrack(a, b, candidates, img, used, i + 1)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool poset_isomorphic(const FinPoset& a, const FinPoset& b) {
  if (a.n != b.n) return false;
  auto ia = poset_invariants(a), ib = poset_invariants(b);
  auto sa = ia, sb = ib;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<std::vector<int>> candidates(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < b.n; ++j)
      if (ia[i] == ib[j]) candidates[i].push_back(j);
  std::vector<int> img(a.n, -1);
  std::vector<bool> used(b.n, false);
  return iso_backtrack(a, b, candidates, img, used, 0);
}

}  // namespace declab::poset
