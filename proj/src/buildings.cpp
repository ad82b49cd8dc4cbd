#include "declab/buildings.hpp"

#include <algorithm>
#include <map>

namespace declab::buildings {

namespace {

poset::FinPoset inclusion_poset(const std::vector<gf::GFSubspace>& labels) {
  poset::FinPoset p;
  p.n = static_cast<int>(labels.size());
  p.leq.assign(p.n, std::vector<bool>(p.n, false));
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      p.leq[i][j] = gf::subspace_leq(labels[i], labels[j]);
  return p;
}

}  // namespace

BuildingPoset tits_gl(int p, int k) {
  guard_cells(ipow(p, k), 512, "tits_gl");
  BuildingPoset b;
  b.kind = BuildingKind::GL;
  b.p = p;
  b.k = k;
  for (int d = 1; d <= k - 1; ++d) {
    auto subs = gf::enumerate_subspaces(p, k, d);
    b.labels.insert(b.labels.end(), subs.begin(), subs.end());
  }
  std::sort(b.labels.begin(), b.labels.end());
  b.poset = inclusion_poset(b.labels);
  return b;
}

BuildingPoset tits_sp(int p, int k) {
  guard_cells(ipow(p, 2 * k), 1000000, "tits_sp");
  BuildingPoset b;
  b.kind = BuildingKind::Sp;
  b.p = p;
  b.k = k;
  gf::SymplecticSpace s{p, k};
  for (int d = k; d <= 2 * k - 1; ++d) {
    for (auto& w : gf::enumerate_subspaces(p, 2 * k, d))
      if (gf::is_coisotropic(w, s)) b.labels.push_back(std::move(w));
  }
  std::sort(b.labels.begin(), b.labels.end());
  b.poset = inclusion_poset(b.labels);
  return b;
}

SuspensionModel suspension_model(int p, int k) {
  guard_cells(ipow(p, k), 512, "suspension_model");
  SuspensionModel m;
  m.p = p;
  m.k = k;
  auto all = gf::enumerate_subspaces(p, k, std::nullopt);
  for (const auto& h : all)
    for (const auto& kk : all) {
      if (!gf::subspace_leq(h, kk)) continue;
      if (h.dim() == 0 && kk.dim() == k) continue;  // excluded final pair
      m.pairs.emplace_back(h, kk);
    }
  int n = static_cast<int>(m.pairs.size());
  m.tdiamond.n = n;
  m.tdiamond.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.tdiamond.leq[i][j] = gf::subspace_leq(m.pairs[j].first, m.pairs[i].first) &&
                             gf::subspace_leq(m.pairs[i].second, m.pairs[j].second);
  m.cone_plus.resize(n);
  m.cone_minus.resize(n);
  m.sd_core.resize(n);
  for (int i = 0; i < n; ++i) {
    m.cone_plus[i] = m.pairs[i].first.dim() != 0;
    m.cone_minus[i] = m.pairs[i].second.dim() != k;
    m.sd_core[i] = m.cone_plus[i] && m.cone_minus[i];
  }
  return m;
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
  // restricted growth strings
  std::vector<SetPartition> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    int blocks = 0;
    for (int x : rgs) blocks = std::max(blocks, x + 1);
    SetPartition part(blocks);
    for (int i = 0; i < n; ++i) part[rgs[i]].push_back(i);
    out.push_back(std::move(part));
    // next restricted growth string
    int i = n - 1;
    while (i > 0) {
      int maxprev = 0;
      for (int t = 0; t < i; ++t) maxprev = std::max(maxprev, rgs[t]);
      if (rgs[i] <= maxprev) break;
      --i;
    }
    if (i == 0) break;
    ++rgs[i];
    for (int t = i + 1; t < n; ++t) rgs[t] = 0;
  }
  for (auto& part : out) std::sort(part.begin(), part.end());
  return out;
}

bool partition_refines(const SetPartition& fine, const SetPartition& coarse) {
  for (const auto& fb : fine) {
    bool found = false;
    for (const auto& cb : coarse)
      if (std::includes(cb.begin(), cb.end(), fb.begin(), fb.end())) { found = true; break; }
    if (!found) return false;
  }
  return true;
}

PartitionFixedPoints partition_fixed_points(int p, int k) {
  long long n = ipow(p, k);
  guard_cells(n, 8, "partition_fixed_points");
  int nn = static_cast<int>(n);
  // points of F_p^k indexed 0..n-1, mixed-radix; translations act by index
  std::vector<std::vector<int>> pts(nn, std::vector<int>(k));
  for (int idx = 0; idx < nn; ++idx) {
    int v = idx;
    for (int t = k - 1; t >= 0; --t) {
      pts[idx][t] = v % p;
      v /= p;
    }
  }
  auto translate_index = [&](int idx, int by) {
    int out = 0;
    for (int t = 0; t < k; ++t) out = out * p + (pts[idx][t] + pts[by][t]) % p;
    return out;
  };
  PartitionFixedPoints fp;
  for (auto& part : enumerate_set_partitions(nn)) {
    if (part.size() < 2 || static_cast<int>(part.size()) >= nn) continue;  // proper, nontrivial
    ++fp.proper_nontrivial_count;
    bool invariant = true;
    for (int by = 0; by < nn && invariant; ++by) {
      for (const auto& block : part) {
        std::vector<int> image;
        for (int x : block) image.push_back(translate_index(x, by));
        std::sort(image.begin(), image.end());
        if (!std::binary_search(part.begin(), part.end(), image)) { invariant = false; break; }
      }
    }
    if (invariant) fp.labels.push_back(std::move(part));
  }
  int m = static_cast<int>(fp.labels.size());
  fp.poset.n = m;
  fp.poset.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) fp.poset.leq[i][j] = partition_refines(fp.labels[i], fp.labels[j]);
  return fp;
}

poset::FinPoset bottom_extended_partition_poset(int p) {
  guard_cells(p, 5, "bottom_extended_partition_poset");
  std::vector<SetPartition> parts;
  for (auto& part : enumerate_set_partitions(p))
    if (part.size() >= 2) parts.push_back(std::move(part));
  int m = static_cast<int>(parts.size());
  poset::FinPoset out;
  out.n = m;
  out.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.leq[i][j] = partition_refines(parts[i], parts[j]);
  return out;
}

SphereReport sphere_count_report(const BuildingPoset& b) {
  SphereReport rep;
  rep.expected_degree = (b.kind == BuildingKind::GL) ? b.k - 2 : b.k - 1;
  rep.report = homology::homology(poset::order_complex(b.poset), true);
  rep.rank = rep.report.betti_at(rep.expected_degree);
  rep.torsion_free = rep.report.torsion_free();
  rep.concentrated = true;
  for (const auto& d : rep.report.degrees)
    if (d.degree != rep.expected_degree && (d.betti != 0 || !d.torsion.empty()))
      rep.concentrated = false;
  return rep;
}

}  // namespace declab::buildings
