#pragma once

// Independent oracles used by the tests: brute-force enumerations and a
// rational rank-nullity Betti computation that shares no code with the
// Smith-normal-form path it checks.

#include <gmpxx.h>

#include <vector>

#include "declab/gf.hpp"
#include "declab/poset.hpp"

namespace oracles {

// all p^n vectors of F_p^n
inline std::vector<std::vector<int>> all_vectors(int p, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(n, 0);
  while (true) {
    out.push_back(v);
    int i = n - 1;
    while (i >= 0 && ++v[i] == p) v[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

// perp by scanning every vector of the ambient space against every vector
// of the subspace
inline declab::gf::GFSubspace brute_perp(const declab::gf::GFSubspace& w,
                                         const declab::gf::SymplecticSpace& s) {
  auto members = declab::gf::enumerate_vectors(w);
  declab::gf::Matrix rows;
  for (const auto& z : all_vectors(s.p, s.dim())) {
    bool orth = true;
    for (const auto& m : members)
      if (s.form(z, m) != 0) { orth = false; break; }
    if (orth) rows.push_back(z);
  }
  return declab::gf::rref(s.p, s.dim(), rows);
}

inline long long gaussian_binomial(int p, int n, int k) {
  // ((p^n - 1)(p^n - p)...) / ((p^k - 1)(p^k - p)...)
  long long num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    long long pn = 1, pk = 1;
    for (int t = 0; t < n; ++t) pn *= p;
    for (int t = 0; t < k; ++t) pk *= p;
    long long pi = 1;
    for (int t = 0; t < i; ++t) pi *= p;
    num *= (pn - pi);
    den *= (pk - pi);
  }
  return num / den;
}

// reduced Betti numbers over Q by rank-nullity with plain fraction
// elimination (no pivoting tricks, no shared code with the SNF route)
inline std::vector<long long> betti_oracle(const declab::poset::SimplicialComplex& k) {
  int top = k.dimension();
  // ranks[d] = rank of the boundary map out of degree d (augmentation at 0)
  std::vector<long long> ranks(top + 3, 0);
  auto rank_of = [](std::vector<std::vector<mpq_class>> m) -> long long {
    long long r = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    size_t lead = 0;
    for (size_t row = 0; row < m.size() && lead < cols; ++lead) {
      size_t sel = row;
      while (sel < m.size() && m[sel][lead] == 0) ++sel;
      if (sel == m.size()) continue;
      std::swap(m[row], m[sel]);
      for (size_t other = 0; other < m.size(); ++other) {
        if (other == row || m[other][lead] == 0) continue;
        mpq_class f = m[other][lead] / m[row][lead];
        for (size_t c = lead; c < cols; ++c) m[other][c] -= f * m[row][c];
      }
      ++row;
      ++r;
    }
    return r;
  };
  if (top >= 0) {
    // augmentation
    ranks[0] = k.simplex_count(0) > 0 ? 1 : 0;
    for (int d = 1; d <= top; ++d) {
      std::vector<std::vector<mpq_class>> m(k.simplex_count(d - 1),
                                            std::vector<mpq_class>(k.simplex_count(d), 0));
      for (long long j = 0; j < k.simplex_count(d); ++j) {
        const auto& s = k.by_dim[d][j];
        for (int omit = 0; omit <= d; ++omit) {
          std::vector<int> face;
          for (int t = 0; t <= d; ++t)
            if (t != omit) face.push_back(s[t]);
          long long i = std::lower_bound(k.by_dim[d - 1].begin(), k.by_dim[d - 1].end(), face) -
                        k.by_dim[d - 1].begin();
          m[i][j] = (omit % 2 == 0) ? 1 : -1;
        }
      }
      ranks[d] = rank_of(std::move(m));
    }
  }
  std::vector<long long> betti(top + 2, 0);
  // index 0 holds reduced degree -1
  betti[0] = (top < 0) ? 1 : 0;
  for (int d = 0; d <= top; ++d) betti[d + 1] = k.simplex_count(d) - ranks[d] - ranks[d + 1];
  return betti;
}

}  // namespace oracles
