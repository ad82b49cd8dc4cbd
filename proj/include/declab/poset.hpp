#pragma once

// Finite posets, order complexes, edgewise subdivision (twisted arrow pairs),
// cones, joins, and order-preserving maps.

#include <cstdint>
#include <utility>
#include <vector>

#include "declab/common.hpp"

namespace declab::poset {

struct FinPoset {
  int n = 0;
  std::vector<std::vector<bool>> leq;  // leq[i][j]: i <= j

  bool le(int i, int j) const { return leq[i][j]; }
  bool lt(int i, int j) const { return i != j && leq[i][j]; }
  void validate() const;  // reflexive, antisymmetric, transitive
};

FinPoset antichain(int n);
FinPoset chain(int n);
FinPoset poset_from_relation(int n, const std::vector<std::pair<int, int>>& lt_pairs);

// Per-dimension sorted tuples (strictly increasing vertex indices), closed
// under taking faces. Vertices that appear in no listed 0-simplex do not
// contribute to the complex.
struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<std::vector<std::vector<int>>> by_dim;

  int dimension() const { return static_cast<int>(by_dim.size()) - 1; }
  long long simplex_count(int d) const {
    return (d >= 0 && d <= dimension()) ? static_cast<long long>(by_dim[d].size()) : 0;
  }
  bool empty() const { return by_dim.empty() || by_dim[0].empty(); }
  long long euler_characteristic() const;
  void validate() const;
  std::vector<std::vector<int>> facets() const;
};

// Nerve of a finite poset: d-simplices are chains x_0 < ... < x_d.
SimplicialComplex order_complex(const FinPoset& p);
// Same, with chains restricted to the given element subset.
SimplicialComplex order_complex_on_subset(const FinPoset& p, const std::vector<bool>& in_subset);

// Elements are pairs (x <= y); (x <= y) precedes (c <= d) iff c <= x and
// y <= d (interval containment).
struct EdgewiseSubdivision {
  FinPoset poset;
  std::vector<std::pair<int, int>> pairs;  // element index -> (x, y)
};
EdgewiseSubdivision edgewise_subdivision(const FinPoset& p);

// Adds one element above (top) or below (bottom) everything; the apex is the
// last element of the result.
FinPoset cone(const FinPoset& p, bool apex_on_top);

// Join: simplices s | t for s in A u {empty}, t in B u {empty}, minus the
// empty simplex. B's vertices are offset by A's vertex count.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

struct PosetMap {
  FinPoset source;
  FinPoset target;
  std::vector<int> assignment;

  void validate() const;  // order-preserving
};

// Nerves of A u B, A, B, A ^ B, all on the vertex set of the ambient poset.
// Precondition: A and B are both downward closed or both upward closed, so
// that every chain meeting a subposet at its extreme lies wholly inside it.
struct NerveCover {
  SimplicialComplex cover_union;
  SimplicialComplex part_a;
  SimplicialComplex part_b;
  SimplicialComplex intersection;
};
NerveCover union_and_intersection(const FinPoset& p, const std::vector<bool>& a,
                                  const std::vector<bool>& b);

// Deterministic random poset on <= max_n elements (transitive closure of a
// random relation compatible with a random permutation).
FinPoset random_poset(std::uint64_t seed, int max_n);

// Backtracking poset isomorphism test (small posets only).
bool poset_isomorphic(const FinPoset& a, const FinPoset& b);

}  // namespace declab::poset
