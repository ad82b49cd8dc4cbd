#include "declab/poset.hpp"

#include <doctest.h>

#include "declab/homology.hpp"
#include "oracles.hpp"

using namespace declab;
using poset::FinPoset;
using poset::SimplicialComplex;

TEST_CASE("poset validation") {
  poset::chain(4).validate();
  poset::antichain(3).validate();
  FinPoset bad = poset::antichain(2);
  bad.leq[0][1] = bad.leq[1][0] = true;
  CHECK_THROWS_AS(bad.validate(), CheckError);
}

TEST_CASE("order complex of chains and antichains") {
  SimplicialComplex pts = poset::order_complex(poset::antichain(4));
  CHECK(pts.dimension() == 0);
  CHECK(pts.simplex_count(0) == 4);
  SimplicialComplex tri = poset::order_complex(poset::chain(3));
  tri.validate();
  CHECK(tri.simplex_count(0) == 3);
  CHECK(tri.simplex_count(1) == 3);
  CHECK(tri.simplex_count(2) == 1);
  SimplicialComplex empty = poset::order_complex(poset::antichain(0));
  CHECK(empty.empty());
}

TEST_CASE("order complexes are closed under faces") {
  for (int seed = 0; seed < 10; ++seed) {
    poset::order_complex(poset::random_poset(seed, 7)).validate();
  }
}

TEST_CASE("edgewise subdivision structure") {
  // antichain: only identity pairs
  poset::EdgewiseSubdivision sd0 = poset::edgewise_subdivision(poset::antichain(3));
  CHECK(sd0.poset.n == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(sd0.poset.leq[i][j] == (i == j));
  // two-element chain a < b: three pairs, (a,a) and (b,b) below (a,b)
  poset::EdgewiseSubdivision sd1 = poset::edgewise_subdivision(poset::chain(2));
  sd1.poset.validate();
  CHECK(sd1.poset.n == 3);
  int ab = -1;
  for (int i = 0; i < 3; ++i)
    if (sd1.pairs[i] == std::make_pair(0, 1)) ab = i;
  REQUIRE(ab >= 0);
  for (int i = 0; i < 3; ++i) {
    if (i == ab) continue;
    CHECK(sd1.poset.leq[i][ab]);
    CHECK_FALSE(sd1.poset.leq[ab][i]);
  }
  // its realization is an interval: two edges sharing the top pair
  SimplicialComplex seg = poset::order_complex(sd1.poset);
  CHECK(seg.simplex_count(0) == 3);
  CHECK(seg.simplex_count(1) == 2);
  CHECK(homology::homology(seg, true).trivial());
}

TEST_CASE("subdivision preserves homology on random posets") {
  for (int seed = 100; seed < 130; ++seed) {
    FinPoset p = poset::random_poset(seed, 8);
    poset::EdgewiseSubdivision sd = poset::edgewise_subdivision(p);
    sd.poset.validate();
    homology::HomologyReport a = homology::homology(poset::order_complex(p), true);
    homology::HomologyReport b = homology::homology(poset::order_complex(sd.poset), true);
    CHECK(a.degrees == b.degrees);
  }
}

TEST_CASE("cones are contractible") {
  FinPoset two = poset::antichain(2);
  FinPoset coned = poset::cone(two, true);
  coned.validate();
  SimplicialComplex path = poset::order_complex(coned);
  CHECK(path.simplex_count(0) == 3);
  CHECK(path.simplex_count(1) == 2);
  CHECK(homology::homology(path, true).trivial());
  // empty poset: cone is a point
  FinPoset pt = poset::cone(poset::antichain(0), true);
  CHECK(pt.n == 1);
  CHECK(homology::homology(poset::order_complex(pt), true).trivial());
  for (int seed = 40; seed < 55; ++seed) {
    FinPoset p = poset::random_poset(seed, 7);
    CHECK(homology::homology(poset::order_complex(poset::cone(p, seed % 2 == 0)), true).trivial());
  }
}

TEST_CASE("join") {
  SimplicialComplex s0 = poset::order_complex(poset::antichain(2));
  SimplicialComplex square = poset::join(s0, s0);
  square.validate();
  CHECK(square.simplex_count(0) == 4);
  CHECK(square.simplex_count(1) == 4);
  homology::HomologyReport h = homology::homology(square, true);
  CHECK(h.betti_at(1) == 1);  // a circle
  CHECK(h.betti_at(0) == 0);
  // join with a point is a cone
  SimplicialComplex point = poset::order_complex(poset::antichain(1));
  for (int seed = 60; seed < 66; ++seed) {
    SimplicialComplex x = poset::order_complex(poset::random_poset(seed, 6));
    CHECK(homology::homology(poset::join(x, point), true).trivial());
  }
  // suspension of three points: two circles
  SimplicialComplex m3 = poset::order_complex(poset::antichain(3));
  homology::HomologyReport h3 = homology::homology(poset::join(s0, m3), true);
  CHECK(h3.betti_at(1) == 2);
  CHECK(h3.torsion_free());
}

TEST_CASE("union and intersection of closed subposets") {
  // disjoint antichains
  FinPoset p = poset::antichain(4);
  std::vector<bool> a{true, true, false, false}, b{false, false, true, true};
  poset::NerveCover cov = poset::union_and_intersection(p, a, b);
  CHECK(cov.cover_union.simplex_count(0) == 4);
  CHECK(cov.intersection.empty());
  // equal subsets: intersection is both
  poset::NerveCover cov2 = poset::union_and_intersection(p, a, a);
  CHECK(cov2.intersection.simplex_count(0) == 2);
  // closure violation: {top} in a chain is not downward closed, {bottom} not upward
  FinPoset c = poset::chain(2);
  CHECK_THROWS_AS(
      poset::union_and_intersection(c, std::vector<bool>{false, true}, std::vector<bool>{true, false}),
      CheckError);
}

TEST_CASE("poset maps validate monotonicity") {
  poset::PosetMap ok;
  ok.source = poset::chain(3);
  ok.target = poset::chain(2);
  ok.assignment = {0, 0, 1};
  ok.validate();
  poset::PosetMap bad = ok;
  bad.assignment = {1, 0, 0};
  CHECK_THROWS_AS(bad.validate(), CheckError);
}

TEST_CASE("poset isomorphism") {
  CHECK(poset::poset_isomorphic(poset::chain(4), poset::chain(4)));
  CHECK_FALSE(poset::poset_isomorphic(poset::chain(3), poset::antichain(3)));
  // relabeled random posets are isomorphic
  for (int seed = 70; seed < 80; ++seed) {
    FinPoset p = poset::random_poset(seed, 7);
    std::vector<int> perm(p.n);
    for (int i = 0; i < p.n; ++i) perm[i] = (i + 3) % p.n;
    FinPoset q = poset::antichain(p.n);
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j) q.leq[perm[i]][perm[j]] = p.leq[i][j];
    CHECK(poset::poset_isomorphic(p, q));
  }
}

TEST_CASE("order complex counts match the betti oracle inputs") {
  // sanity against the independent enumeration helper
  CHECK(oracles::all_vectors(2, 3).size() == 8);
  FinPoset p = poset::random_poset(5, 6);
  SimplicialComplex k = poset::order_complex(p);
  auto oracle = oracles::betti_oracle(k);
  homology::HomologyReport h = homology::homology(k, true);
  for (int d = -1; d + 1 < static_cast<int>(oracle.size()); ++d)
    CHECK(h.betti_at(d) == oracle[d + 1]);
}
