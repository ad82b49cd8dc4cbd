#pragma once

// End-to-end verifiers. Each returns a JSON report with a top-level "pass"
// flag, a "checks" object, and a "failures" array carrying the first
// offending witnesses.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "declab/buildings.hpp"
#include "declab/decomp.hpp"

namespace declab::verify {

using nlohmann::json;

json subspace_to_json(const gf::GFSubspace& w);
json cyclo_subspace_to_json(const cyclo::CycloField& f, const cyclo::CycloSubspace& v);
json decomposition_to_json(const cyclo::CycloField& f, const decomp::Decomposition& d);
json homology_to_json(const homology::HomologyReport& rep);
// sorted facet list, for golden-file comparisons
json facets_json(const poset::SimplicialComplex& k);

json building_report(buildings::BuildingKind kind, int p, int k, bool with_homology);

// The two-way correspondence between proper coisotropic subspaces and fixed
// decompositions: componentwise assertions, mutual inverses, order
// preservation and reflection, and the induced poset identification.
json theorem_1_1(int p, int k);

// The nested-pair functor on the double-cone model: well-definedness, order
// preservation, orbit-predicate corners, the composite projection, and the
// induced homology isomorphism of the subdivision projection.
json theorem_1_2(int p, int k);

// Trace of every group element: zero off the center, p^k zeta^c on it.
json character_check(int p, int k);

// Coarsen the basis lines of C^4 by the permutation (0 1)(2 3), refine back:
// exactly the four lines spanned by e0 +- e1, e2 +- e3.
json example_2_3();

// The trivially-acted part of the k=1 fixed points is contractible; for
// p = 2 the freely-acted sample family shares one setwise stabilizer of
// index 2.
json example_5_2(int p);

// Homology of the twisted-arrow subdivision equals homology of the poset,
// over the corpus buildings and seeded random posets.
json subdivision_invariance(std::uint64_t seed);

// Double-cone model: cover closure, the two cones are contractible, the
// intersection is the subdivision of the building, Mayer-Vietoris rank
// bookkeeping, and the one-degree Betti shift.
json suspension_check(int p, int k);

// Translation-invariant set partitions against the subspace building.
json partition_fixed(int p, int k);

// Join of the k=1 double cone with the k=1 coisotropic building: reduced
// homology of rank p concentrated in degree 1.
json join_spheres(int p);

// Concentration and ranks for the standard corpus of buildings.
json sphere_counts();

json suite(int max_p, int max_k, bool slow, std::uint64_t seed);

bool passed(const json& report);
std::string text_summary(const json& report);

}  // namespace declab::verify
