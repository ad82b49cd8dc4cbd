#pragma once

// The subspace building for GL_k(F_p), the coisotropic building for
// Sp_k(F_p), the double-cone model built from twisted-arrow pairs over the
// full subspace lattice, translation-invariant set partitions, and sphere
// count reports.

#include <vector>

#include "declab/gf.hpp"
#include "declab/homology.hpp"
#include "declab/poset.hpp"

namespace declab::buildings {

enum class BuildingKind { GL, Sp };

struct BuildingPoset {
  BuildingKind kind = BuildingKind::GL;
  int p = 2;
  int k = 1;
  poset::FinPoset poset;
  std::vector<gf::GFSubspace> labels;  // aligned with poset elements
};

// Proper nontrivial subspaces of F_p^k, ordered by inclusion. p^k <= 512.
BuildingPoset tits_gl(int p, int k);

// Proper coisotropic subspaces of the standard symplectic F_p^{2k},
// ordered by inclusion. p^{2k} <= 10^6.
BuildingPoset tits_sp(int p, int k);

// Pairs (H <= K) over the full subspace lattice of F_p^k, minus the pair
// (0 <= F_p^k); cone_plus holds the indices with H != 0, cone_minus the
// indices with K != F_p^k, and their intersection is the edgewise
// subdivision of tits_gl(p, k).
struct SuspensionModel {
  int p = 2;
  int k = 1;
  poset::FinPoset tdiamond;
  std::vector<std::pair<gf::GFSubspace, gf::GFSubspace>> pairs;
  std::vector<bool> cone_plus;
  std::vector<bool> cone_minus;
  std::vector<bool> sd_core;  // cone_plus ^ cone_minus
};
SuspensionModel suspension_model(int p, int k);

// All set partitions of {0..n-1} as sorted blocks of sorted elements.
using SetPartition = std::vector<std::vector<int>>;
std::vector<SetPartition> enumerate_set_partitions(int n);
bool partition_refines(const SetPartition& fine, const SetPartition& coarse);

// Proper nontrivial partitions of the point set F_p^k whose blocks are
// permuted by every translation, ordered by refinement (fine below coarse).
// p^k <= 8.
struct PartitionFixedPoints {
  poset::FinPoset poset;
  std::vector<SetPartition> labels;
  long long proper_nontrivial_count = 0;  // size of the ambient partition poset
};
PartitionFixedPoints partition_fixed_points(int p, int k);

// Partitions of a p-element set with at least two blocks (the all-singleton
// partition included), ordered by refinement; has an initial object, so its
// nerve is contractible. p <= 7.
poset::FinPoset bottom_extended_partition_poset(int p);

struct SphereReport {
  int expected_degree = 0;   // GL: k-2, Sp: k-1
  long long rank = 0;        // betti number in the expected degree
  bool concentrated = false; // reduced homology vanishes elsewhere
  bool torsion_free = false;
  homology::HomologyReport report;
};
SphereReport sphere_count_report(const BuildingPoset& b);

}  // namespace declab::buildings
