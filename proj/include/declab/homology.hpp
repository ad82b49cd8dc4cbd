#pragma once

// Integer simplicial homology via Smith normal form: Betti numbers, torsion,
// chain maps induced by poset maps, and induced maps on homology.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "declab/poset.hpp"

namespace declab::homology {

using ZMat = std::vector<std::vector<mpz_class>>;
using QMat = std::vector<std::vector<mpq_class>>;

struct SmithForm {
  std::vector<mpz_class> diag;  // nonnegative, each dividing the next
  int rank = 0;                 // number of nonzero diagonal entries
  // when requested: u * m * v = diag(diag), u and v unimodular
  ZMat u, v;
};

SmithForm smith_normal_form(const ZMat& m, bool with_transforms = false);

// Rows spanning {x : m x^T = 0} as a saturated lattice (a basis over Z).
ZMat integer_kernel_rows(const ZMat& m);
// x with m x^T = b, if any.
std::optional<std::vector<mpz_class>> integer_solve(const ZMat& m, const std::vector<mpz_class>& b);

int rank_rational(const ZMat& m);
int rank_rational_q(const QMat& m);
// Rows spanning the rational null space {x : m x^T = 0}.
QMat nullspace_rational(const ZMat& m);

// Chain complex of free Z-modules; bnd[t] maps degree (min_deg + t) to
// (min_deg + t - 1) and has shape dims[t-1] x dims[t]. bnd[0] is empty.
struct ChainComplexZ {
  int min_deg = 0;
  std::vector<long long> dims;
  std::vector<ZMat> bnd;

  int top_deg() const { return min_deg + static_cast<int>(dims.size()) - 1; }
  long long dim_at(int degree) const;
  const ZMat* boundary_at(int degree) const;  // map out of `degree`, null if absent
};

// Alternating-sign boundary matrices; with `reduced` the augmentation row to
// a degree -1 copy of Z is included. Asserts boundary-of-boundary = 0.
ChainComplexZ boundary_matrices(const poset::SimplicialComplex& k, bool reduced);

struct DegreeHomology {
  int degree = 0;
  long long betti = 0;
  std::vector<mpz_class> torsion;  // each > 1, divisibility-sorted

  bool operator==(const DegreeHomology&) const = default;
};

struct HomologyReport {
  bool reduced = true;
  std::vector<DegreeHomology> degrees;  // only degrees with nonzero content

  long long betti_at(int degree) const;
  bool torsion_free() const;
  bool trivial() const { return degrees.empty(); }
  bool operator==(const HomologyReport&) const = default;
};

HomologyReport homology(const poset::SimplicialComplex& k, bool reduced);
HomologyReport homology_of_complex(const ChainComplexZ& c);

// Chain map induced by an order-preserving poset map: a chain goes to its
// image chain, with the sign of the vertex-sorting permutation; degenerate
// images go to zero.
struct ChainMap {
  ChainComplexZ source;
  ChainComplexZ target;
  std::vector<ZMat> mats;  // mats[t]: source degree (min_deg+t) -> target
};

ChainMap chain_map_from_poset_map(const poset::PosetMap& f, bool reduced);
ChainMap inclusion_chain_map(const poset::SimplicialComplex& sub,
                             const poset::SimplicialComplex& whole, bool reduced);

// Cone_d = C_{d-1} (+) D_d with boundary [[-dC, 0], [f, dD]]; acyclic iff the
// map induces isomorphisms on homology in every degree.
ChainComplexZ mapping_cone(const ChainMap& f);
bool homology_iso_all_degrees(const ChainMap& f);

struct InducedMap {
  long long rank = 0;  // rank of the induced map on rational homology
  bool iso = false;    // isomorphism of integral homology in this degree
};
InducedMap induced_map_on_homology(const ChainMap& f, int degree);

}  // namespace declab::homology
