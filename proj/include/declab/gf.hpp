#pragma once

// Exact linear algebra over the prime fields F_p: row-canonical subspaces,
// the standard symplectic form, and exhaustive subspace enumeration.

#include <optional>
#include <vector>

#include "declab/common.hpp"

namespace declab::gf {

using Row = std::vector<int>;
using Matrix = std::vector<Row>;

struct GFVector {
  int p = 2;
  Row coords;

  GFVector() = default;
  GFVector(int p_, Row coords_);
  int size() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  bool operator==(const GFVector&) const = default;
};

GFVector add(const GFVector& u, const GFVector& v);
GFVector neg(const GFVector& u);
GFVector scale(int s, const GFVector& u);
int dot(const GFVector& u, const GFVector& v);

int mod_inverse(int a, int p);

// Subspace of F_p^ambient in reduced row echelon form. Two subspaces are
// equal iff their basis matrices are identical.
struct GFSubspace {
  int p = 2;
  int ambient = 0;
  Matrix basis;  // RREF rows, pivots 1, zeros above and below pivots

  int dim() const { return static_cast<int>(basis.size()); }
  bool operator==(const GFSubspace&) const = default;
  bool operator<(const GFSubspace& other) const;
};

// Row space of an arbitrary matrix, in canonical form. Idempotent.
GFSubspace rref(int p, int ambient, const Matrix& rows);

GFSubspace zero_subspace(int p, int ambient);
GFSubspace full_subspace(int p, int ambient);

bool contains(const GFSubspace& w, const Row& v);
bool subspace_leq(const GFSubspace& a, const GFSubspace& b);  // a <= b
GFSubspace subspace_sum(const GFSubspace& a, const GFSubspace& b);
GFSubspace subspace_intersection(const GFSubspace& a, const GFSubspace& b);

// {x : x . r = 0 for every row r of w}, with the standard dot product.
GFSubspace dot_annihilator(const GFSubspace& w);

// All vectors of a subspace (p^dim of them), in a deterministic order.
std::vector<Row> enumerate_vectors(const GFSubspace& w);

// Standard symplectic space F_p^{2k} with <(a,b),(a',b')> = a.b' - b.a'.
struct SymplecticSpace {
  int p = 2;
  int k = 1;

  int dim() const { return 2 * k; }
  int form(const Row& u, const Row& v) const;
  Matrix form_matrix() const;
};

GFSubspace perp(const GFSubspace& w, const SymplecticSpace& s);
bool is_coisotropic(const GFSubspace& w, const SymplecticSpace& s);

// w ^ perp(w); requires w coisotropic (so it equals perp(w)).
GFSubspace radical(const GFSubspace& w, const SymplecticSpace& s);

// Exhaustive, duplicate-free, ordered by (dim, flattened basis).
// Guarded by p^n <= 10^6.
std::vector<GFSubspace> enumerate_subspaces(int p, int n, std::optional<int> dim_filter);

}  // namespace declab::gf
