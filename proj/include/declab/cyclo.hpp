#pragma once

// Exact arithmetic in a cyclotomic field Q(zeta_m) and linear algebra over
// it, with the Hermitian inner product. For an odd prime p we work in
// Q(zeta_p); for p = 2 we work in Q(i), since the order-4 elements of the
// finite group model have eigenvalues +-i. Rational inputs are unaffected.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "declab/common.hpp"

namespace declab::cyclo {

// Element of Q(zeta_m): coefficients of 1, zeta, ..., zeta^{deg-1}.
using Cyc = std::vector<mpq_class>;
using CycMat = std::vector<std::vector<Cyc>>;

class CycloField {
 public:
  static CycloField for_prime(int p);

  int p() const { return p_; }
  int m() const { return m_; }  // conductor: p for odd p, 4 for p = 2
  int degree() const { return deg_; }

  Cyc zero() const { return Cyc(deg_, 0); }
  Cyc one() const { return from_rational(1); }
  Cyc from_rational(const mpq_class& q) const;
  Cyc zeta(int power) const;         // zeta_m^power
  Cyc zeta_p(int power) const;       // zeta_p^power = zeta_m^{power * m/p}

  bool is_zero(const Cyc& a) const;
  bool is_rational(const Cyc& a) const;
  mpq_class rational_part(const Cyc& a) const;

  Cyc add(const Cyc& a, const Cyc& b) const;
  Cyc sub(const Cyc& a, const Cyc& b) const;
  Cyc neg(const Cyc& a) const;
  Cyc mul(const Cyc& a, const Cyc& b) const;
  Cyc mul_rational(const Cyc& a, const mpq_class& q) const;
  Cyc inv(const Cyc& a) const;  // throws CheckError on zero
  Cyc conj(const Cyc& a) const; // zeta -> zeta^{-1}

  // Total order used only for canonical sorting (lexicographic coefficients).
  static int compare(const Cyc& a, const Cyc& b);

  // "1/3 + 2/3*z" style; z denotes zeta_m. Parsable by from_string.
  std::string to_string(const Cyc& a) const;
  Cyc from_string(const std::string& s) const;

 private:
  int p_ = 2;
  int m_ = 4;
  int deg_ = 2;
  // power_red_[j] = zeta^j expressed in the basis, for j = 0..max needed
  std::vector<Cyc> power_red_;
};

// --- matrices (vectors are rows throughout) ---

CycMat zero_matrix(const CycloField& f, int rows, int cols);
CycMat identity_matrix(const CycloField& f, int n);
CycMat transpose(const CycMat& mat);
CycMat conj_transpose(const CycloField& f, const CycMat& mat);
CycMat mat_mul(const CycloField& f, const CycMat& a, const CycMat& b);
CycMat mat_sub(const CycloField& f, const CycMat& a, const CycMat& b);
Cyc trace(const CycloField& f, const CycMat& a);
bool mat_is_zero(const CycloField& f, const CycMat& a);
bool mat_eq(const CycMat& a, const CycMat& b);

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref_in_place(const CycloField& f, CycMat& mat);
int rank(const CycloField& f, const CycMat& mat);
CycMat inverse(const CycloField& f, const CycMat& mat);  // throws if singular

// Basis rows of {x : mat . x^T = 0}.
CycMat kernel_rows(const CycloField& f, const CycMat& mat);
// Basis rows of {y : y . mat = 0}.
CycMat left_kernel_rows(const CycloField& f, const CycMat& mat);
// A particular solution of mat . x^T = b^T, if the system is consistent.
std::optional<std::vector<Cyc>> solve(const CycloField& f, const CycMat& mat,
                                      const std::vector<Cyc>& b);

// Subspace of row vectors in canonical RREF form; equality is matrix identity.
struct CycloSubspace {
  int ambient = 0;
  CycMat basis;

  int dim() const { return static_cast<int>(basis.size()); }
  bool operator==(const CycloSubspace& other) const {
    return ambient == other.ambient && mat_eq(basis, other.basis);
  }
};

CycloSubspace subspace_from_rows(const CycloField& f, int ambient, const CycMat& rows);
CycloSubspace zero_subspace(int ambient);
CycloSubspace full_subspace(const CycloField& f, int ambient);
CycloSubspace colspace(const CycloField& f, const CycMat& mat);
CycloSubspace kernel(const CycloField& f, const CycMat& mat);

bool subspace_contains(const CycloField& f, const CycloSubspace& v, const std::vector<Cyc>& row);
bool subspace_leq(const CycloField& f, const CycloSubspace& a, const CycloSubspace& b);
CycloSubspace subspace_sum(const CycloField& f, const CycloSubspace& a, const CycloSubspace& b);
int compare_subspaces(const CycloSubspace& a, const CycloSubspace& b);

// True iff B_V . conj(B_W)^T = 0.
bool hermitian_orthogonal(const CycloField& f, const CycloSubspace& v, const CycloSubspace& w);

// Hermitian idempotent P with row . P ranging over v; P = B*(B B*)^{-1} B.
CycMat orthogonal_projector(const CycloField& f, const CycloSubspace& v);

}  // namespace declab::cyclo
