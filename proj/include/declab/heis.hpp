#pragma once

// Finite Heisenberg-type group of order p^{2k+1} acting on C^{p^k}:
// rho(a,b,c) e_x = zeta^{c + b.x} e_{x+a} on the basis {e_x : x in F_p^k}.
// The translation part {(a,0,0)} acts by permutation matrices and the
// diagonal part {(0,b,0)} by characters.

#include <vector>

#include "declab/cyclo.hpp"
#include "declab/gf.hpp"

namespace declab::heis {

struct HeisElement {
  std::vector<int> a;
  std::vector<int> b;
  int c = 0;

  bool operator==(const HeisElement&) const = default;
};

// Monomial matrix: e_x -> zeta_m^{phase[x]} e_{dest[x]}.
struct Monomial {
  std::vector<int> dest;
  std::vector<int> phase;

  int size() const { return static_cast<int>(dest.size()); }
};

class HeisGroup {
 public:
  HeisGroup(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  int n() const { return n_; }  // p^k
  const cyclo::CycloField& field() const { return field_; }
  const gf::SymplecticSpace& symplectic() const { return sympl_; }

  HeisElement identity() const;
  HeisElement make(std::vector<int> a, std::vector<int> b, int c) const;
  HeisElement mul(const HeisElement& g, const HeisElement& h) const;
  HeisElement inv(const HeisElement& g) const;
  // g^{-1} h^{-1} g h; always central here when projections commute
  HeisElement commutator(const HeisElement& g, const HeisElement& h) const;
  std::vector<int> projection(const HeisElement& g) const;  // (a,b) in F_p^{2k}
  bool is_central(const HeisElement& g) const;

  // all p^{2k+1} elements, deterministically ordered
  std::vector<HeisElement> all_elements() const;
  // one element (a,b,0) per class of the quotient F_p^{2k}
  std::vector<HeisElement> class_representatives() const;
  // lifts (a,b,0) of the nonzero vectors of a subspace of F_p^{2k}
  std::vector<HeisElement> lift_subspace(const gf::GFSubspace& w) const;
  // translations (a,0,0) for the nonzero vectors of a subspace of F_p^k
  std::vector<HeisElement> lift_translations(const gf::GFSubspace& h) const;

  Monomial rep(const HeisElement& g) const;
  Monomial mono_mul(const Monomial& g, const Monomial& h) const;
  cyclo::CycMat dense(const HeisElement& g) const;
  cyclo::Cyc trace(const HeisElement& g) const;  // from the dense matrix

  // index <-> point of F_p^k
  int point_index(const std::vector<int>& x) const;
  const std::vector<int>& point(int index) const { return points_[index]; }

 private:
  int p_, k_, n_;
  cyclo::CycloField field_;
  gf::SymplecticSpace sympl_;
  std::vector<std::vector<int>> points_;
};

// Apply a monomial matrix to a row vector / to a subspace (rows transform).
std::vector<cyclo::Cyc> apply_monomial(const cyclo::CycloField& f, const Monomial& m,
                                       const std::vector<cyclo::Cyc>& row);
cyclo::CycloSubspace apply_monomial(const cyclo::CycloField& f, const Monomial& m,
                                    const cyclo::CycloSubspace& v);
cyclo::CycMat monomial_to_dense(const cyclo::CycloField& f, const Monomial& m);

}  // namespace declab::heis
