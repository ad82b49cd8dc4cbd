#pragma once

// Orthogonal decompositions of C^n and the operations on them: coarsening
// along group orbits (glom), refinement into simultaneous eigenspaces of a
// commuting family (isotypical refinement), isotropy groups, and the
// uniformizing retraction.

#include <optional>
#include <vector>

#include "declab/cyclo.hpp"
#include "declab/heis.hpp"

namespace declab::decomp {

// Unordered set of pairwise orthogonal nonzero subspaces summing to C^n,
// kept canonically sorted. Proper means at least two components; improper
// single-component values are allowed only as intermediate plumbing.
struct Decomposition {
  int ambient = 0;
  std::vector<cyclo::CycloSubspace> components;

  int count() const { return static_cast<int>(components.size()); }
  bool is_proper() const { return count() >= 2; }
  bool operator==(const Decomposition&) const;
  bool operator<(const Decomposition&) const;
};

Decomposition make_decomposition(const cyclo::CycloField& f,
                                 std::vector<cyclo::CycloSubspace> components,
                                 bool allow_improper = false);

// The decomposition into the coordinate lines of C^n.
Decomposition basis_line_decomposition(const cyclo::CycloField& f, int n);

// The whole space as a single (improper) component.
Decomposition whole_space(const cyclo::CycloField& f, int n);

// fine <= coarse in the coarsening order: every component of `fine` lies
// inside a component of `coarse`.
bool refines(const cyclo::CycloField& f, const Decomposition& fine, const Decomposition& coarse);

// Does the matrix permute the component list?
bool monomial_fixes(const cyclo::CycloField& f, const heis::Monomial& m, const Decomposition& d);
// Does it fix every component setwise?
bool monomial_stabilizes_componentwise(const cyclo::CycloField& f, const heis::Monomial& m,
                                       const Decomposition& d);

// Sum components over orbits of the group generated by `gens` (each of which
// must permute the component list). Throws on an improper result unless
// allowed.
Decomposition glom(const cyclo::CycloField& f, const Decomposition& d,
                   const std::vector<heis::Monomial>& gens, bool allow_improper = false);

// Split every component into simultaneous eigenspaces of the commuting
// family `gens`; every generator must fix every component setwise.
Decomposition isorefine(const cyclo::CycloField& f, const Decomposition& d,
                        const std::vector<heis::Monomial>& gens);

// --- Heisenberg-context operations ---

struct IsotropyInfo {
  gf::GFSubspace group;                       // subspace of F_p^{2k}
  std::vector<gf::GFSubspace> per_component;  // componentwise stabilizers
  bool uniform = false;
};

// Classes (a,b) within `scope` whose lifts fix every / each component.
IsotropyInfo isotropy_group(const heis::HeisGroup& g, const Decomposition& d,
                            const gf::GFSubspace& scope);
IsotropyInfo isotropy_group(const heis::HeisGroup& g, const Decomposition& d);  // full scope

bool fixed_by_class(const heis::HeisGroup& g, const Decomposition& d, const heis::HeisElement& e);
bool fixed_by_all_classes(const heis::HeisGroup& g, const Decomposition& d);
bool fixed_by_translations(const heis::HeisGroup& g, const Decomposition& d);

Decomposition glom_by_subspace(const heis::HeisGroup& g, const Decomposition& d,
                               const gf::GFSubspace& w, bool allow_improper = false);
Decomposition glom_by_translations(const heis::HeisGroup& g, const Decomposition& d,
                                   const gf::GFSubspace& h, bool allow_improper = false);
Decomposition isorefine_by_subspace(const heis::HeisGroup& g, const Decomposition& d,
                                    const gf::GFSubspace& w);
Decomposition isorefine_by_translations(const heis::HeisGroup& g, const Decomposition& d,
                                        const gf::GFSubspace& h);

// Coarsen by the subgroup generated by all componentwise stabilizers within
// `scope`; the result has uniform isotropy and stays proper.
Decomposition uniformize(const heis::HeisGroup& g, const Decomposition& d,
                         const gf::GFSubspace& scope);

// Translation subspace of F_p^k fixing every component setwise.
gf::GFSubspace translation_isotropy(const heis::HeisGroup& g, const Decomposition& d);

struct OrbitPredicates {
  bool uniform = false;
  bool moving = false;         // some translation moves some component
  bool nontransitive = false;  // more than one translation orbit on components
};
// Requires d fixed by all translations.
OrbitPredicates membership_predicates(const heis::HeisGroup& g, const Decomposition& d);

// Componentwise translation stabilizers, as subspaces of F_p^k.
IsotropyInfo translation_isotropy_info(const heis::HeisGroup& g, const Decomposition& d);

// Classes (a,b) whose lifts permute the component list (setwise stabilizer
// of the decomposition, as opposed to the componentwise isotropy).
gf::GFSubspace decomposition_stabilizer(const heis::HeisGroup& g, const Decomposition& d);

// Elements (a,b,c) with (a,b) in w and arbitrary central part.
std::vector<heis::HeisElement> subgroup_elements(const heis::HeisGroup& g,
                                                 const gf::GFSubspace& w);

// tr(P rho(e)) for a component projector P, computed along the monomial.
cyclo::Cyc character_value(const heis::HeisGroup& g, const cyclo::CycMat& projector,
                           const heis::HeisElement& e);

// <chi_V, chi_W> over the listed subgroup; both subspaces must be invariant.
// Always a nonnegative rational (the dimension of the hom space).
mpq_class char_inner_product(const heis::HeisGroup& g, const cyclo::CycloSubspace& v,
                             const cyclo::CycloSubspace& w,
                             const std::vector<heis::HeisElement>& subgroup);

// Canonical isotypical decomposition attached to a proper coisotropic
// subspace: refine the whole space under the preimage of the radical.
// Asserts the component count p^{2k-dim w}, equal component dimensions p^s,
// and that the components carry pairwise distinct irreducible characters.
Decomposition isotypical_decomposition(const heis::HeisGroup& g, const gf::GFSubspace& w);

// Uniform isotropy subgroup of a decomposition fixed by every class;
// asserts uniformity and that the result is proper coisotropic.
gf::GFSubspace coisotropic_isotropy(const heis::HeisGroup& g, const Decomposition& d);

// Coarsen the basis-line decomposition along translations by k_sub, then
// split into isotypical pieces for h_sub (h_sub <= k_sub nested subspaces of
// F_p^k, with the pair (0, full) excluded). The result has uniform
// translation isotropy equal to k_sub.
Decomposition nested_pair_decomposition(const heis::HeisGroup& g, const gf::GFSubspace& h_sub,
                                        const gf::GFSubspace& k_sub);

}  // namespace declab::decomp
