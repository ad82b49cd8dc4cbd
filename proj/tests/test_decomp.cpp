#include "declab/decomp.hpp"

#include <doctest.h>

using namespace declab;
using cyclo::CycloField;
using cyclo::CycloSubspace;
using decomp::Decomposition;
using gf::GFSubspace;
using heis::HeisGroup;

namespace {

CycloSubspace line(const CycloField& f, int n, const std::vector<std::pair<int, cyclo::Cyc>>& entries) {
  cyclo::CycMat rows = cyclo::zero_matrix(f, 1, n);
  for (const auto& [i, v] : entries) rows[0][i] = v;
  return cyclo::subspace_from_rows(f, n, rows);
}

}  // namespace

TEST_CASE("decomposition construction and ordering") {
  CycloField f = CycloField::for_prime(2);
  Decomposition eps = decomp::basis_line_decomposition(f, 3);
  CHECK(eps.count() == 3);
  CHECK(eps.is_proper());
  // canonical order is stable under permutation of the inputs
  Decomposition again = decomp::make_decomposition(
      f, {eps.components[2], eps.components[0], eps.components[1]});
  CHECK(again == eps);
  // non-orthogonal components are rejected
  CHECK_THROWS_AS(decomp::make_decomposition(
                      f, {line(f, 2, {{0, f.one()}}), line(f, 2, {{0, f.one()}, {1, f.one()}})}),
                  CheckError);
  // dimensions must fill the space
  CHECK_THROWS_AS(decomp::make_decomposition(f, {line(f, 3, {{0, f.one()}}),
                                                 line(f, 3, {{1, f.one()}})}),
                  CheckError);
  CHECK_THROWS_AS(decomp::make_decomposition(f, {cyclo::full_subspace(f, 2)}), CheckError);
}

TEST_CASE("refinement order") {
  HeisGroup g(2, 2);
  const CycloField& f = g.field();
  Decomposition eps = decomp::basis_line_decomposition(f, 4);
  GFSubspace lineK = gf::rref(2, 2, {{0, 1}});
  Decomposition mu = decomp::glom_by_translations(g, eps, lineK);
  CHECK(mu.count() == 2);
  CHECK(decomp::refines(f, eps, mu));
  CHECK_FALSE(decomp::refines(f, mu, eps));
  CHECK(decomp::refines(f, eps, eps));
}

TEST_CASE("glom by orbit sums") {
  HeisGroup g(2, 2);
  const CycloField& f = g.field();
  Decomposition eps = decomp::basis_line_decomposition(f, 4);
  // the full translation group has a single orbit: improper unless allowed
  GFSubspace full = gf::full_subspace(2, 2);
  CHECK_THROWS_AS(decomp::glom_by_translations(g, eps, full), CheckError);
  Decomposition whole = decomp::glom_by_translations(g, eps, full, true);
  CHECK(whole.count() == 1);
  // generators must fix the decomposition
  Decomposition skew = decomp::make_decomposition(
      f, {line(f, 4, {{0, f.one()}, {1, f.one()}}), line(f, 4, {{0, f.one()}, {1, f.from_rational(-1)}}),
          line(f, 4, {{2, f.one()}}), line(f, 4, {{3, f.one()}})});
  CHECK_THROWS_AS(decomp::glom_by_translations(g, skew, gf::rref(2, 2, {{1, 0}})), CheckError);
}

TEST_CASE("isorefine splits into eigenspaces") {
  // the full-space refinement under the diagonal subgroup at p = 3 gives the
  // three character lines (1, z^j, z^{2j})
  HeisGroup g(3, 1);
  const CycloField& f = g.field();
  Decomposition whole = decomp::whole_space(f, 3);
  Decomposition chars = decomp::isorefine_by_translations(g, whole, gf::full_subspace(3, 1));
  CHECK(chars.count() == 3);
  for (const auto& v : chars.components) CHECK(v.dim() == 1);
  // each component is fixed by the shift
  heis::Monomial shift = g.rep(g.make({1}, {0}, 0));
  for (const auto& v : chars.components) CHECK(heis::apply_monomial(f, shift, v) == v);
  // refinement by nothing is the identity
  CHECK(decomp::isorefine(f, chars, {}) == chars);
  // non-commuting generators are rejected
  HeisGroup g2(2, 1);
  CHECK_THROWS_AS(
      decomp::isorefine(g2.field(), decomp::whole_space(g2.field(), 2),
                        {g2.rep(g2.make({1}, {0}, 0)), g2.rep(g2.make({0}, {1}, 0))}),
      CheckError);
}

TEST_CASE("componentwise isotropy and the setwise stabilizer") {
  HeisGroup g(2, 1);
  const CycloField& f = g.field();
  Decomposition eps = decomp::basis_line_decomposition(f, 2);
  decomp::IsotropyInfo info = decomp::isotropy_group(g, eps);
  CHECK(info.uniform);
  CHECK(info.group == gf::rref(2, 2, {{0, 1}}));  // the diagonal classes fix each line
  // the full stabilizer also contains the swap class
  CHECK(decomp::decomposition_stabilizer(g, eps) == gf::full_subspace(2, 2));
  CHECK(decomp::fixed_by_all_classes(g, eps));
  // central classes fix everything
  CHECK(decomp::fixed_by_class(g, eps, g.make({0}, {0}, 1)));
}

TEST_CASE("uniformize coarsens mixed stabilizers") {
  HeisGroup g(2, 2);
  const CycloField& f = g.field();
  // glom only part of a translation orbit: a plane plus two sign lines
  auto e = [&](int i) { return g.point_index(i == 0 ? std::vector<int>{0, 0} : i == 1 ? std::vector<int>{0, 1} : i == 2 ? std::vector<int>{1, 0} : std::vector<int>{1, 1}); };
  CycloSubspace plane = cyclo::subspace_from_rows(
      f, 4,
      {line(f, 4, {{e(0), f.one()}, {e(1), f.one()}}).basis[0],
       line(f, 4, {{e(2), f.one()}, {e(3), f.one()}}).basis[0]});
  CycloSubspace minus1 = line(f, 4, {{e(0), f.one()}, {e(1), f.from_rational(-1)}});
  CycloSubspace minus2 = line(f, 4, {{e(2), f.one()}, {e(3), f.from_rational(-1)}});
  Decomposition mixed = decomp::make_decomposition(f, {plane, minus1, minus2});
  CHECK(decomp::fixed_by_translations(g, mixed));
  decomp::IsotropyInfo info = decomp::translation_isotropy_info(g, mixed);
  CHECK_FALSE(info.uniform);
  gf::GFSubspace scope = gf::full_subspace(2, 4);
  Decomposition uni = decomp::uniformize(g, mixed, scope);
  CHECK(uni.count() == 2);
  CHECK(decomp::translation_isotropy_info(g, uni).uniform);
  // uniform inputs are unchanged, and the operation is idempotent
  Decomposition eps = decomp::basis_line_decomposition(f, 4);
  CHECK(decomp::uniformize(g, eps, scope) == eps);
  CHECK(decomp::uniformize(g, uni, scope) == uni);
}

TEST_CASE("glom and isorefine are idempotent for a fixed subgroup") {
  HeisGroup g(2, 2);
  Decomposition eps = decomp::basis_line_decomposition(g.field(), 4);
  GFSubspace lineH = gf::rref(2, 2, {{1, 1}});
  Decomposition once = decomp::glom_by_translations(g, eps, lineH);
  CHECK(decomp::glom_by_translations(g, once, lineH) == once);
  Decomposition refined = decomp::isorefine_by_translations(g, once, lineH);
  CHECK(decomp::isorefine_by_translations(g, refined, lineH) == refined);
}

TEST_CASE("orbit predicates") {
  HeisGroup g(2, 2);
  const CycloField& f = g.field();
  Decomposition eps = decomp::basis_line_decomposition(f, 4);
  decomp::OrbitPredicates pe = decomp::membership_predicates(g, eps);
  CHECK(pe.moving);
  CHECK_FALSE(pe.nontransitive);
  CHECK(pe.uniform);
  CHECK(decomp::translation_isotropy(g, eps).dim() == 0);  // the free orbit of lines
  // the canonical character decomposition: fixed componentwise
  Decomposition chars =
      decomp::isorefine_by_translations(g, decomp::whole_space(f, 4), gf::full_subspace(2, 2));
  decomp::OrbitPredicates pc = decomp::membership_predicates(g, chars);
  CHECK_FALSE(pc.moving);
  CHECK(pc.nontransitive);
  // a middle case is both
  Decomposition mid = decomp::nested_pair_decomposition(g, gf::rref(2, 2, {{0, 1}}),
                                                        gf::rref(2, 2, {{0, 1}}));
  decomp::OrbitPredicates pm = decomp::membership_predicates(g, mid);
  CHECK(pm.moving);
  CHECK(pm.nontransitive);
}

TEST_CASE("isotypical decomposition of coisotropic subspaces") {
  HeisGroup g(2, 1);
  const CycloField& f = g.field();
  // the swap line: eigenlines e0 +- e1
  Decomposition swap_lines = decomp::isotypical_decomposition(g, gf::rref(2, 2, {{1, 0}}));
  Decomposition expected = decomp::make_decomposition(
      f, {line(f, 2, {{0, f.one()}, {1, f.one()}}), line(f, 2, {{0, f.one()}, {1, f.from_rational(-1)}})});
  CHECK(swap_lines == expected);
  // the diagonal line: basis lines
  CHECK(decomp::isotypical_decomposition(g, gf::rref(2, 2, {{0, 1}})) ==
        decomp::basis_line_decomposition(f, 2));
  // the mixed line: eigenlines of an order-4 element, defined over Q(i)
  Decomposition quarter = decomp::isotypical_decomposition(g, gf::rref(2, 2, {{1, 1}}));
  Decomposition expected_q = decomp::make_decomposition(
      f, {line(f, 2, {{0, f.one()}, {1, f.zeta(1)}}),
          line(f, 2, {{0, f.one()}, {1, f.neg(f.zeta(1))}})});
  CHECK(quarter == expected_q);
  // round trip back to the subspace
  for (const auto& w : gf::enumerate_subspaces(2, 2, 1))
    CHECK(decomp::coisotropic_isotropy(g, decomp::isotypical_decomposition(g, w)) == w);
}

TEST_CASE("lagrangian gives four character lines at (2,2)") {
  HeisGroup g(2, 2);
  GFSubspace lagrangian = gf::rref(2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  Decomposition lam = decomp::isotypical_decomposition(g, lagrangian);
  CHECK(lam.count() == 4);
  for (const auto& v : lam.components) CHECK(v.dim() == 1);
  // canonical decompositions are already uniform: the retraction fixes them
  CHECK(decomp::uniformize(g, lam, gf::full_subspace(2, 4)) == lam);
}

TEST_CASE("isotropy of an unfixed decomposition is rejected") {
  HeisGroup g(2, 1);
  const CycloField& f = g.field();
  // a free-family point: fixed by translations but not by the whole group
  cyclo::Cyc i2 = f.mul_rational(f.zeta(1), mpq_class(2));
  Decomposition mu = decomp::make_decomposition(
      f, {line(f, 2, {{0, f.one()}, {1, i2}}), line(f, 2, {{0, i2}, {1, f.one()}})});
  CHECK(decomp::fixed_by_translations(g, mu));
  CHECK_FALSE(decomp::fixed_by_all_classes(g, mu));
  CHECK_THROWS_AS(decomp::coisotropic_isotropy(g, mu), CheckError);
}

TEST_CASE("character inner products") {
  HeisGroup g(3, 1);
  GFSubspace w = gf::rref(3, 2, {{1, 0}});
  Decomposition lam = decomp::isotypical_decomposition(g, w);
  auto subgroup = decomp::subgroup_elements(g, w);
  CHECK(subgroup.size() == 9);
  for (int i = 0; i < lam.count(); ++i)
    for (int j = 0; j < lam.count(); ++j) {
      mpq_class ip = decomp::char_inner_product(g, lam.components[i], lam.components[j], subgroup);
      CHECK(ip == (i == j ? 1 : 0));
    }
  // multiplicity of each component in the restriction of the full
  // representation is 1
  for (int i = 0; i < lam.count(); ++i) {
    mpq_class mult = decomp::char_inner_product(g, cyclo::full_subspace(g.field(), 3),
                                                lam.components[i], subgroup);
    CHECK(mult == 1);
  }
  // non-invariant subspaces are rejected
  CycloSubspace bad = line(g.field(), 3, {{0, g.field().one()}, {1, g.field().one()}});
  CHECK_THROWS_AS(decomp::char_inner_product(g, bad, bad, subgroup), CheckError);
}

TEST_CASE("nested pair decompositions") {
  HeisGroup g(2, 2);
  const CycloField& f = g.field();
  GFSubspace zero = gf::zero_subspace(2, 2);
  GFSubspace full = gf::full_subspace(2, 2);
  GFSubspace lineK = gf::rref(2, 2, {{0, 1}});
  // the excluded pair
  CHECK_THROWS_AS(decomp::nested_pair_decomposition(g, zero, full), CheckError);
  // glom only: two coordinate planes
  Decomposition planes = decomp::nested_pair_decomposition(g, zero, lineK);
  CHECK(planes.count() == 2);
  for (const auto& v : planes.components) CHECK(v.dim() == 2);
  // (H, full): the two sign eigenspaces of the line
  Decomposition signs = decomp::nested_pair_decomposition(g, lineK, full);
  CHECK(signs.count() == 2);
  CHECK(decomp::translation_isotropy(g, signs) == full);
  // (H, H): four sign lines with isotropy H
  Decomposition four = decomp::nested_pair_decomposition(g, lineK, lineK);
  CHECK(four.count() == 4);
  CHECK(decomp::translation_isotropy(g, four) == lineK);
}

TEST_CASE("unique isotypical refinement shadow") {
  // refining any fixed decomposition attached to a larger subspace by the
  // radical of a smaller one lands exactly on the smaller one's decomposition
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    HeisGroup g(p, k);
    gf::SymplecticSpace s = g.symplectic();
    auto building = gf::enumerate_subspaces(p, 2 * k, std::nullopt);
    std::vector<GFSubspace> coiso;
    for (const auto& w : building)
      if (w.dim() < 2 * k && gf::is_coisotropic(w, s)) coiso.push_back(w);
    for (const auto& wj : coiso)
      for (const auto& wh : coiso) {
        if (!gf::subspace_leq(wj, wh)) continue;
        Decomposition lam_h = decomp::isotypical_decomposition(g, wh);
        Decomposition lam_j = decomp::isotypical_decomposition(g, wj);
        Decomposition refined = decomp::isorefine_by_subspace(g, lam_h, gf::radical(wj, s));
        CHECK(refined == lam_j);
      }
  }
}
