#include "declab/decomp.hpp"

#include <algorithm>
#include <numeric>

namespace declab::decomp {

using cyclo::CycloField;
using cyclo::CycloSubspace;
using heis::HeisGroup;
using heis::Monomial;

bool Decomposition::operator==(const Decomposition& other) const {
  if (ambient != other.ambient || components.size() != other.components.size()) return false;
  for (size_t i = 0; i < components.size(); ++i)
    if (!(components[i] == other.components[i])) return false;
  return true;
}

bool Decomposition::operator<(const Decomposition& other) const {
  if (ambient != other.ambient) return ambient < other.ambient;
  if (components.size() != other.components.size())
    return components.size() < other.components.size();
  for (size_t i = 0; i < components.size(); ++i) {
    int c = cyclo::compare_subspaces(components[i], other.components[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Decomposition make_decomposition(const CycloField& f, std::vector<CycloSubspace> components,
                                 bool allow_improper) {
  Decomposition d;
  check(!components.empty(), "decomposition: no components");
  d.ambient = components[0].ambient;
  int total = 0;
  for (const auto& v : components) {
    check(v.ambient == d.ambient, "decomposition: mixed ambient dimensions");
    check(v.dim() > 0, "decomposition: zero component");
    total += v.dim();
  }
  check(total == d.ambient, "decomposition: dimensions do not sum to the ambient dimension");
  for (size_t i = 0; i < components.size(); ++i)
    for (size_t j = i + 1; j < components.size(); ++j)
      check(cyclo::hermitian_orthogonal(f, components[i], components[j]),
            "decomposition: components not pairwise orthogonal");
  if (!allow_improper) check(components.size() >= 2, "decomposition: improper (single component)");
  d.components = std::move(components);
  std::sort(d.components.begin(), d.components.end(),
            [](const CycloSubspace& a, const CycloSubspace& b) {
              return cyclo::compare_subspaces(a, b) < 0;
            });
  return d;
}

Decomposition basis_line_decomposition(const CycloField& f, int n) {
  std::vector<CycloSubspace> comps;
  for (int i = 0; i < n; ++i) {
    cyclo::CycMat row(1, std::vector<cyclo::Cyc>(n, f.zero()));
    row[0][i] = f.one();
    comps.push_back(CycloSubspace{n, std::move(row)});
  }
  return make_decomposition(f, std::move(comps));
}

Decomposition whole_space(const CycloField& f, int n) {
  return make_decomposition(f, {cyclo::full_subspace(f, n)}, true);
}

bool refines(const CycloField& f, const Decomposition& fine, const Decomposition& coarse) {
  check(fine.ambient == coarse.ambient, "refines: ambient mismatch");
  for (const auto& v : fine.components) {
    bool inside = false;
    for (const auto& w : coarse.components) {
      // a nonzero subspace sits inside at most one component; test the
      // first basis row before the full containment check
      if (!cyclo::subspace_contains(f, w, v.basis[0])) continue;
      inside = cyclo::subspace_leq(f, v, w);
      break;
    }
    if (!inside) return false;
  }
  return true;
}

namespace {

int component_index(const Decomposition& d, const CycloSubspace& v) {
  for (int i = 0; i < d.count(); ++i)
    if (d.components[i] == v) return i;
  return -1;
}

// image of component i under m, as an index into d, or -1
int image_index(const CycloField& f, const Decomposition& d, const Monomial& m, int i) {
  CycloSubspace img = apply_monomial(f, m, d.components[i]);
  return component_index(d, img);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

bool monomial_fixes(const CycloField& f, const Monomial& m, const Decomposition& d) {
  for (int i = 0; i < d.count(); ++i)
    if (image_index(f, d, m, i) < 0) return false;
  return true;
}

bool monomial_stabilizes_componentwise(const CycloField& f, const Monomial& m,
                                       const Decomposition& d) {
  for (int i = 0; i < d.count(); ++i)
    if (image_index(f, d, m, i) != i) return false;
  return true;
}

Decomposition glom(const CycloField& f, const Decomposition& d, const std::vector<Monomial>& gens,
                   bool allow_improper) {
  UnionFind uf(d.count());
  for (const auto& m : gens)
    for (int i = 0; i < d.count(); ++i) {
      int j = image_index(f, d, m, i);
      check(j >= 0, "glom: a generator does not fix the decomposition");
      uf.unite(i, j);
    }
  std::vector<std::vector<int>> orbits(d.count());
  for (int i = 0; i < d.count(); ++i) orbits[uf.find(i)].push_back(i);
  std::vector<CycloSubspace> comps;
  for (const auto& orb : orbits) {
    if (orb.empty()) continue;
    CycloSubspace sum = cyclo::zero_subspace(d.ambient);
    for (int i : orb) sum = cyclo::subspace_sum(f, sum, d.components[i]);
    comps.push_back(std::move(sum));
  }
  return make_decomposition(f, std::move(comps), allow_improper);
}

Decomposition isorefine(const CycloField& f, const Decomposition& d,
                        const std::vector<Monomial>& gens) {
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      Monomial gh, hg;
      gh.dest.resize(gens[i].size());
      gh.phase.resize(gens[i].size());
      hg = gh;
      for (int x = 0; x < gens[i].size(); ++x) {
        gh.dest[x] = gens[i].dest[gens[j].dest[x]];
        gh.phase[x] = (gens[j].phase[x] + gens[i].phase[gens[j].dest[x]]) % f.m();
        hg.dest[x] = gens[j].dest[gens[i].dest[x]];
        hg.phase[x] = (gens[i].phase[x] + gens[j].phase[gens[i].dest[x]]) % f.m();
      }
      check(gh.dest == hg.dest && gh.phase == hg.phase,
            "isorefine: generators do not commute");
    }
  std::vector<CycloSubspace> current;
  for (const auto& v : d.components) current.push_back(v);
  for (const auto& m : gens) {
    for (const auto& v : current)
      check(apply_monomial(f, m, v) == v, "isorefine: a generator moves a component");
    std::vector<CycloSubspace> next;
    for (const auto& v : current) {
      // split v into eigenspaces of m: rows y with y (B M^T - w B) = 0
      cyclo::CycMat image_rows;
      for (const auto& r : v.basis) image_rows.push_back(apply_monomial(f, m, r));
      int found = 0;
      for (int j = 0; j < f.m(); ++j) {
        cyclo::Cyc omega = f.zeta(j);
        cyclo::CycMat delta = image_rows;
        for (int r = 0; r < v.dim(); ++r)
          for (int c = 0; c < v.ambient; ++c)
            delta[r][c] = f.sub(delta[r][c], f.mul(omega, v.basis[r][c]));
        cyclo::CycMat coeffs = cyclo::left_kernel_rows(f, delta);
        if (coeffs.empty()) continue;
        cyclo::CycMat rows = cyclo::mat_mul(f, coeffs, v.basis);
        CycloSubspace eig = cyclo::subspace_from_rows(f, v.ambient, rows);
        found += eig.dim();
        next.push_back(std::move(eig));
      }
      check(found == v.dim(), "isorefine: eigenspaces do not fill the component");
    }
    current = std::move(next);
  }
  // an improper input may stay improper (e.g. a trivially acting family)
  return make_decomposition(f, std::move(current), !d.is_proper());
}

IsotropyInfo isotropy_group(const HeisGroup& g, const Decomposition& d,
                            const gf::GFSubspace& scope) {
  check(scope.ambient == 2 * g.k(), "isotropy_group: scope ambient mismatch");
  IsotropyInfo info;
  std::vector<gf::Matrix> stab_rows(d.count());
  gf::Matrix group_rows;
  for (const auto& v : gf::enumerate_vectors(scope)) {
    std::vector<int> a(v.begin(), v.begin() + g.k());
    std::vector<int> b(v.begin() + g.k(), v.end());
    Monomial m = g.rep(g.make(a, b, 0));
    bool all = true;
    for (int i = 0; i < d.count(); ++i) {
      if (apply_monomial(g.field(), m, d.components[i]) == d.components[i])
        stab_rows[i].push_back(v);
      else
        all = false;
    }
    if (all) group_rows.push_back(v);
  }
  info.group = gf::rref(g.p(), 2 * g.k(), group_rows);
  info.uniform = true;
  for (int i = 0; i < d.count(); ++i) {
    info.per_component.push_back(gf::rref(g.p(), 2 * g.k(), stab_rows[i]));
    if (!(info.per_component.back() == info.group)) info.uniform = false;
  }
  return info;
}

IsotropyInfo isotropy_group(const HeisGroup& g, const Decomposition& d) {
  return isotropy_group(g, d, gf::full_subspace(g.p(), 2 * g.k()));
}

bool fixed_by_class(const HeisGroup& g, const Decomposition& d, const heis::HeisElement& e) {
  return monomial_fixes(g.field(), g.rep(e), d);
}

bool fixed_by_all_classes(const HeisGroup& g, const Decomposition& d) {
  for (const auto& e : g.class_representatives())
    if (!fixed_by_class(g, d, e)) return false;
  return true;
}

bool fixed_by_translations(const HeisGroup& g, const Decomposition& d) {
  for (const auto& e : g.lift_translations(gf::full_subspace(g.p(), g.k())))
    if (!fixed_by_class(g, d, e)) return false;
  return true;
}

namespace {

std::vector<Monomial> monos_for(const HeisGroup& g, const std::vector<heis::HeisElement>& elems) {
  std::vector<Monomial> out;
  out.reserve(elems.size());
  for (const auto& e : elems) out.push_back(g.rep(e));
  return out;
}

std::vector<Monomial> basis_monos_subspace(const HeisGroup& g, const gf::GFSubspace& w) {
  std::vector<heis::HeisElement> lifts;
  for (const auto& row : w.basis) {
    std::vector<int> a(row.begin(), row.begin() + g.k());
    std::vector<int> b(row.begin() + g.k(), row.end());
    lifts.push_back(g.make(a, b, 0));
  }
  return monos_for(g, lifts);
}

std::vector<Monomial> basis_monos_translations(const HeisGroup& g, const gf::GFSubspace& h) {
  std::vector<heis::HeisElement> lifts;
  for (const auto& row : h.basis)
    lifts.push_back(g.make(row, std::vector<int>(g.k(), 0), 0));
  return monos_for(g, lifts);
}

}  // namespace

Decomposition glom_by_subspace(const HeisGroup& g, const Decomposition& d, const gf::GFSubspace& w,
                               bool allow_improper) {
  return glom(g.field(), d, basis_monos_subspace(g, w), allow_improper);
}

Decomposition glom_by_translations(const HeisGroup& g, const Decomposition& d,
                                   const gf::GFSubspace& h, bool allow_improper) {
  return glom(g.field(), d, basis_monos_translations(g, h), allow_improper);
}

Decomposition isorefine_by_subspace(const HeisGroup& g, const Decomposition& d,
                                    const gf::GFSubspace& w) {
  return isorefine(g.field(), d, basis_monos_subspace(g, w));
}

Decomposition isorefine_by_translations(const HeisGroup& g, const Decomposition& d,
                                        const gf::GFSubspace& h) {
  return isorefine(g.field(), d, basis_monos_translations(g, h));
}

Decomposition uniformize(const HeisGroup& g, const Decomposition& d, const gf::GFSubspace& scope) {
  IsotropyInfo info = isotropy_group(g, d, scope);
  gf::GFSubspace j = gf::zero_subspace(g.p(), 2 * g.k());
  for (const auto& s : info.per_component) j = gf::subspace_sum(j, s);
  Decomposition out = glom_by_subspace(g, d, j, false);
  IsotropyInfo after = isotropy_group(g, out, scope);
  check(after.uniform, "uniformize: result does not have uniform isotropy");
  return out;
}

gf::GFSubspace translation_isotropy(const HeisGroup& g, const Decomposition& d) {
  gf::Matrix rows;
  for (int idx = 0; idx < g.n(); ++idx) {
    Monomial m = g.rep(g.make(g.point(idx), std::vector<int>(g.k(), 0), 0));
    if (monomial_stabilizes_componentwise(g.field(), m, d)) rows.push_back(g.point(idx));
  }
  return gf::rref(g.p(), g.k(), rows);
}

OrbitPredicates membership_predicates(const HeisGroup& g, const Decomposition& d) {
  check(fixed_by_translations(g, d), "membership_predicates: not fixed by the translations");
  OrbitPredicates out;
  UnionFind uf(d.count());
  bool moving = false;
  for (int idx = 0; idx < g.n(); ++idx) {
    Monomial m = g.rep(g.make(g.point(idx), std::vector<int>(g.k(), 0), 0));
    for (int i = 0; i < d.count(); ++i) {
      int j = image_index(g.field(), d, m, i);
      check(j >= 0, "membership_predicates: translation image missing");
      if (j != i) moving = true;
      uf.unite(i, j);
    }
  }
  int orbits = 0;
  for (int i = 0; i < d.count(); ++i)
    if (uf.find(i) == i) ++orbits;
  out.moving = moving;
  out.nontransitive = orbits > 1;
  out.uniform = translation_isotropy_info(g, d).uniform;
  return out;
}

IsotropyInfo translation_isotropy_info(const HeisGroup& g, const Decomposition& d) {
  IsotropyInfo info;
  std::vector<gf::Matrix> stab_rows(d.count());
  gf::Matrix group_rows;
  for (int idx = 0; idx < g.n(); ++idx) {
    Monomial m = g.rep(g.make(g.point(idx), std::vector<int>(g.k(), 0), 0));
    bool all = true;
    for (int i = 0; i < d.count(); ++i) {
      if (apply_monomial(g.field(), m, d.components[i]) == d.components[i])
        stab_rows[i].push_back(g.point(idx));
      else
        all = false;
    }
    if (all) group_rows.push_back(g.point(idx));
  }
  info.group = gf::rref(g.p(), g.k(), group_rows);
  info.uniform = true;
  for (int i = 0; i < d.count(); ++i) {
    info.per_component.push_back(gf::rref(g.p(), g.k(), stab_rows[i]));
    if (!(info.per_component.back() == info.group)) info.uniform = false;
  }
  return info;
}

gf::GFSubspace decomposition_stabilizer(const HeisGroup& g, const Decomposition& d) {
  gf::Matrix rows;
  for (const auto& e : g.class_representatives())
    if (monomial_fixes(g.field(), g.rep(e), d)) rows.push_back(g.projection(e));
  return gf::rref(g.p(), 2 * g.k(), rows);
}

std::vector<heis::HeisElement> subgroup_elements(const HeisGroup& g, const gf::GFSubspace& w) {
  check(w.ambient == 2 * g.k(), "subgroup_elements: ambient mismatch");
  std::vector<heis::HeisElement> out;
  for (const auto& v : gf::enumerate_vectors(w)) {
    std::vector<int> a(v.begin(), v.begin() + g.k());
    std::vector<int> b(v.begin() + g.k(), v.end());
    for (int c = 0; c < g.p(); ++c) out.push_back(g.make(a, b, c));
  }
  return out;
}

cyclo::Cyc character_value(const HeisGroup& g, const cyclo::CycMat& projector,
                           const heis::HeisElement& e) {
  // rho(e) has column y supported in row dest[y] with entry zeta^{phase[y]},
  // so tr(rho(e) P^T) = sum_y P[dest[y]][y] zeta^{phase[y]}
  Monomial m = g.rep(e);
  const cyclo::CycloField& f = g.field();
  cyclo::Cyc acc = f.zero();
  for (int y = 0; y < g.n(); ++y) {
    const cyclo::Cyc& entry = projector[m.dest[y]][y];
    if (f.is_zero(entry)) continue;
    acc = f.add(acc, f.mul(entry, f.zeta(m.phase[y])));
  }
  return acc;
}

mpq_class char_inner_product(const HeisGroup& g, const cyclo::CycloSubspace& v,
                             const cyclo::CycloSubspace& w,
                             const std::vector<heis::HeisElement>& subgroup) {
  const cyclo::CycloField& f = g.field();
  for (const auto& e : subgroup) {
    Monomial m = g.rep(e);
    check(apply_monomial(f, m, v) == v && apply_monomial(f, m, w) == w,
          "char_inner_product: subspace not invariant under the subgroup");
  }
  cyclo::CycMat pv = cyclo::orthogonal_projector(f, v);
  cyclo::CycMat pw = cyclo::orthogonal_projector(f, w);
  cyclo::Cyc acc = f.zero();
  for (const auto& e : subgroup) {
    cyclo::Cyc cv = character_value(g, pv, e);
    cyclo::Cyc cw = character_value(g, pw, e);
    acc = f.add(acc, f.mul(cv, f.conj(cw)));
  }
  mpq_class val = f.rational_part(acc) / subgroup.size();
  check(val >= 0, "char_inner_product: negative value");
  return val;
}

Decomposition isotypical_decomposition(const HeisGroup& g, const gf::GFSubspace& w) {
  const gf::SymplecticSpace& s = g.symplectic();
  check(gf::is_coisotropic(w, s), "isotypical_decomposition: not coisotropic");
  check(w.dim() < 2 * g.k(), "isotypical_decomposition: subspace is not proper");
  gf::GFSubspace rad = gf::radical(w, s);
  Decomposition lambda = isorefine_by_subspace(g, whole_space(g.field(), g.n()), rad);
  int t = 2 * g.k() - w.dim();
  int split = w.dim() - g.k();
  long long expected_count = ipow(g.p(), t);
  long long expected_dim = ipow(g.p(), split);
  check(lambda.count() == expected_count, "isotypical_decomposition: wrong component count");
  for (const auto& v : lambda.components)
    check(v.dim() == expected_dim, "isotypical_decomposition: wrong component dimension");
  std::vector<heis::HeisElement> subgroup = subgroup_elements(g, w);
  for (int i = 0; i < lambda.count(); ++i)
    for (int j = i; j < lambda.count(); ++j) {
      mpq_class ip = char_inner_product(g, lambda.components[i], lambda.components[j], subgroup);
      if (i == j)
        check(ip == 1, "isotypical_decomposition: component character not irreducible");
      else
        check(ip == 0, "isotypical_decomposition: components not pairwise non-isomorphic");
    }
  return lambda;
}

gf::GFSubspace coisotropic_isotropy(const HeisGroup& g, const Decomposition& d) {
  check(fixed_by_all_classes(g, d), "coisotropic_isotropy: decomposition is not fixed");
  IsotropyInfo info = isotropy_group(g, d);
  check(info.uniform, "coisotropic_isotropy: isotropy is not uniform");
  check(info.group.dim() < 2 * g.k(), "coisotropic_isotropy: improper isotropy");
  check(gf::is_coisotropic(info.group, g.symplectic()),
        "coisotropic_isotropy: isotropy is not coisotropic");
  return info.group;
}

Decomposition nested_pair_decomposition(const HeisGroup& g, const gf::GFSubspace& h_sub,
                                        const gf::GFSubspace& k_sub) {
  check(gf::subspace_leq(h_sub, k_sub), "nested_pair_decomposition: subspaces not nested");
  check(!(h_sub.dim() == 0 && k_sub.dim() == g.k()),
        "nested_pair_decomposition: the pair (0, full) is excluded");
  Decomposition eps = basis_line_decomposition(g.field(), g.n());
  Decomposition coarse = glom_by_translations(g, eps, k_sub, /*allow_improper=*/true);
  Decomposition lambda = isorefine_by_translations(g, coarse, h_sub);
  check(lambda.is_proper(), "nested_pair_decomposition: improper result");
  IsotropyInfo info = translation_isotropy_info(g, lambda);
  check(info.uniform && info.group == k_sub,
        "nested_pair_decomposition: translation isotropy is not the glomming subgroup");
  return lambda;
}

}  // namespace declab::decomp
