#include "declab/homology.hpp"

#include <algorithm>
#include <map>

namespace declab::homology {

namespace {

void row_op(ZMat& a, int dst, int src, const mpz_class& q) {
  for (size_t c = 0; c < a[dst].size(); ++c) a[dst][c] -= q * a[src][c];
}

void col_op(ZMat& a, int dst, int src, const mpz_class& q) {
  for (size_t r = 0; r < a.size(); ++r) a[r][dst] -= q * a[r][src];
}

}  // namespace

SmithForm smith_normal_form(const ZMat& m_in, bool with_transforms) {
  ZMat a = m_in;
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  SmithForm out;
  if (with_transforms) {
    out.u.assign(rows, std::vector<mpz_class>(rows, 0));
    out.v.assign(cols, std::vector<mpz_class>(cols, 0));
    for (int i = 0; i < rows; ++i) out.u[i][i] = 1;
    for (int i = 0; i < cols; ++i) out.v[i][i] = 1;
  }
  auto urow = [&](int dst, int src, const mpz_class& q) {
    row_op(a, dst, src, q);
    if (with_transforms) row_op(out.u, dst, src, q);
  };
  auto vcol = [&](int dst, int src, const mpz_class& q) {
    col_op(a, dst, src, q);
    if (with_transforms) col_op(out.v, dst, src, q);
  };
  auto uswap = [&](int i, int j) {
    std::swap(a[i], a[j]);
    if (with_transforms) std::swap(out.u[i], out.u[j]);
  };
  auto vswap = [&](int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    if (with_transforms)
      for (int r = 0; r < cols; ++r) std::swap(out.v[r][i], out.v[r][j]);
  };
  auto unegate = [&](int i) {
    for (auto& x : a[i]) x = -x;
    if (with_transforms)
      for (auto& x : out.u[i]) x = -x;
  };

  int t = 0;
  int bound = std::min(rows, cols);
  while (t < bound) {
    // smallest-magnitude nonzero pivot limits entry growth at this scale
    int pi = -1, pj = -1;
    mpz_class best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        mpz_class mag = abs(a[i][j]);
        if (pi < 0 || mag < best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    uswap(t, pi);
    vswap(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q = a[i][t] / a[t][t];
        urow(i, t, q);
        if (a[i][t] != 0) {  // smaller remainder becomes the pivot
          uswap(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q = a[t][j] / a[t][t];
        vcol(j, t, q);
        if (a[t][j] != 0) {
          vswap(t, j);
          clean = false;
        }
      }
    }
    if (a[t][t] < 0) unegate(t);
    ++t;
  }
  // enforce divisibility along the diagonal
  bool fixed = false;
  while (!fixed) {
    fixed = true;
    for (int i = 0; i + 1 < t; ++i) {
      if (a[i + 1][i + 1] % a[i][i] == 0) continue;
      fixed = false;
      // fold entry (i+1, i+1) into column i, then re-run Euclid at (i, i)
      vcol(i, i + 1, -1);
      bool clean = false;
      while (!clean) {
        clean = true;
        mpz_class q = a[i + 1][i] / a[i][i];
        urow(i + 1, i, q);
        if (a[i + 1][i] != 0) {
          uswap(i, i + 1);
          clean = false;
        }
        if (a[i][i + 1] != 0) {
          mpz_class q2 = a[i][i + 1] / a[i][i];
          vcol(i + 1, i, q2);
          if (a[i][i + 1] != 0) {
            vswap(i, i + 1);
            clean = false;
          }
        }
        if (a[i + 1][i + 1] < 0) unegate(i + 1);
      }
      if (a[i][i] < 0) unegate(i);
    }
  }
  out.rank = t;
  out.diag.resize(t);
  for (int i = 0; i < t; ++i) out.diag[i] = a[i][i];
  return out;
}

ZMat integer_kernel_rows(const ZMat& m) {
  if (m.empty()) return {};
  int cols = static_cast<int>(m[0].size());
  SmithForm s = smith_normal_form(m, true);
  ZMat out;
  for (int j = s.rank; j < cols; ++j) {
    std::vector<mpz_class> x(cols);
    for (int i = 0; i < cols; ++i) x[i] = s.v[i][j];
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<std::vector<mpz_class>> integer_solve(const ZMat& m, const std::vector<mpz_class>& b) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  check(static_cast<int>(b.size()) == rows, "integer_solve: rhs size mismatch");
  if (rows == 0) return std::vector<mpz_class>(cols, 0);
  SmithForm s = smith_normal_form(m, true);
  std::vector<mpz_class> ub(rows, 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rows; ++j)
      if (s.u[i][j] != 0) ub[i] += s.u[i][j] * b[j];
  std::vector<mpz_class> y(cols, 0);
  for (int i = 0; i < rows; ++i) {
    if (i < s.rank) {
      if (ub[i] % s.diag[i] != 0) return std::nullopt;
      if (i < cols) y[i] = ub[i] / s.diag[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<mpz_class> x(cols, 0);
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j)
      if (s.v[i][j] != 0 && y[j] != 0) x[i] += s.v[i][j] * y[j];
  return x;
}

namespace {

// mpq elimination; returns pivot columns, reduces in place
std::vector<int> rref_q(QMat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int sel = -1;
    for (int r = row; r < rows; ++r)
      if (a[r][col] != 0) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(a[row], a[sel]);
    mpq_class inv = 1 / a[row][col];
    for (int c = col; c < cols; ++c) a[row][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      mpq_class f = a[r][col];
      for (int c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

QMat to_q(const ZMat& m) {
  QMat q(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    q[i].resize(m[i].size());
    for (size_t j = 0; j < m[i].size(); ++j) q[i][j] = mpq_class(m[i][j]);
  }
  return q;
}

}  // namespace

int rank_rational(const ZMat& m) {
  QMat q = to_q(m);
  return static_cast<int>(rref_q(q).size());
}

int rank_rational_q(const QMat& m) {
  QMat q = m;
  return static_cast<int>(rref_q(q).size());
}

QMat nullspace_rational(const ZMat& m) {
  if (m.empty()) return {};
  int cols = static_cast<int>(m[0].size());
  QMat q = to_q(m);
  std::vector<int> pivots = rref_q(q);
  std::vector<bool> is_piv(cols, false);
  for (int c : pivots) is_piv[c] = true;
  QMat out;
  for (int freec = 0; freec < cols; ++freec) {
    if (is_piv[freec]) continue;
    std::vector<mpq_class> x(cols, 0);
    x[freec] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -q[i][freec];
    out.push_back(std::move(x));
  }
  return out;
}

long long ChainComplexZ::dim_at(int degree) const {
  int t = degree - min_deg;
  if (t < 0 || t >= static_cast<int>(dims.size())) return 0;
  return dims[t];
}

const ZMat* ChainComplexZ::boundary_at(int degree) const {
  int t = degree - min_deg;
  if (t <= 0 || t >= static_cast<int>(bnd.size())) return nullptr;
  return &bnd[t];
}

ChainComplexZ boundary_matrices(const poset::SimplicialComplex& k, bool reduced) {
  ChainComplexZ c;
  c.min_deg = reduced ? -1 : 0;
  int top = k.dimension();
  if (reduced) c.dims.push_back(1);
  for (int d = 0; d <= top; ++d) c.dims.push_back(k.simplex_count(d));
  if (c.dims.empty()) c.dims.push_back(0);
  c.bnd.resize(c.dims.size());
  std::map<std::vector<int>, int> index_prev;
  if (top >= 0)
    for (size_t i = 0; i < k.by_dim[0].size(); ++i)
      index_prev[k.by_dim[0][i]] = static_cast<int>(i);
  if (reduced && top >= 0) {
    // augmentation: each vertex maps to the generator of the degree -1 copy of Z
    ZMat aug(1, std::vector<mpz_class>(k.by_dim[0].size(), 1));
    c.bnd[1] = std::move(aug);
  }
  for (int d = 1; d <= top; ++d) {
    int t = d - c.min_deg;
    ZMat bd(k.simplex_count(d - 1), std::vector<mpz_class>(k.simplex_count(d), 0));
    for (size_t j = 0; j < k.by_dim[d].size(); ++j) {
      const auto& s = k.by_dim[d][j];
      for (size_t omit = 0; omit <= static_cast<size_t>(d); ++omit) {
        std::vector<int> face;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != omit) face.push_back(s[i]);
        auto it = index_prev.find(face);
        check(it != index_prev.end(), "boundary_matrices: missing face");
        bd[it->second][j] = (omit % 2 == 0) ? 1 : -1;
      }
    }
    c.bnd[t] = std::move(bd);
    index_prev.clear();
    for (size_t i = 0; i < k.by_dim[d].size(); ++i)
      index_prev[k.by_dim[d][i]] = static_cast<int>(i);
  }
  // boundary of boundary vanishes
  for (size_t t = 1; t + 1 < c.bnd.size(); ++t) {
    const ZMat& lo = c.bnd[t];
    const ZMat& hi = c.bnd[t + 1];
    if (lo.empty() || hi.empty()) continue;
    for (size_t col = 0; col < hi[0].size(); ++col)
      for (size_t row = 0; row < lo.size(); ++row) {
        mpz_class acc = 0;
        for (size_t mid = 0; mid < hi.size(); ++mid)
          if (hi[mid][col] != 0 && lo[row][mid] != 0) acc += lo[row][mid] * hi[mid][col];
        check(acc == 0, "boundary_matrices: d o d != 0");
      }
  }
  return c;
}

long long HomologyReport::betti_at(int degree) const {
  for (const auto& d : degrees)
    if (d.degree == degree) return d.betti;
  return 0;
}

bool HomologyReport::torsion_free() const {
  for (const auto& d : degrees)
    if (!d.torsion.empty()) return false;
  return true;
}

HomologyReport homology_of_complex(const ChainComplexZ& c) {
  HomologyReport rep;
  rep.reduced = (c.min_deg == -1);
  int nd = static_cast<int>(c.dims.size());
  std::vector<int> ranks(nd + 1, 0);
  std::vector<std::vector<mpz_class>> torsions(nd + 1);
  for (int t = 1; t < nd; ++t) {
    SmithForm s = smith_normal_form(c.bnd[t]);
    ranks[t] = s.rank;
    for (const auto& d : s.diag)
      if (d > 1) torsions[t].push_back(d);
  }
  long long chi_cells = 0, chi_betti = 0;
  for (int t = 0; t < nd; ++t) {
    int degree = c.min_deg + t;
    long long betti = c.dims[t] - ranks[t] - ranks[t + 1];
    check(betti >= 0, "homology: negative betti");
    int sign = (((degree % 2) + 2) % 2 == 0) ? 1 : -1;
    chi_cells += sign * c.dims[t];
    chi_betti += sign * betti;
    std::vector<mpz_class> tor = torsions[t + 1];
    if (betti != 0 || !tor.empty()) rep.degrees.push_back({degree, betti, std::move(tor)});
  }
  check(chi_cells == chi_betti, "homology: Euler characteristic mismatch");
  return rep;
}

HomologyReport homology(const poset::SimplicialComplex& k, bool reduced) {
  return homology_of_complex(boundary_matrices(k, reduced));
}

namespace {

// image tuple and permutation sign of mapping a sorted source simplex
std::optional<std::pair<std::vector<int>, int>> map_simplex(const std::vector<int>& s,
                                                            const std::vector<int>& vmap) {
  std::vector<int> img(s.size());
  for (size_t i = 0; i < s.size(); ++i) img[i] = vmap[s[i]];
  // bubble sort counting swaps; duplicates kill the simplex
  int sign = 1;
  for (size_t i = 0; i < img.size(); ++i)
    for (size_t j = i + 1; j < img.size(); ++j) {
      if (img[i] == img[j]) return std::nullopt;
      if (img[i] > img[j]) {
        std::swap(img[i], img[j]);
        sign = -sign;
      }
    }
  return std::make_pair(std::move(img), sign);
}

void check_chain_map(const ChainMap& f) {
  check(f.source.min_deg == f.target.min_deg, "chain map: degree offset mismatch");
  int nd = static_cast<int>(f.mats.size());
  for (int t = 1; t < nd; ++t) {
    // target_bnd * f_t = f_{t-1} * source_bnd
    const ZMat* sb = f.source.boundary_at(f.source.min_deg + t);
    const ZMat* tb = f.target.boundary_at(f.target.min_deg + t);
    long long src_lo = f.source.dims[t - 1], src_hi = f.source.dims[t];
    long long tgt_lo = (t - 1 < static_cast<int>(f.target.dims.size())) ? f.target.dims[t - 1] : 0;
    for (long long col = 0; col < src_hi; ++col)
      for (long long row = 0; row < tgt_lo; ++row) {
        mpz_class lhs = 0, rhs = 0;
        if (tb && !tb->empty() && !f.mats[t].empty())
          for (size_t mid = 0; mid < f.mats[t].size(); ++mid)
            lhs += (*tb)[row][mid] * f.mats[t][mid][col];
        if (sb && !sb->empty() && !f.mats[t - 1].empty())
          for (long long mid = 0; mid < src_lo; ++mid)
            rhs += f.mats[t - 1][row][mid] * (*sb)[mid][col];
        check(lhs == rhs, "chain map: does not commute with boundaries");
      }
  }
}

ChainMap build_chain_map(const poset::SimplicialComplex& src, const poset::SimplicialComplex& tgt,
                         const std::vector<int>& vmap, bool reduced) {
  ChainMap f;
  f.source = boundary_matrices(src, reduced);
  f.target = boundary_matrices(tgt, reduced);
  // align lengths
  size_t nd = std::max(f.source.dims.size(), f.target.dims.size());
  while (f.source.dims.size() < nd) {
    f.source.dims.push_back(0);
    f.source.bnd.emplace_back();
  }
  while (f.target.dims.size() < nd) {
    f.target.dims.push_back(0);
    f.target.bnd.emplace_back();
  }
  f.mats.resize(nd);
  int off = reduced ? 1 : 0;
  if (reduced) f.mats[0] = ZMat(1, std::vector<mpz_class>(1, 1));
  std::map<std::vector<int>, int> tgt_index;
  for (int d = 0; d + off < static_cast<int>(nd); ++d) {
    long long nsrc = (d <= src.dimension()) ? src.simplex_count(d) : 0;
    long long ntgt = (d <= tgt.dimension()) ? tgt.simplex_count(d) : 0;
    ZMat m(ntgt, std::vector<mpz_class>(nsrc, 0));
    if (nsrc > 0 && ntgt > 0) {
      tgt_index.clear();
      for (long long i = 0; i < ntgt; ++i) tgt_index[tgt.by_dim[d][i]] = static_cast<int>(i);
      for (long long j = 0; j < nsrc; ++j) {
        auto img = map_simplex(src.by_dim[d][j], vmap);
        if (!img) continue;  // degenerate
        auto it = tgt_index.find(img->first);
        check(it != tgt_index.end(), "chain map: image simplex missing from target");
        m[it->second][j] = img->second;
      }
    }
    f.mats[d + off] = std::move(m);
  }
  check_chain_map(f);
  return f;
}

}  // namespace

ChainMap chain_map_from_poset_map(const poset::PosetMap& f, bool reduced) {
  f.validate();
  poset::SimplicialComplex src = poset::order_complex(f.source);
  poset::SimplicialComplex tgt = poset::order_complex(f.target);
  return build_chain_map(src, tgt, f.assignment, reduced);
}

ChainMap inclusion_chain_map(const poset::SimplicialComplex& sub,
                             const poset::SimplicialComplex& whole, bool reduced) {
  check(sub.vertex_count == whole.vertex_count, "inclusion: vertex sets differ");
  std::vector<int> identity(sub.vertex_count);
  for (int i = 0; i < sub.vertex_count; ++i) identity[i] = i;
  return build_chain_map(sub, whole, identity, reduced);
}

ChainComplexZ mapping_cone(const ChainMap& f) {
  const ChainComplexZ& c = f.source;
  const ChainComplexZ& d = f.target;
  int nd = static_cast<int>(f.mats.size());
  ChainComplexZ cone;
  cone.min_deg = c.min_deg;
  cone.dims.resize(nd + 1);
  for (int t = 0; t <= nd; ++t) {
    long long from_c = (t >= 1 && t - 1 < static_cast<int>(c.dims.size())) ? c.dims[t - 1] : 0;
    long long from_d = (t < static_cast<int>(d.dims.size())) ? d.dims[t] : 0;
    cone.dims[t] = from_c + from_d;
  }
  cone.bnd.resize(nd + 1);
  for (int t = 1; t <= nd; ++t) {
    long long rc = (t >= 2 && t - 2 < static_cast<int>(c.dims.size())) ? c.dims[t - 2] : 0;
    long long rd = (t - 1 < static_cast<int>(d.dims.size())) ? d.dims[t - 1] : 0;
    long long cc = (t - 1 < static_cast<int>(c.dims.size())) ? c.dims[t - 1] : 0;
    long long cd = (t < static_cast<int>(d.dims.size())) ? d.dims[t] : 0;
    ZMat m(rc + rd, std::vector<mpz_class>(cc + cd, 0));
    const ZMat* cb = (t - 1 >= 1 && t - 1 < static_cast<int>(c.bnd.size())) ? &c.bnd[t - 1] : nullptr;
    if (cb && !cb->empty())
      for (long long i = 0; i < rc; ++i)
        for (long long j = 0; j < cc; ++j) m[i][j] = -(*cb)[i][j];
    const ZMat& fm = f.mats[t - 1];
    if (!fm.empty())
      for (long long i = 0; i < rd; ++i)
        for (long long j = 0; j < cc; ++j) m[rc + i][j] = fm[i][j];
    const ZMat* db = (t < static_cast<int>(d.bnd.size())) ? &d.bnd[t] : nullptr;
    if (db && !db->empty())
      for (long long i = 0; i < rd; ++i)
        for (long long j = 0; j < cd; ++j) m[rc + i][cc + j] = (*db)[i][j];
    cone.bnd[t] = std::move(m);
  }
  return cone;
}

bool homology_iso_all_degrees(const ChainMap& f) {
  return homology_of_complex(mapping_cone(f)).trivial();
}

namespace {

// cycles as rows; relations: boundary columns expressed in the cycle basis
struct Presentation {
  ZMat cycles;     // r x dim
  ZMat relations;  // columns are relations in the cycle basis (r x q)
};

Presentation present_homology(const ChainComplexZ& c, int degree) {
  Presentation pres;
  long long dim = c.dim_at(degree);
  const ZMat* out = c.boundary_at(degree);
  if (out && !out->empty()) {
    pres.cycles = integer_kernel_rows(*out);
  } else {
    pres.cycles.assign(dim, std::vector<mpz_class>(dim, 0));
    for (long long i = 0; i < dim; ++i) pres.cycles[i][i] = 1;
  }
  long long r = pres.cycles.size();
  const ZMat* in = c.boundary_at(degree + 1);
  long long q = (in && !in->empty()) ? (*in)[0].size() : 0;
  pres.relations.assign(r, std::vector<mpz_class>(q, 0));
  if (q > 0 && r > 0) {
    ZMat zt(dim, std::vector<mpz_class>(r, 0));
    for (long long i = 0; i < r; ++i)
      for (long long j = 0; j < dim; ++j) zt[j][i] = pres.cycles[i][j];
    for (long long col = 0; col < q; ++col) {
      std::vector<mpz_class> b(dim);
      for (long long i = 0; i < dim; ++i) b[i] = (*in)[i][col];
      auto sol = integer_solve(zt, b);
      check(sol.has_value(), "present_homology: boundary is not a cycle");
      for (long long i = 0; i < r; ++i) pres.relations[i][col] = (*sol)[i];
    }
  }
  return pres;
}

ZMat hstack(const ZMat& a, const ZMat& b, long long rows) {
  check(static_cast<long long>(a.size()) == rows && static_cast<long long>(b.size()) == rows,
        "hstack: row count mismatch");
  ZMat out(rows);
  for (long long i = 0; i < rows; ++i) {
    out[i] = a[i];
    out[i].insert(out[i].end(), b[i].begin(), b[i].end());
  }
  return out;
}

}  // namespace

InducedMap induced_map_on_homology(const ChainMap& f, int degree) {
  int t = degree - f.source.min_deg;
  if (t < 0 || t >= static_cast<int>(f.mats.size()))
    return InducedMap{0, true};  // both homology groups vanish out of range
  Presentation ps = present_homology(f.source, degree);
  Presentation pt = present_homology(f.target, degree);
  long long rs = ps.cycles.size(), rt = pt.cycles.size();
  long long tgt_dim = f.target.dim_at(degree);
  // images of source cycle basis, expressed in the target cycle basis
  ZMat m(rt, std::vector<mpz_class>(rs, 0));
  if (rs > 0 && rt > 0) {
    ZMat zt(tgt_dim, std::vector<mpz_class>(rt, 0));
    for (long long i = 0; i < rt; ++i)
      for (long long j = 0; j < tgt_dim; ++j) zt[j][i] = pt.cycles[i][j];
    const ZMat& fm = f.mats[t];
    for (long long g = 0; g < rs; ++g) {
      std::vector<mpz_class> img(tgt_dim, 0);
      if (!fm.empty())
        for (long long i = 0; i < tgt_dim; ++i)
          for (size_t j = 0; j < ps.cycles[g].size(); ++j)
            if (fm[i][j] != 0 && ps.cycles[g][j] != 0) img[i] += fm[i][j] * ps.cycles[g][j];
      auto sol = integer_solve(zt, img);
      check(sol.has_value(), "induced map: image is not a cycle");
      for (long long i = 0; i < rt; ++i) m[i][g] = (*sol)[i];
    }
  }
  InducedMap out;
  // rank of the induced rational map: rank of M modulo the target relations
  ZMat m_and_rel = hstack(m, pt.relations, rt);
  out.rank = rank_rational(m_and_rel) - rank_rational(pt.relations);
  // surjective: [M | R_t] presents the trivial cokernel
  SmithForm cok = smith_normal_form(m_and_rel);
  bool surjective = (cok.rank == rt);
  for (const auto& d : cok.diag) surjective = surjective && (d == 1);
  // injective: solutions of M x = R_t y must have x in the image of R_s
  bool injective = true;
  if (rt == 0) {
    // target homology trivial: injectivity means the source is trivial too
    SmithForm src_rel = smith_normal_form(ps.relations);
    injective = (src_rel.rank == rs);
    for (const auto& d : src_rel.diag) injective = injective && (d == 1);
  } else {
    ZMat neg_rel = pt.relations;
    for (auto& row : neg_rel)
      for (auto& x : row) x = -x;
    ZMat sys = hstack(m, neg_rel, rt);
    ZMat ker = integer_kernel_rows(sys);
    for (const auto& krow : ker) {
      std::vector<mpz_class> x(krow.begin(), krow.begin() + rs);
      if (!integer_solve(ps.relations, x).has_value()) {
        injective = false;
        break;
      }
    }
  }
  out.iso = surjective && injective;
  return out;
}

}  // namespace declab::homology
