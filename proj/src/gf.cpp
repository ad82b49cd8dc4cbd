#include "declab/gf.hpp"

#include <algorithm>

namespace declab::gf {

namespace {

int norm_mod(long long a, int p) {
  long long r = a % p;
  if (r < 0) r += p;
  return static_cast<int>(r);
}

void reduce_rows(int p, Matrix& rows) {
  for (auto& r : rows)
    for (auto& x : r) x = norm_mod(x, p);
}

}  // namespace

GFVector::GFVector(int p_, Row coords_) : p(p_), coords(std::move(coords_)) {
  for (auto& x : coords) x = norm_mod(x, p);
}

bool GFVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int x) { return x == 0; });
}

GFVector add(const GFVector& u, const GFVector& v) {
  check(u.p == v.p && u.size() == v.size(), "GFVector add: shape mismatch");
  Row out(u.coords);
  for (int i = 0; i < v.size(); ++i) out[i] = norm_mod(out[i] + v.coords[i], u.p);
  return GFVector(u.p, out);
}

GFVector neg(const GFVector& u) { return scale(u.p - 1, u); }

GFVector scale(int s, const GFVector& u) {
  Row out(u.coords);
  for (auto& x : out) x = norm_mod(static_cast<long long>(x) * s, u.p);
  return GFVector(u.p, out);
}

int dot(const GFVector& u, const GFVector& v) {
  check(u.p == v.p && u.size() == v.size(), "GFVector dot: shape mismatch");
  long long acc = 0;
  for (int i = 0; i < u.size(); ++i) acc += static_cast<long long>(u.coords[i]) * v.coords[i];
  return norm_mod(acc, u.p);
}

int mod_inverse(int a, int p) {
  a = norm_mod(a, p);
  check(a != 0, "mod_inverse of zero");
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  fail("mod_inverse: no inverse (p not prime?)");
}

bool GFSubspace::operator<(const GFSubspace& other) const {
  if (dim() != other.dim()) return dim() < other.dim();
  return basis < other.basis;
}

GFSubspace rref(int p, int ambient, const Matrix& rows_in) {
  Matrix rows = rows_in;
  reduce_rows(p, rows);
  for (const auto& r : rows)
    check(static_cast<int>(r.size()) == ambient, "rref: row length != ambient");
  int pivot_row = 0;
  for (int col = 0; col < ambient && pivot_row < static_cast<int>(rows.size()); ++col) {
    int sel = -1;
    for (int r = pivot_row; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(rows[pivot_row], rows[sel]);
    int inv = mod_inverse(rows[pivot_row][col], p);
    for (auto& x : rows[pivot_row]) x = norm_mod(static_cast<long long>(x) * inv, p);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      int f = rows[r][col];
      for (int c = 0; c < ambient; ++c)
        rows[r][c] = norm_mod(rows[r][c] - static_cast<long long>(f) * rows[pivot_row][c], p);
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return GFSubspace{p, ambient, std::move(rows)};
}

GFSubspace zero_subspace(int p, int ambient) { return GFSubspace{p, ambient, {}}; }

GFSubspace full_subspace(int p, int ambient) {
  Matrix rows(ambient, Row(ambient, 0));
  for (int i = 0; i < ambient; ++i) rows[i][i] = 1;
  return GFSubspace{p, ambient, std::move(rows)};
}

bool contains(const GFSubspace& w, const Row& v) {
  Row x = v;
  for (auto& e : x) e = norm_mod(e, w.p);
  for (const auto& row : w.basis) {
    int piv = 0;
    while (piv < w.ambient && row[piv] == 0) ++piv;
    if (piv == w.ambient) continue;
    int f = x[piv];
    if (f == 0) continue;
    for (int c = 0; c < w.ambient; ++c) x[c] = norm_mod(x[c] - static_cast<long long>(f) * row[c], w.p);
  }
  return std::all_of(x.begin(), x.end(), [](int e) { return e == 0; });
}

bool subspace_leq(const GFSubspace& a, const GFSubspace& b) {
  check(a.p == b.p && a.ambient == b.ambient, "subspace_leq: ambient mismatch");
  for (const auto& r : a.basis)
    if (!contains(b, r)) return false;
  return true;
}

GFSubspace subspace_sum(const GFSubspace& a, const GFSubspace& b) {
  check(a.p == b.p && a.ambient == b.ambient, "subspace_sum: ambient mismatch");
  Matrix rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return rref(a.p, a.ambient, rows);
}

GFSubspace dot_annihilator(const GFSubspace& w) {
  // Solve x . r = 0 for all basis rows r: free columns of the RREF basis
  // parameterize the solutions.
  const int n = w.ambient;
  std::vector<int> pivot_col;
  for (const auto& row : w.basis) {
    int c = 0;
    while (c < n && row[c] == 0) ++c;
    pivot_col.push_back(c);
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  Matrix out;
  for (int freec = 0; freec < n; ++freec) {
    if (is_pivot[freec]) continue;
    Row x(n, 0);
    x[freec] = 1;
    for (size_t i = 0; i < w.basis.size(); ++i)
      x[pivot_col[i]] = norm_mod(-w.basis[i][freec], w.p);
    out.push_back(std::move(x));
  }
  return rref(w.p, n, out);
}

GFSubspace subspace_intersection(const GFSubspace& a, const GFSubspace& b) {
  // (A ^ B) = (A* + B*)* with * the dot-product annihilator.
  return dot_annihilator(subspace_sum(dot_annihilator(a), dot_annihilator(b)));
}

std::vector<Row> enumerate_vectors(const GFSubspace& w) {
  std::vector<Row> out;
  const int d = w.dim();
  long long count = ipow(w.p, d);
  out.reserve(count);
  std::vector<int> coef(d, 0);
  for (long long it = 0; it < count; ++it) {
    Row v(w.ambient, 0);
    for (int i = 0; i < d; ++i)
      for (int c = 0; c < w.ambient; ++c)
        v[c] = norm_mod(v[c] + static_cast<long long>(coef[i]) * w.basis[i][c], w.p);
    out.push_back(std::move(v));
    for (int i = d - 1; i >= 0; --i) {
      if (++coef[i] < w.p) break;
      coef[i] = 0;
    }
  }
  return out;
}

int SymplecticSpace::form(const Row& u, const Row& v) const {
  check(static_cast<int>(u.size()) == 2 * k && static_cast<int>(v.size()) == 2 * k,
        "symplectic form: dimension mismatch");
  long long acc = 0;
  for (int i = 0; i < k; ++i) {
    acc += static_cast<long long>(u[i]) * v[k + i];
    acc -= static_cast<long long>(u[k + i]) * v[i];
  }
  return norm_mod(acc, p);
}

Matrix SymplecticSpace::form_matrix() const {
  Matrix j(2 * k, Row(2 * k, 0));
  for (int i = 0; i < k; ++i) {
    j[i][k + i] = 1;
    j[k + i][i] = p - 1;
  }
  return j;
}

GFSubspace perp(const GFSubspace& w, const SymplecticSpace& s) {
  check(w.p == s.p && w.ambient == s.dim(), "perp: ambient mismatch");
  // z in perp(w)  <=>  z . (J^T r) = 0 for each basis row r, i.e. z
  // annihilates the row space of basis * J^T.
  Matrix jt = s.form_matrix();
  // transpose in place (J is antisymmetric: J^T = -J, but keep it generic)
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j) std::swap(jt[i][j], jt[j][i]);
  Matrix rows;
  for (const auto& r : w.basis) {
    Row img(s.dim(), 0);
    for (int c = 0; c < s.dim(); ++c) {
      long long acc = 0;
      for (int t = 0; t < s.dim(); ++t) acc += static_cast<long long>(r[t]) * jt[t][c];
      img[c] = norm_mod(acc, s.p);
    }
    rows.push_back(std::move(img));
  }
  return dot_annihilator(rref(s.p, s.dim(), rows));
}

bool is_coisotropic(const GFSubspace& w, const SymplecticSpace& s) {
  return subspace_leq(perp(w, s), w);
}

GFSubspace radical(const GFSubspace& w, const SymplecticSpace& s) {
  check(is_coisotropic(w, s), "radical: subspace is not coisotropic");
  return subspace_intersection(w, perp(w, s));
}

std::vector<GFSubspace> enumerate_subspaces(int p, int n, std::optional<int> dim_filter) {
  guard_cells(ipow(p, n), 1000000, "enumerate_subspaces");
  std::vector<GFSubspace> out;
  int dlo = dim_filter.value_or(0);
  int dhi = dim_filter.value_or(n);
  for (int d = dlo; d <= dhi; ++d) {
    if (d < 0 || d > n) continue;
    // choose pivot columns c_0 < ... < c_{d-1}, then fill the free entries:
    // entry (i, j) is free iff j > c_i and j is not a pivot column.
    std::vector<int> piv(d);
    for (int i = 0; i < d; ++i) piv[i] = i;
    bool more = (d <= n);
    while (more) {
      std::vector<std::pair<int, int>> free_slots;
      std::vector<bool> is_piv(n, false);
      for (int c : piv) is_piv[c] = true;
      for (int i = 0; i < d; ++i)
        for (int j = piv[i] + 1; j < n; ++j)
          if (!is_piv[j]) free_slots.emplace_back(i, j);
      long long total = ipow(p, static_cast<int>(free_slots.size()));
      std::vector<int> vals(free_slots.size(), 0);
      for (long long it = 0; it < total; ++it) {
        Matrix rows(d, Row(n, 0));
        for (int i = 0; i < d; ++i) rows[i][piv[i]] = 1;
        for (size_t t = 0; t < free_slots.size(); ++t)
          rows[free_slots[t].first][free_slots[t].second] = vals[t];
        out.push_back(GFSubspace{p, n, std::move(rows)});
        for (int t = static_cast<int>(vals.size()) - 1; t >= 0; --t) {
          if (++vals[t] < p) break;
          vals[t] = 0;
        }
      }
      // next pivot combination
      int i = d - 1;
      while (i >= 0 && piv[i] == n - d + i) --i;
      if (i < 0) {
        more = false;
      } else {
        ++piv[i];
        for (int j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
      }
      if (d == 0) more = false;  // single empty basis
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace declab::gf
