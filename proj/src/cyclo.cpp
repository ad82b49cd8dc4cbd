#include "declab/cyclo.hpp"

#include <algorithm>
#include <sstream>

namespace declab::cyclo {

CycloField CycloField::for_prime(int p) {
  check(is_small_prime(p), "CycloField: p must be a small prime");
  CycloField f;
  f.p_ = p;
  f.m_ = (p == 2) ? 4 : p;
  f.deg_ = (p == 2) ? 2 : p - 1;
  // Reduction of zeta^j modulo the minimal polynomial: x^2 + 1 for m = 4,
  // 1 + x + ... + x^{p-1} for m = p.
  int maxpow = std::max(2 * f.deg_ - 2, f.m_ - 1) + 1;
  f.power_red_.resize(maxpow);
  for (int j = 0; j < f.deg_; ++j) {
    f.power_red_[j] = Cyc(f.deg_, 0);
    f.power_red_[j][j] = 1;
  }
  Cyc top(f.deg_, 0);  // zeta^deg
  if (p == 2) {
    top[0] = -1;  // i^2 = -1
  } else {
    for (int j = 0; j < f.deg_; ++j) top[j] = -1;  // zeta^{p-1} = -(1+...+zeta^{p-2})
  }
  if (f.deg_ < maxpow) f.power_red_[f.deg_] = top;
  for (int j = f.deg_ + 1; j < maxpow; ++j) {
    // zeta^j = zeta * zeta^{j-1}
    const Cyc& prev = f.power_red_[j - 1];
    Cyc cur(f.deg_, 0);
    for (int t = 0; t + 1 < f.deg_; ++t) cur[t + 1] += prev[t];
    if (prev[f.deg_ - 1] != 0)
      for (int t = 0; t < f.deg_; ++t) cur[t] += prev[f.deg_ - 1] * top[t];
    f.power_red_[j] = std::move(cur);
  }
  return f;
}

Cyc CycloField::from_rational(const mpq_class& q) const {
  Cyc c(deg_, 0);
  c[0] = q;
  return c;
}

Cyc CycloField::zeta(int power) const {
  int j = power % m_;
  if (j < 0) j += m_;
  return power_red_[j];
}

Cyc CycloField::zeta_p(int power) const { return zeta(power * (m_ / p_)); }

bool CycloField::is_zero(const Cyc& a) const {
  return std::all_of(a.begin(), a.end(), [](const mpq_class& x) { return x == 0; });
}

bool CycloField::is_rational(const Cyc& a) const {
  for (int j = 1; j < deg_; ++j)
    if (a[j] != 0) return false;
  return true;
}

mpq_class CycloField::rational_part(const Cyc& a) const {
  check(is_rational(a), "rational_part: value is not rational: " + to_string(a));
  return a[0];
}

Cyc CycloField::add(const Cyc& a, const Cyc& b) const {
  Cyc c(a);
  for (int j = 0; j < deg_; ++j) c[j] += b[j];
  return c;
}

Cyc CycloField::sub(const Cyc& a, const Cyc& b) const {
  Cyc c(a);
  for (int j = 0; j < deg_; ++j) c[j] -= b[j];
  return c;
}

Cyc CycloField::neg(const Cyc& a) const {
  Cyc c(a);
  for (auto& x : c) x = -x;
  return c;
}

Cyc CycloField::mul(const Cyc& a, const Cyc& b) const {
  Cyc c(deg_, 0);
  for (int i = 0; i < deg_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < deg_; ++j) {
      if (b[j] == 0) continue;
      mpq_class prod = a[i] * b[j];
      const Cyc& red = power_red_[i + j];
      for (int t = 0; t < deg_; ++t)
        if (red[t] != 0) c[t] += prod * red[t];
    }
  }
  return c;
}

Cyc CycloField::mul_rational(const Cyc& a, const mpq_class& q) const {
  Cyc c(a);
  for (auto& x : c) x *= q;
  return c;
}

Cyc CycloField::inv(const Cyc& a) const {
  check(!is_zero(a), "inversion of zero");
  // Solve a * x = 1 as a linear system over Q in the power basis.
  int n = deg_;
  std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(n + 1, 0));
  for (int j = 0; j < n; ++j) {
    Cyc col = mul(a, power_red_[j]);  // a * zeta^j
    for (int i = 0; i < n; ++i) aug[i][j] = col[i];
  }
  aug[0][n] = 1;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int sel = -1;
    for (int r = row; r < n; ++r)
      if (aug[r][col] != 0) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(aug[row], aug[sel]);
    mpq_class pivinv = 1 / aug[row][col];
    for (auto& x : aug[row]) x *= pivinv;
    for (int r = 0; r < n; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      mpq_class fct = aug[r][col];
      for (int c2 = col; c2 <= n; ++c2) aug[r][c2] -= fct * aug[row][c2];
    }
    ++row;
  }
  check(row == n, "inv: element not invertible");
  Cyc x(n, 0);
  for (int i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

Cyc CycloField::conj(const Cyc& a) const {
  Cyc c(deg_, 0);
  c[0] = a[0];
  for (int j = 1; j < deg_; ++j) {
    if (a[j] == 0) continue;
    const Cyc& red = power_red_[m_ - j];
    for (int t = 0; t < deg_; ++t) c[t] += a[j] * red[t];
  }
  return c;
}

int CycloField::compare(const Cyc& a, const Cyc& b) {
  for (size_t j = 0; j < a.size(); ++j) {
    int c = cmp(a[j], b[j]);
    if (c != 0) return c;
  }
  return 0;
}

std::string CycloField::to_string(const Cyc& a) const {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < deg_; ++j) {
    if (a[j] == 0) continue;
    mpq_class v = a[j];
    if (first) {
      if (v < 0) { os << "-"; v = -v; }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    bool unit = (v == 1 && j > 0);
    if (!unit) os << v.get_str();
    if (j > 0) {
      if (!unit) os << "*";
      os << "z";
      if (j > 1) os << "^" << j;
    }
  }
  if (first) os << "0";
  return os.str();
}

Cyc CycloField::from_string(const std::string& s) const {
  Cyc out = zero();
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
  int sign = 1;
  skip_ws();
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  while (i < s.size()) {
    skip_ws();
    size_t start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
    std::string term = s.substr(start, i - start);
    // strip trailing spaces
    while (!term.empty() && term.back() == ' ') term.pop_back();
    check(!term.empty(), "from_string: empty term in '" + s + "'");
    mpq_class coef = 1;
    int power = 0;
    size_t star = term.find('*');
    std::string num_part, z_part;
    if (star != std::string::npos) {
      num_part = term.substr(0, star);
      z_part = term.substr(star + 1);
    } else if (term[0] == 'z') {
      z_part = term;
    } else {
      num_part = term;
    }
    if (!num_part.empty()) coef = mpq_class(num_part);
    if (!z_part.empty()) {
      check(z_part[0] == 'z', "from_string: bad term '" + term + "'");
      power = (z_part.size() > 1) ? std::stoi(z_part.substr(2)) : 1;
    }
    coef.canonicalize();
    Cyc piece = mul_rational(zeta(power), coef * sign);
    out = add(out, piece);
    skip_ws();
    if (i < s.size()) {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
    }
  }
  return out;
}

// --- matrices ---

CycMat zero_matrix(const CycloField& f, int rows, int cols) {
  return CycMat(rows, std::vector<Cyc>(cols, f.zero()));
}

CycMat identity_matrix(const CycloField& f, int n) {
  CycMat m = zero_matrix(f, n, n);
  for (int i = 0; i < n; ++i) m[i][i] = f.one();
  return m;
}

CycMat transpose(const CycMat& mat) {
  if (mat.empty()) return {};
  CycMat out(mat[0].size(), std::vector<Cyc>(mat.size()));
  for (size_t i = 0; i < mat.size(); ++i)
    for (size_t j = 0; j < mat[0].size(); ++j) out[j][i] = mat[i][j];
  return out;
}

CycMat conj_transpose(const CycloField& f, const CycMat& mat) {
  CycMat out = transpose(mat);
  for (auto& row : out)
    for (auto& x : row) x = f.conj(x);
  return out;
}

CycMat mat_mul(const CycloField& f, const CycMat& a, const CycMat& b) {
  check(a.empty() || b.empty() || a[0].size() == b.size(), "mat_mul: shape mismatch");
  if (a.empty() || b.empty()) return zero_matrix(f, a.size(), b.empty() ? 0 : b[0].size());
  CycMat out = zero_matrix(f, a.size(), b[0].size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t t = 0; t < b.size(); ++t) {
      if (f.is_zero(a[i][t])) continue;
      for (size_t j = 0; j < b[0].size(); ++j) {
        if (f.is_zero(b[t][j])) continue;
        out[i][j] = f.add(out[i][j], f.mul(a[i][t], b[t][j]));
      }
    }
  return out;
}

CycMat mat_sub(const CycloField& f, const CycMat& a, const CycMat& b) {
  CycMat out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[i][j] = f.sub(a[i][j], b[i][j]);
  return out;
}

Cyc trace(const CycloField& f, const CycMat& a) {
  Cyc t = f.zero();
  for (size_t i = 0; i < a.size(); ++i) t = f.add(t, a[i][i]);
  return t;
}

bool mat_is_zero(const CycloField& f, const CycMat& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!f.is_zero(x)) return false;
  return true;
}

bool mat_eq(const CycMat& a, const CycMat& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

std::vector<int> rref_in_place(const CycloField& f, CycMat& mat) {
  std::vector<int> pivots;
  if (mat.empty()) return pivots;
  int nrows = static_cast<int>(mat.size());
  int ncols = static_cast<int>(mat[0].size());
  int row = 0;
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int sel = -1;
    for (int r = row; r < nrows; ++r)
      if (!f.is_zero(mat[r][col])) { sel = r; break; }
    if (sel < 0) continue;
    std::swap(mat[row], mat[sel]);
    Cyc pivinv = f.inv(mat[row][col]);
    for (int c = col; c < ncols; ++c) mat[row][c] = f.mul(mat[row][c], pivinv);
    for (int r = 0; r < nrows; ++r) {
      if (r == row || f.is_zero(mat[r][col])) continue;
      Cyc fct = mat[r][col];
      for (int c = col; c < ncols; ++c)
        mat[r][c] = f.sub(mat[r][c], f.mul(fct, mat[row][c]));
    }
    pivots.push_back(col);
    ++row;
  }
  mat.resize(pivots.size());
  return pivots;
}

int rank(const CycloField& f, const CycMat& mat) {
  CycMat copy = mat;
  return static_cast<int>(rref_in_place(f, copy).size());
}

CycMat inverse(const CycloField& f, const CycMat& mat) {
  int n = static_cast<int>(mat.size());
  CycMat aug = mat;
  CycMat id = identity_matrix(f, n);
  for (int i = 0; i < n; ++i)
    aug[i].insert(aug[i].end(), id[i].begin(), id[i].end());
  std::vector<int> piv = rref_in_place(f, aug);
  check(static_cast<int>(piv.size()) == n && (n == 0 || piv[n - 1] == n - 1),
        "inverse: singular matrix");
  CycMat out = zero_matrix(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

CycMat kernel_rows(const CycloField& f, const CycMat& mat) {
  if (mat.empty()) return {};
  int ncols = static_cast<int>(mat[0].size());
  CycMat red = mat;
  std::vector<int> pivots = rref_in_place(f, red);
  std::vector<bool> is_piv(ncols, false);
  for (int c : pivots) is_piv[c] = true;
  CycMat out;
  for (int freec = 0; freec < ncols; ++freec) {
    if (is_piv[freec]) continue;
    std::vector<Cyc> x(ncols, f.zero());
    x[freec] = f.one();
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(red[i][freec]);
    out.push_back(std::move(x));
  }
  return out;
}

CycMat left_kernel_rows(const CycloField& f, const CycMat& mat) {
  return kernel_rows(f, transpose(mat));
}

std::optional<std::vector<Cyc>> solve(const CycloField& f, const CycMat& mat,
                                      const std::vector<Cyc>& b) {
  check(mat.size() == b.size(), "solve: rhs size mismatch");
  if (mat.empty()) return std::vector<Cyc>{};
  int ncols = static_cast<int>(mat[0].size());
  CycMat aug = mat;
  for (size_t i = 0; i < mat.size(); ++i) aug[i].push_back(b[i]);
  std::vector<int> pivots = rref_in_place(f, aug);
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;  // inconsistent
  std::vector<Cyc> x(ncols, f.zero());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][ncols];
  return x;
}

CycloSubspace subspace_from_rows(const CycloField& f, int ambient, const CycMat& rows) {
  guard_cells(ambient, 32, "CycloSubspace ambient dimension");
  for (const auto& r : rows)
    check(static_cast<int>(r.size()) == ambient, "subspace_from_rows: row length mismatch");
  CycMat red = rows;
  rref_in_place(f, red);
  return CycloSubspace{ambient, std::move(red)};
}

CycloSubspace zero_subspace(int ambient) { return CycloSubspace{ambient, {}}; }

CycloSubspace full_subspace(const CycloField& f, int ambient) {
  return CycloSubspace{ambient, identity_matrix(f, ambient)};
}

CycloSubspace colspace(const CycloField& f, const CycMat& mat) {
  CycMat t = transpose(mat);
  int ambient = static_cast<int>(mat.size());
  return subspace_from_rows(f, ambient, t);
}

CycloSubspace kernel(const CycloField& f, const CycMat& mat) {
  if (mat.empty()) return zero_subspace(0);
  int ambient = static_cast<int>(mat[0].size());
  return subspace_from_rows(f, ambient, kernel_rows(f, mat));
}

bool subspace_contains(const CycloField& f, const CycloSubspace& v, const std::vector<Cyc>& row) {
  check(static_cast<int>(row.size()) == v.ambient, "subspace_contains: length mismatch");
  std::vector<Cyc> x = row;
  for (const auto& brow : v.basis) {
    int piv = 0;
    while (piv < v.ambient && f.is_zero(brow[piv])) ++piv;
    if (piv == v.ambient || f.is_zero(x[piv])) continue;
    Cyc fct = x[piv];
    for (int c = 0; c < v.ambient; ++c) x[c] = f.sub(x[c], f.mul(fct, brow[c]));
  }
  return std::all_of(x.begin(), x.end(), [&](const Cyc& e) { return f.is_zero(e); });
}

bool subspace_leq(const CycloField& f, const CycloSubspace& a, const CycloSubspace& b) {
  check(a.ambient == b.ambient, "subspace_leq: ambient mismatch");
  if (a.dim() > b.dim()) return false;
  for (const auto& r : a.basis)
    if (!subspace_contains(f, b, r)) return false;
  return true;
}

CycloSubspace subspace_sum(const CycloField& f, const CycloSubspace& a, const CycloSubspace& b) {
  check(a.ambient == b.ambient, "subspace_sum: ambient mismatch");
  CycMat rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return subspace_from_rows(f, a.ambient, rows);
}

int compare_subspaces(const CycloSubspace& a, const CycloSubspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.ambient; ++j) {
      int c = CycloField::compare(a.basis[i][j], b.basis[i][j]);
      if (c != 0) return c;
    }
  return 0;
}

bool hermitian_orthogonal(const CycloField& f, const CycloSubspace& v, const CycloSubspace& w) {
  check(v.ambient == w.ambient, "hermitian_orthogonal: ambient mismatch");
  return mat_is_zero(f, mat_mul(f, v.basis, conj_transpose(f, w.basis)));
}

CycMat orthogonal_projector(const CycloField& f, const CycloSubspace& v) {
  check(v.dim() > 0, "orthogonal_projector: zero subspace");
  CycMat bstar = conj_transpose(f, v.basis);          // n x d
  CycMat gram = mat_mul(f, v.basis, bstar);           // d x d, invertible
  return mat_mul(f, mat_mul(f, bstar, inverse(f, gram)), v.basis);
}

}  // namespace declab::cyclo
