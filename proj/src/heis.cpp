#include "declab/heis.hpp"

#include <algorithm>

namespace declab::heis {

HeisGroup::HeisGroup(int p, int k)
    : p_(p), k_(k), field_(cyclo::CycloField::for_prime(p)), sympl_{p, k} {
  check(is_small_prime(p) && k >= 1, "HeisGroup: bad parameters");
  long long n = ipow(p, k);
  guard_cells(n, 4096, "HeisGroup");
  n_ = static_cast<int>(n);
  points_.assign(n_, std::vector<int>(k));
  for (int idx = 0; idx < n_; ++idx) {
    int v = idx;
    for (int t = k - 1; t >= 0; --t) {
      points_[idx][t] = v % p;
      v /= p;
    }
  }
}

int HeisGroup::point_index(const std::vector<int>& x) const {
  int idx = 0;
  for (int t = 0; t < k_; ++t) idx = idx * p_ + ((x[t] % p_) + p_) % p_;
  return idx;
}

HeisElement HeisGroup::identity() const {
  return HeisElement{std::vector<int>(k_, 0), std::vector<int>(k_, 0), 0};
}

HeisElement HeisGroup::make(std::vector<int> a, std::vector<int> b, int c) const {
  check(static_cast<int>(a.size()) == k_ && static_cast<int>(b.size()) == k_,
        "HeisElement: length mismatch");
  for (auto& x : a) x = ((x % p_) + p_) % p_;
  for (auto& x : b) x = ((x % p_) + p_) % p_;
  return HeisElement{std::move(a), std::move(b), ((c % p_) + p_) % p_};
}

HeisElement HeisGroup::mul(const HeisElement& g, const HeisElement& h) const {
  // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+b.a')
  std::vector<int> a(k_), b(k_);
  int twist = 0;
  for (int t = 0; t < k_; ++t) {
    a[t] = (g.a[t] + h.a[t]) % p_;
    b[t] = (g.b[t] + h.b[t]) % p_;
    twist += g.b[t] * h.a[t];
  }
  return HeisElement{std::move(a), std::move(b), (g.c + h.c + twist) % p_};
}

HeisElement HeisGroup::inv(const HeisElement& g) const {
  std::vector<int> a(k_), b(k_);
  int twist = 0;
  for (int t = 0; t < k_; ++t) {
    a[t] = (p_ - g.a[t]) % p_;
    b[t] = (p_ - g.b[t]) % p_;
    twist += g.b[t] * g.a[t];
  }
  return HeisElement{std::move(a), std::move(b), ((twist - g.c) % p_ + p_) % p_};
}

HeisElement HeisGroup::commutator(const HeisElement& g, const HeisElement& h) const {
  return mul(mul(inv(g), inv(h)), mul(g, h));
}

std::vector<int> HeisGroup::projection(const HeisElement& g) const {
  std::vector<int> v = g.a;
  v.insert(v.end(), g.b.begin(), g.b.end());
  return v;
}

bool HeisGroup::is_central(const HeisElement& g) const {
  for (int t = 0; t < k_; ++t)
    if (g.a[t] != 0 || g.b[t] != 0) return false;
  return true;
}

std::vector<HeisElement> HeisGroup::all_elements() const {
  std::vector<HeisElement> out;
  out.reserve(static_cast<size_t>(n_) * n_ * p_);
  for (int ia = 0; ia < n_; ++ia)
    for (int ib = 0; ib < n_; ++ib)
      for (int c = 0; c < p_; ++c) out.push_back(HeisElement{points_[ia], points_[ib], c});
  return out;
}

std::vector<HeisElement> HeisGroup::class_representatives() const {
  std::vector<HeisElement> out;
  out.reserve(static_cast<size_t>(n_) * n_);
  for (int ia = 0; ia < n_; ++ia)
    for (int ib = 0; ib < n_; ++ib) out.push_back(HeisElement{points_[ia], points_[ib], 0});
  return out;
}

std::vector<HeisElement> HeisGroup::lift_subspace(const gf::GFSubspace& w) const {
  check(w.ambient == 2 * k_, "lift_subspace: ambient mismatch");
  std::vector<HeisElement> out;
  for (const auto& v : gf::enumerate_vectors(w)) {
    std::vector<int> a(v.begin(), v.begin() + k_);
    std::vector<int> b(v.begin() + k_, v.end());
    bool zero = std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
    if (!zero) out.push_back(HeisElement{std::move(a), std::move(b), 0});
  }
  return out;
}

std::vector<HeisElement> HeisGroup::lift_translations(const gf::GFSubspace& h) const {
  check(h.ambient == k_, "lift_translations: ambient mismatch");
  std::vector<HeisElement> out;
  for (const auto& v : gf::enumerate_vectors(h)) {
    bool zero = std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
    if (!zero) out.push_back(HeisElement{v, std::vector<int>(k_, 0), 0});
  }
  return out;
}

Monomial HeisGroup::rep(const HeisElement& g) const {
  Monomial m;
  m.dest.resize(n_);
  m.phase.resize(n_);
  int scale = field_.m() / p_;  // zeta_p as a power of zeta_m
  for (int ix = 0; ix < n_; ++ix) {
    const auto& x = points_[ix];
    std::vector<int> y(k_);
    int e = g.c;
    for (int t = 0; t < k_; ++t) {
      y[t] = (x[t] + g.a[t]) % p_;
      e += g.b[t] * x[t];
    }
    m.dest[ix] = point_index(y);
    m.phase[ix] = (e % p_) * scale;
  }
  return m;
}

Monomial HeisGroup::mono_mul(const Monomial& g, const Monomial& h) const {
  // (g h) e_x = g(zeta^{h.phase[x]} e_{h.dest[x]})
  Monomial m;
  m.dest.resize(n_);
  m.phase.resize(n_);
  for (int x = 0; x < n_; ++x) {
    m.dest[x] = g.dest[h.dest[x]];
    m.phase[x] = (h.phase[x] + g.phase[h.dest[x]]) % field_.m();
  }
  return m;
}

cyclo::CycMat HeisGroup::dense(const HeisElement& g) const {
  return monomial_to_dense(field_, rep(g));
}

cyclo::Cyc HeisGroup::trace(const HeisElement& g) const {
  return cyclo::trace(field_, dense(g));
}

std::vector<cyclo::Cyc> apply_monomial(const cyclo::CycloField& f, const Monomial& m,
                                       const std::vector<cyclo::Cyc>& row) {
  std::vector<cyclo::Cyc> out(row.size(), f.zero());
  for (int x = 0; x < m.size(); ++x) {
    if (f.is_zero(row[x])) continue;
    out[m.dest[x]] = f.add(out[m.dest[x]], f.mul(row[x], f.zeta(m.phase[x])));
  }
  return out;
}

cyclo::CycloSubspace apply_monomial(const cyclo::CycloField& f, const Monomial& m,
                                    const cyclo::CycloSubspace& v) {
  cyclo::CycMat rows;
  rows.reserve(v.basis.size());
  for (const auto& r : v.basis) rows.push_back(apply_monomial(f, m, r));
  return cyclo::subspace_from_rows(f, v.ambient, rows);
}

cyclo::CycMat monomial_to_dense(const cyclo::CycloField& f, const Monomial& m) {
  cyclo::CycMat out = cyclo::zero_matrix(f, m.size(), m.size());
  for (int x = 0; x < m.size(); ++x) out[m.dest[x]][x] = f.zeta(m.phase[x]);
  return out;
}

}  // namespace declab::heis
