#include "declab/cyclo.hpp"

#include <doctest.h>

#include <random>

using namespace declab;
using cyclo::Cyc;
using cyclo::CycloField;
using cyclo::CycloSubspace;
using cyclo::CycMat;

namespace {

Cyc rand_scalar(const CycloField& f, std::mt19937& rng) {
  Cyc c = f.zero();
  for (int j = 0; j < f.degree(); ++j)
    c[j] = mpq_class(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 4));
  for (auto& x : c) x.canonicalize();
  return c;
}

}  // namespace

TEST_CASE("scalar arithmetic in Q(zeta_3)") {
  CycloField f = CycloField::for_prime(3);
  Cyc z = f.zeta(1);
  CHECK(f.is_zero(f.sub(f.mul(f.conj(z), z), f.one())));       // conj(z) z = 1
  CHECK(f.is_zero(f.add(f.add(f.one(), z), f.zeta(2))));       // 1 + z + z^2 = 0
  // inv(1 - z) = (2 + z)/3, checked by multiplying out
  Cyc one_minus = f.sub(f.one(), z);
  Cyc inv = f.inv(one_minus);
  Cyc expected = f.mul_rational(f.add(f.from_rational(2), z), mpq_class(1, 3));
  CHECK(f.is_zero(f.sub(inv, expected)));
  CHECK(f.is_zero(f.sub(f.mul(one_minus, inv), f.one())));
  CHECK_THROWS_AS(f.inv(f.zero()), CheckError);
}

TEST_CASE("p = 2 works in Q(i)") {
  CycloField f = CycloField::for_prime(2);
  CHECK(f.m() == 4);
  Cyc i = f.zeta(1);
  CHECK(f.is_zero(f.add(f.mul(i, i), f.one())));      // i^2 = -1
  CHECK(f.is_zero(f.sub(f.conj(i), f.neg(i))));       // conj(i) = -i
  CHECK(f.is_zero(f.sub(f.zeta_p(1), f.from_rational(-1))));  // zeta_2 = -1
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937 rng(11);
  for (int p : {2, 3, 5, 7}) {
    CycloField f = CycloField::for_prime(p);
    for (int trial = 0; trial < 40; ++trial) {
      Cyc a = rand_scalar(f, rng), b = rand_scalar(f, rng), c = rand_scalar(f, rng);
      CHECK(f.is_zero(f.sub(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)))));
      CHECK(f.is_zero(f.sub(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)))));
      CHECK(f.is_zero(f.sub(f.mul(a, b), f.mul(b, a))));
      if (!f.is_zero(a)) CHECK(f.is_zero(f.sub(f.mul(a, f.inv(a)), f.one())));
      // conjugation is a ring map
      CHECK(f.is_zero(f.sub(f.conj(f.mul(a, b)), f.mul(f.conj(a), f.conj(b)))));
    }
  }
}

TEST_CASE("string round trip") {
  std::mt19937 rng(23);
  for (int p : {2, 3, 5}) {
    CycloField f = CycloField::for_prime(p);
    CHECK(f.to_string(f.zero()) == "0");
    for (int trial = 0; trial < 60; ++trial) {
      Cyc a = rand_scalar(f, rng);
      CHECK(f.is_zero(f.sub(f.from_string(f.to_string(a)), a)));
    }
  }
  CycloField f3 = CycloField::for_prime(3);
  Cyc v = f3.add(f3.from_rational(mpq_class(1, 3)), f3.mul_rational(f3.zeta(1), mpq_class(2, 3)));
  CHECK(f3.to_string(v) == "1/3 + 2/3*z");
}

TEST_CASE("kernel, colspace, solve shapes") {
  CycloField f = CycloField::for_prime(2);
  CHECK(cyclo::kernel(f, cyclo::identity_matrix(f, 3)).dim() == 0);
  CycMat m = cyclo::zero_matrix(f, 2, 2);
  m[0][0] = f.one();
  m[0][1] = f.one();
  m[1][0] = f.one();
  m[1][1] = f.from_rational(-1);
  CHECK(cyclo::colspace(f, m).dim() == 2);  // determinant -2
  // kernel of the rank-one projector (1/2)[[1,1],[1,1]] is span{(1,-1)}
  CycMat proj = cyclo::zero_matrix(f, 2, 2);
  for (auto& row : proj)
    for (auto& x : row) x = f.from_rational(mpq_class(1, 2));
  CycloSubspace ker = cyclo::kernel(f, proj);
  CHECK(ker.dim() == 1);
  CHECK(f.is_zero(f.sub(ker.basis[0][0], f.one())));
  CHECK(f.is_zero(f.add(ker.basis[0][1], f.one())));
}

TEST_CASE("solve") {
  std::mt19937 rng(59);
  for (int p : {2, 3}) {
    CycloField f = CycloField::for_prime(p);
    for (int trial = 0; trial < 25; ++trial) {
      int rows = 1 + static_cast<int>(rng() % 3);
      int cols = 1 + static_cast<int>(rng() % 3);
      CycMat m = cyclo::zero_matrix(f, rows, cols);
      for (auto& r : m)
        for (auto& x : r) x = rand_scalar(f, rng);
      std::vector<Cyc> x0(cols);
      for (auto& x : x0) x = rand_scalar(f, rng);
      // consistent by construction: b = m x0
      std::vector<Cyc> b(rows, f.zero());
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) b[i] = f.add(b[i], f.mul(m[i][j], x0[j]));
      auto sol = cyclo::solve(f, m, b);
      REQUIRE(sol.has_value());
      for (int i = 0; i < rows; ++i) {
        Cyc acc = f.zero();
        for (int j = 0; j < cols; ++j) acc = f.add(acc, f.mul(m[i][j], (*sol)[j]));
        CHECK(f.is_zero(f.sub(acc, b[i])));
      }
    }
    // inconsistent system
    CycMat zero_row = cyclo::zero_matrix(f, 1, 2);
    CHECK_FALSE(cyclo::solve(f, zero_row, {f.one()}).has_value());
  }
}

TEST_CASE("rank plus nullity is the column count") {
  std::mt19937 rng(31);
  for (int p : {2, 3}) {
    CycloField f = CycloField::for_prime(p);
    for (int trial = 0; trial < 30; ++trial) {
      int rows = 1 + static_cast<int>(rng() % 4);
      int cols = 1 + static_cast<int>(rng() % 4);
      CycMat m = cyclo::zero_matrix(f, rows, cols);
      for (auto& r : m)
        for (auto& x : r) x = rand_scalar(f, rng);
      CHECK(cyclo::rank(f, m) + cyclo::kernel(f, m).dim() == cols);
    }
  }
}

TEST_CASE("hermitian orthogonality") {
  CycloField f2 = CycloField::for_prime(2);
  auto row = [&](const CycloField& f, std::vector<Cyc> xs) {
    return cyclo::subspace_from_rows(f, static_cast<int>(xs.size()), {xs});
  };
  CycloSubspace e1 = row(f2, {f2.one(), f2.zero()});
  CycloSubspace e2 = row(f2, {f2.zero(), f2.one()});
  CHECK(cyclo::hermitian_orthogonal(f2, e1, e2));
  CycloSubspace diag = row(f2, {f2.one(), f2.one()});
  CycloSubspace anti = row(f2, {f2.one(), f2.from_rational(-1)});
  CHECK(cyclo::hermitian_orthogonal(f2, diag, anti));
  CycloField f3 = CycloField::for_prime(3);
  CycloSubspace zline = row(f3, {f3.one(), f3.zeta(1)});
  CHECK_FALSE(cyclo::hermitian_orthogonal(f3, zline, zline));
}

TEST_CASE("orthogonal projector") {
  CycloField f = CycloField::for_prime(2);
  CHECK(cyclo::mat_eq(cyclo::orthogonal_projector(f, cyclo::full_subspace(f, 3)),
                      cyclo::identity_matrix(f, 3)));
  CycMat rows = cyclo::zero_matrix(f, 1, 2);
  rows[0][0] = f.one();
  rows[0][1] = f.one();
  CycloSubspace diag = cyclo::subspace_from_rows(f, 2, rows);
  CycMat p = cyclo::orthogonal_projector(f, diag);
  for (const auto& r : p)
    for (const auto& x : r) CHECK(f.is_zero(f.sub(x, f.from_rational(mpq_class(1, 2)))));

  std::mt19937 rng(47);
  for (int prime : {2, 3, 5}) {
    CycloField fp = CycloField::for_prime(prime);
    for (int trial = 0; trial < 12; ++trial) {
      int n = 2 + static_cast<int>(rng() % 3);
      int d = 1 + static_cast<int>(rng() % n);
      CycMat m = cyclo::zero_matrix(fp, d, n);
      for (auto& r : m)
        for (auto& x : r) x = rand_scalar(fp, rng);
      CycloSubspace v = cyclo::subspace_from_rows(fp, n, m);
      if (v.dim() == 0) continue;
      CycMat proj = cyclo::orthogonal_projector(fp, v);
      CHECK(cyclo::mat_eq(cyclo::mat_mul(fp, proj, proj), proj));
      CHECK(cyclo::mat_eq(cyclo::conj_transpose(fp, proj), proj));
      CHECK(fp.rational_part(cyclo::trace(fp, proj)) == v.dim());
      // each basis row is fixed
      CycMat fixed = cyclo::mat_mul(fp, v.basis, proj);
      CHECK(cyclo::mat_eq(fixed, v.basis));
    }
  }
}

TEST_CASE("subspace canonical forms") {
  CycloField f = CycloField::for_prime(3);
  CycMat a = cyclo::zero_matrix(f, 1, 2);
  a[0][0] = f.from_rational(2);
  a[0][1] = f.mul_rational(f.zeta(1), mpq_class(2));
  CycMat b = cyclo::zero_matrix(f, 1, 2);
  b[0][0] = f.one();
  b[0][1] = f.zeta(1);
  CHECK(cyclo::subspace_from_rows(f, 2, a) == cyclo::subspace_from_rows(f, 2, b));
  CHECK(cyclo::compare_subspaces(cyclo::subspace_from_rows(f, 2, a),
                                 cyclo::subspace_from_rows(f, 2, b)) == 0);
}
