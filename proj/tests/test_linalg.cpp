#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xprod/kernels.hpp"
#include "xprod/linalg.hpp"

using namespace xprod;

namespace {

Matrix from_rows(Field f, const std::vector<std::vector<long>>& rows) {
  Matrix m(f, static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = f.from_long(rows[i][j]);
  return m;
}

Matrix random_matrix(Field f, int rows, int cols, uint64_t seed) {
  Rng rng(seed);
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = f.from_long(rng.next_in(-6, 6));
  return m;
}

}  // namespace

TEST_CASE("solve: identity, inconsistent and modular cases") {
  Field q(0), f7(7);
  Matrix b = from_rows(q, {{3}, {-5}});
  auto x = solve(Matrix::identity(q, 2), b);
  REQUIRE(x);
  CHECK(*x == b);

  CHECK_FALSE(solve(from_rows(q, {{1, 1}, {2, 2}}), from_rows(q, {{1}, {3}})));

  auto xm = solve(from_rows(f7, {{2}}), from_rows(f7, {{1}}));
  REQUIRE(xm);
  CHECK(xm->at(0, 0) == Scalar(4));
}

TEST_CASE("solve throws on shape mismatch") {
  Field q(0);
  CHECK_THROWS_AS(solve(Matrix::identity(q, 2), Matrix::identity(q, 3)), Error);
}

TEST_CASE("kernel: conventions and exactness") {
  Field q(0);
  CHECK(kernel_basis(Matrix::identity(q, 3)).cols() == 0);
  CHECK(kernel_basis(Matrix(q, 2, 2)) == Matrix::identity(q, 2));

  Matrix k = kernel_basis(from_rows(q, {{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k.at(0, 0) == Scalar(-1));
  CHECK(k.at(1, 0) == Scalar(1));
}

TEST_CASE("rank identities") {
  Field q(0);
  CHECK(rank(Matrix::identity(q, 5)) == 5);
  CHECK(rank(Matrix(q, 3, 4)) == 0);
  CHECK(rank(from_rows(q, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("random solve/kernel properties over Q and GF(7)") {
  for (unsigned long p : {0ul, 7ul}) {
    Field f(p);
    for (uint64_t seed = 1; seed <= 8; ++seed) {
      Matrix a = random_matrix(f, 4, 5, seed);
      Matrix xtrue = random_matrix(f, 5, 2, seed + 100);
      Matrix b = a * xtrue;
      auto x = solve(a, b);
      REQUIRE(x);
      CHECK(a * *x == b);  // exact, no tolerance

      Matrix k = kernel_basis(a);
      CHECK((a * k).is_zero());
      CHECK(rank(a) + k.cols() == a.cols());
      CHECK(rank(a) == rank(a.transpose()));

      Matrix c = random_matrix(f, 5, 3, seed + 200);
      CHECK(rank(a * c) <= std::min(rank(a), rank(c)));
    }
  }
}

TEST_CASE("determinism: equal inputs give bit-identical outputs") {
  Field q(0);
  Matrix a = random_matrix(q, 6, 6, 42);
  CHECK(rref(a).reduced == rref(a).reduced);
  CHECK(kernel_basis(a) == kernel_basis(a));
  Matrix b = random_matrix(q, 6, 2, 43);
  CHECK(*solve(a, b) == *solve(a, b));
}

TEST_CASE("quotient_basis: dimensions and projection behaviour") {
  Field q(0);
  QuotientBasis zero = quotient_basis(Matrix(q, 3, 0), 3);
  CHECK(zero.dim() == 3);
  CHECK(zero.projection == Matrix::identity(q, 3));

  Matrix e1(q, 2, 1);
  e1.at(0, 0) = 1;
  QuotientBasis qb = quotient_basis(e1, 2);
  CHECK(qb.dim() == 1);
  CHECK((qb.projection * e1).is_zero());

  Matrix sub = from_rows(q, {{1, 0}, {1, 1}, {0, 2}});
  QuotientBasis qb3 = quotient_basis(sub, 3);
  CHECK(qb3.dim() == 1);
  CHECK((qb3.projection * sub).is_zero());
  // projection ∘ complement = identity on the quotient
  CHECK((qb3.projection * qb3.complement).is_identity());
}

TEST_CASE("parallel kernels match the serial reference bit for bit") {
  Field f7(7), q(0);
  Matrix a7 = random_matrix(f7, 40, 40, 7);
  Matrix b7 = random_matrix(f7, 40, 40, 8);
  CHECK(kernels::mat_mul_serial(a7, b7) == kernels::mat_mul_parallel(a7, b7));

  Matrix aq = random_matrix(q, 25, 25, 9);
  Matrix bq = random_matrix(q, 25, 25, 10);
  CHECK(kernels::mat_mul_serial(aq, bq) == kernels::mat_mul_parallel(aq, bq));

  auto check = [](long i) { return i % 97 != 53; };
  CHECK(kernels::find_first_violation(500, check) == kernels::find_first_violation_serial(500, check));
  auto all_good = [](long) { return true; };
  CHECK_FALSE(kernels::find_first_violation(500, all_good));
}

TEST_CASE("inverse round trip") {
  Field f11(11);
  Matrix a = random_matrix(f11, 5, 5, 77);
  auto inv = inverse(a);
  if (inv) CHECK((a * *inv).is_identity());
  CHECK_FALSE(inverse(Matrix(f11, 3, 3)));
}
