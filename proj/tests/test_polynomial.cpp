#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xprod/matrix.hpp"
#include "xprod/polynomial.hpp"

using namespace xprod;

namespace {

Poly make(Field f, std::vector<long> coeffs) {
  std::vector<Scalar> c;
  for (long v : coeffs) c.push_back(f.from_long(v));
  return Poly(f, std::move(c));
}

Poly product_of(const std::vector<std::pair<Poly, int>>& factors, Field f) {
  Poly acc = Poly::constant(f, f.one());
  for (const auto& [p, m] : factors)
    for (int i = 0; i < m; ++i) acc = poly_mul(acc, p);
  return acc;
}

}  // namespace

TEST_CASE("divmod round trip and gcd") {
  Field q(0);
  Poly a = make(q, {1, 0, -3, 0, 1});  // x^4 - 3x^2 + 1
  Poly b = make(q, {-1, 1});           // x - 1
  auto [quo, rem] = poly_divmod(a, b);
  CHECK(poly_add(poly_mul(quo, b), rem) == a);
  CHECK(rem.degree() < b.degree());

  Poly g = poly_gcd(poly_mul(a, b), poly_mul(b, b));
  CHECK(g == poly_monic(b));
}

TEST_CASE("cyclotomic factorization over Q") {
  Field q(0);
  auto fs = factor(make(q, {-1, 0, 0, 1}));  // x^3 - 1
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == make(q, {-1, 1}));
  CHECK(fs[1].first == make(q, {1, 1, 1}));
  CHECK(product_of(fs, q) == make(q, {-1, 0, 0, 1}));
}

TEST_CASE("x^3 - 1 splits into linears mod 7") {
  Field f7(7);
  auto fs = factor(make(f7, {-1, 0, 0, 1}));
  CHECK(fs.size() == 3);
  for (const auto& [p, m] : fs) {
    CHECK(p.degree() == 1);
    CHECK(m == 1);
  }
  CHECK(product_of(fs, f7) == poly_monic(make(f7, {-1, 0, 0, 1})));
}

TEST_CASE("irreducibility of x^2 - 2 and x^2 + x + 1 over Q") {
  Field q(0);
  CHECK(is_irreducible(make(q, {-2, 0, 1})));
  CHECK(is_irreducible(make(q, {1, 1, 1})));
  CHECK_FALSE(is_irreducible(make(q, {-1, 0, 1})));
}

TEST_CASE("multiplicities survive squarefree decomposition") {
  Field q(0);
  // (x-1)^2 (x+2)
  Poly p = poly_mul(poly_mul(make(q, {-1, 1}), make(q, {-1, 1})), make(q, {2, 1}));
  auto fs = factor(p);
  REQUIRE(fs.size() == 2);
  int found_square = 0;
  for (const auto& [f, m] : fs)
    if (m == 2) ++found_square;
  CHECK(found_square == 1);
}

TEST_CASE("characteristic-p squarefree part with vanishing derivative") {
  Field f2(2);
  // x^4 + x^2 + 1 = (x^2 + x + 1)^2 over GF(2)
  auto fs = factor(make(f2, {1, 0, 1, 0, 1}));
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].first == make(f2, {1, 1, 1}));
  CHECK(fs[0].second == 2);
}

TEST_CASE("larger rational factorization with rational coefficients") {
  Field q(0);
  // (2x^2 + 1)(x^3 - x + 3), made monic through the field
  Poly p = poly_mul(make(q, {1, 0, 2}), make(q, {3, -1, 0, 1}));
  auto fs = factor(p);
  REQUIRE(fs.size() == 2);
  CHECK(product_of(fs, q) == poly_monic(p));
}

TEST_CASE("matrix evaluation of polynomials") {
  Field q(0);
  Matrix m(q, 2, 2);
  m.at(0, 1) = 1;  // nilpotent
  Poly x2 = make(q, {0, 0, 1});
  CHECK(poly_at_matrix(x2, m).is_zero());
  Poly shifted = make(q, {1, 1});  // x + 1
  CHECK(poly_at_matrix(shifted, m) == m.add(Matrix::identity(q, 2)));
}
