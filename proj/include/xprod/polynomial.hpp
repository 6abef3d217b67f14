#pragma once

#include <utility>
#include <vector>

#include "xprod/field.hpp"

namespace xprod {

// Dense univariate polynomial, coefficients low degree first, trimmed.
struct Poly {
  Field field;
  std::vector<Scalar> c;

  explicit Poly(Field f) : field(f) {}
  Poly(Field f, std::vector<Scalar> coeffs) : field(f), c(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Scalar& lc() const { return c.back(); }
  Scalar coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : Scalar(0); }

  void trim() {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  }

  bool operator==(const Poly& o) const { return field == o.field && c == o.c; }

  static Poly zero(Field f) { return Poly(f); }
  static Poly constant(Field f, const Scalar& a);
  static Poly x(Field f);

  std::string to_string() const;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Scalar& s);
// quotient/remainder; divisor must be nonzero
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_monic(const Poly& a);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic
Poly poly_derivative(const Poly& a);
Scalar poly_eval(const Poly& a, const Scalar& x);

// Apply p to a square matrix (p(M)).
class Matrix;
Matrix poly_at_matrix(const Poly& p, const Matrix& m);

// Full factorization into monic irreducibles with multiplicities, sorted by
// (degree, coefficient string) so the result is reproducible. Berlekamp over
// GF(p), squarefree + Hensel-lift + recombination over the rationals.
std::vector<std::pair<Poly, int>> factor(const Poly& a);

bool is_irreducible(const Poly& a);

}  // namespace xprod
