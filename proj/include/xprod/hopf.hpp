#pragma once

#include "xprod/algebra.hpp"

namespace xprod {

// Δ(e_i) = Σ c[i][j][k] e_j ⊗ e_k, stored sparse
struct ComulEntry {
  int i, j, k;
  Scalar c;
};

struct HopfAlgebra {
  AlgebraPtr alg;
  std::vector<ComulEntry> comul;
  Matrix counit;    // 1×dim
  Matrix antipode;  // dim×dim, S(e_j) = column j

  int dim() const { return alg->dim; }
  const Field& field() const { return alg->field; }

  // Δ as a linear map k^dim → k^{dim²}, row (j,k) = j·dim + k
  Matrix comul_matrix() const;
  // sparse expansion of Δ(x) for a coefficient vector x: triples (j, k, c)
  std::vector<ComulEntry> comul_of(const Matrix& x) const;
  // (Δ⊗id)Δ(x) as triples (a, b, c, coeff)
  struct ComulSquaredTerm {
    int a, b, c;
    Scalar coeff;
  };
  std::vector<ComulSquaredTerm> comul_squared_of(const Matrix& x) const;

  Scalar counit_of(const Matrix& x) const;
  bool is_cocommutative() const;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

// Exhaustive check of coassociativity, the counit laws, the bialgebra axioms,
// the antipode identity and antipode invertibility on basis elements.
ValidationResult validate_hopf(const HopfAlgebra& h);

enum class IntegralSide { left, right };

struct IntegralSpace {
  IntegralSide side;
  Matrix basis;                     // dim×s columns spanning the integral space
  std::optional<Matrix> normalized; // t with ε(t) = 1 when ε is nonzero on the line
};

// Solves the linear system h·t = ε(h)t (left) or t·h = ε(h)t (right).
// MalformedHopf if the space is not one-dimensional.
IntegralSpace integrals(const HopfAlgebra& h, IntegralSide side);

struct SemisimpleResult {
  bool semisimple = false;
  std::optional<Matrix> normalized_integral;  // the witness
};

// ε nonzero on the right integral line (Larson–Sweedler criterion)
SemisimpleResult is_semisimple(const HopfAlgebra& h);

HopfPtr dual_hopf(const HopfAlgebra& h);

bool is_cosemisimple(const HopfAlgebra& h);

// Group-like Hopf structure on a group algebra: Δg = g⊗g, ε = 1, S(g) = g⁻¹.
HopfPtr group_hopf(const CayleyTable& g, Field field);
HopfPtr trivial_hopf(Field field);  // H = k
// basis 1, g, x, gx with g² = 1, x² = 0, xg = −gx, Δg = g⊗g, Δx = x⊗1 + g⊗x
HopfPtr sweedler_h4(Field field);

}  // namespace xprod
