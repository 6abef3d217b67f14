#pragma once

#include <memory>
#include <string>
#include <vector>

#include "xprod/linalg.hpp"

namespace xprod {

// e_i · e_j = Σ_k c[i][j][k] e_k, stored sparse
struct MultEntry {
  int i, j, k;
  Scalar c;
};

// Finite-dimensional associative unital algebra presented by structure
// constants over a fixed basis. Immutable after construction; the left/right
// multiplication operators are precomputed because everything downstream is
// phrased in terms of them.
struct Algebra {
  Field field;
  int dim = 0;
  std::vector<std::string> basis_names;
  Matrix unit;                    // dim×1 coefficients of 1
  std::vector<MultEntry> mult;    // sparse structure constants
  std::vector<Matrix> left_mult;  // L_i: L_i·y = e_i·y
  std::vector<Matrix> right_mult; // R_j: R_j·x = x·e_j

  static Algebra assemble(Field field, int dim, std::vector<std::string> names, Matrix unit,
                          std::vector<MultEntry> mult);

  Matrix basis_vector(int i) const;
  // product of two coefficient vectors
  Matrix multiply(const Matrix& x, const Matrix& y) const;
  // operator "multiply by x on the left/right"
  Matrix left_operator(const Matrix& x) const;
  Matrix right_operator(const Matrix& x) const;
  bool is_commutative() const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Certificate iff associativity and the unit axioms hold on all basis
// triples/pairs; the report names the first failing triple.
ValidationResult validate_algebra(const Algebra& a);
// serial reference for the parallel sweep inside validate_algebra
ValidationResult validate_algebra_serial(const Algebra& a);

struct CayleyTable {
  int n = 0;
  std::vector<std::vector<int>> t;  // t[i][j] = index of g_i g_j

  static CayleyTable cyclic(int n);
  static CayleyTable symmetric3();
};

// identity element index, or NotAGroup
int group_identity(const CayleyTable& g);
ValidationResult validate_group(const CayleyTable& g);

AlgebraPtr group_algebra(const CayleyTable& g, Field field);
// p given by coefficients of x^0..x^{d-1}; the leading coefficient 1 is implied
AlgebraPtr quotient_poly_algebra(const std::vector<Scalar>& monic_tail, Field field);
AlgebraPtr matrix_algebra(const AlgebraPtr& a, int n);
AlgebraPtr opposite(const AlgebraPtr& a);
AlgebraPtr upper_triangular(int n, Field field);
AlgebraPtr direct_sum(const AlgebraPtr& a, const AlgebraPtr& b);
AlgebraPtr base_field_algebra(Field field);

struct AlgebraMap {
  AlgebraPtr source, target;
  Matrix matrix;  // dim(target) × dim(source)
};

AlgebraMap identity_map(const AlgebraPtr& a);
AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f);  // g ∘ f
// multiplicative on all basis pairs and unit-preserving
ValidationResult validate_algebra_map(const AlgebraMap& m);

}  // namespace xprod
