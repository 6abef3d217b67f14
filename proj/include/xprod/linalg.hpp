#pragma once

#include <optional>
#include <vector>

#include "xprod/matrix.hpp"

namespace xprod {

// Reduced row echelon form with the first-nonzero pivot convention. Every
// derived basis in the system (kernels, quotients, hom spaces, resolutions)
// inherits its determinism from this one routine.
struct RrefResult {
  Matrix reduced;
  std::vector<int> pivots;  // pivot column per pivot row
  int rank() const { return static_cast<int>(pivots.size()); }
};

RrefResult rref(const Matrix& a);

int rank(const Matrix& a);

// One solution X of A·X = B when consistent (free variables set to zero),
// nullopt when inconsistent. Shape violations throw DimensionMismatch.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Columns form the RREF free-variable basis of the null space.
Matrix kernel_basis(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& a);

// Column span of `vectors` intersected/echelonized: returns a matrix whose
// columns are the RREF-canonical basis of the span.
Matrix column_space_basis(const Matrix& vectors);

// true iff v lies in the column span of basis
bool in_span(const Matrix& basis, const Matrix& v);

// Complement basis and projection for k^n / span(sub). The complement is made
// of standard basis vectors (non-pivot coordinates), the projection kills sub.
struct QuotientBasis {
  Matrix complement;  // n×q, q = n − rank(sub)
  Matrix projection;  // q×n, projection∘complement = identity
  int dim() const { return complement.cols(); }
};

QuotientBasis quotient_basis(const Matrix& sub, int ambient_dim);

}  // namespace xprod
