#include "xprod/linalg.hpp"

#include "xprod/kernels.hpp"

namespace xprod {

RrefResult rref(const Matrix& a) {
  const Field f = a.field();
  const int rows = a.rows(), cols = a.cols();
  std::vector<Scalar> data(static_cast<size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) data[static_cast<size_t>(i) * cols + j] = a.at(i, j);
  auto idx = [cols](int r, int c) { return static_cast<size_t>(r) * cols + c; };

  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int pivot = -1;
    for (int r = lead; r < rows; ++r)
      if (sgn(data[idx(r, col)]) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int c = col; c < cols; ++c) std::swap(data[idx(pivot, c)], data[idx(lead, c)]);
    const Scalar inv = f.inv(data[idx(lead, col)]);
    for (int c = col; c < cols; ++c) data[idx(lead, c)] = f.mul(data[idx(lead, c)], inv);
    kernels::eliminate_rows(f, data, rows, cols, lead, col);
    pivots.push_back(col);
    ++lead;
  }

  Matrix r(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(i, j) = data[idx(i, j)];
  return {std::move(r), std::move(pivots)};
}

int rank(const Matrix& a) { return rref(a).rank(); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.field() != b.field())
    fail(errc::dimension_mismatch, "solve: A.rows != B.rows");
  RrefResult r = rref(a.hstack(b));
  const int n = a.cols();
  // any pivot landing in the B block marks an inconsistent row
  for (int p : r.pivots)
    if (p >= n) return std::nullopt;
  Matrix x(a.field(), n, b.cols());
  for (size_t i = 0; i < r.pivots.size(); ++i)
    for (int j = 0; j < b.cols(); ++j) x.at(r.pivots[i], j) = r.reduced.at(static_cast<int>(i), n + j);
  return x;
}

Matrix kernel_basis(const Matrix& a) {
  RrefResult r = rref(a);
  const Field f = a.field();
  const int n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  Matrix k(f, n, static_cast<int>(free_cols.size()));
  for (size_t fc = 0; fc < free_cols.size(); ++fc) {
    int j = free_cols[fc];
    k.at(j, static_cast<int>(fc)) = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i)
      k.at(r.pivots[i], static_cast<int>(fc)) = f.neg(r.reduced.at(static_cast<int>(i), j));
  }
  return k;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) fail(errc::dimension_mismatch, "inverse of non-square matrix");
  auto x = solve(a, Matrix::identity(a.field(), a.rows()));
  if (!x) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return x;
}

Matrix column_space_basis(const Matrix& vectors) {
  RrefResult r = rref(vectors.transpose());
  Matrix b(vectors.field(), vectors.rows(), r.rank());
  for (int i = 0; i < r.rank(); ++i)
    for (int j = 0; j < vectors.rows(); ++j) b.at(j, i) = r.reduced.at(i, j);
  return b;
}

bool in_span(const Matrix& basis, const Matrix& v) {
  if (basis.cols() == 0) return v.is_zero();
  return solve(basis, v).has_value();
}

QuotientBasis quotient_basis(const Matrix& sub, int ambient_dim) {
  if (sub.rows() != ambient_dim) fail(errc::dimension_mismatch, "quotient_basis: wrong ambient dim");
  const Field f = sub.field();
  RrefResult r = rref(sub.transpose());  // rows of r.reduced span the subspace
  std::vector<bool> is_pivot(ambient_dim, false);
  for (int p : r.pivots) is_pivot[p] = true;

  std::vector<int> comp;
  for (int j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) comp.push_back(j);

  const int q = static_cast<int>(comp.size());
  Matrix complement(f, ambient_dim, q);
  Matrix projection(f, q, ambient_dim);
  for (int c = 0; c < q; ++c) {
    complement.at(comp[c], c) = 1;
    projection.at(c, comp[c]) = 1;
    // subtract the span components: v − Σ v[p_i]·row_i lands on the non-pivot
    // coordinates, so read those off
    for (size_t i = 0; i < r.pivots.size(); ++i)
      projection.at(c, r.pivots[i]) = f.neg(r.reduced.at(static_cast<int>(i), comp[c]));
  }
  return {std::move(complement), std::move(projection)};
}

}  // namespace xprod
