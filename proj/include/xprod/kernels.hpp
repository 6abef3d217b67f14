#pragma once

#include <functional>
#include <optional>

#include "xprod/matrix.hpp"

namespace xprod::kernels {

// The hot loops (matrix products, row elimination, exhaustive axiom sweeps)
// run under OpenMP when the work is large enough. Every parallel kernel has a
// serial reference next to it; results are bit-identical because each output
// slot is computed by exactly the same arithmetic in the same order regardless
// of scheduling. Tests compare the two, bench/ times them.

Matrix mat_mul_serial(const Matrix& a, const Matrix& b);
Matrix mat_mul_parallel(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);  // dispatches on size

// rows[r] -= factor[r] * pivot_row for all r != pivot, in place on a
// row-major scratch buffer. Exposed for linalg's RREF.
void eliminate_rows_serial(const Field& f, std::vector<Scalar>& data, int rows, int cols,
                           int pivot_row, int pivot_col);
void eliminate_rows_parallel(const Field& f, std::vector<Scalar>& data, int rows, int cols,
                             int pivot_row, int pivot_col);
void eliminate_rows(const Field& f, std::vector<Scalar>& data, int rows, int cols,
                    int pivot_row, int pivot_col);

// Runs `check` over [0, count) and returns the smallest failing index, if any.
// check must be pure; the parallel sweep reduces with min so the answer is the
// same as the serial left-to-right scan.
std::optional<long> find_first_violation_serial(long count, const std::function<bool(long)>& check);
std::optional<long> find_first_violation(long count, const std::function<bool(long)>& check);

bool parallel_available();
// below this many scalar multiplications a kernel stays serial
long parallel_threshold();
void set_parallel_threshold(long ops);

}  // namespace xprod::kernels
