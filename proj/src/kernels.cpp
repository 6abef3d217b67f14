#include "xprod/kernels.hpp"

#include <atomic>

#ifdef XPROD_HAVE_OPENMP
#include <omp.h>
#endif

namespace xprod::kernels {

namespace {
long g_threshold = 64L * 64L * 64L;

void mul_row_range(const Field& f, const Matrix& a, const Matrix& b, Matrix& out, int row_begin,
                   int row_end) {
  const int n = a.cols(), cols = b.cols();
  for (int i = row_begin; i < row_end; ++i)
    for (int j = 0; j < cols; ++j) {
      Scalar acc = f.zero();
      for (int k = 0; k < n; ++k) {
        if (sgn(a.at(i, k)) == 0 || sgn(b.at(k, j)) == 0) continue;
        acc = f.add(acc, f.mul(a.at(i, k), b.at(k, j)));
      }
      out.at(i, j) = acc;
    }
}
}  // namespace

bool parallel_available() {
#ifdef XPROD_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

long parallel_threshold() { return g_threshold; }
void set_parallel_threshold(long ops) { g_threshold = ops > 0 ? ops : 1; }

Matrix mat_mul_serial(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.field() != b.field())
    fail(errc::dimension_mismatch, "matrix product shape mismatch");
  Matrix out(a.field(), a.rows(), b.cols());
  mul_row_range(a.field(), a, b, out, 0, a.rows());
  return out;
}

Matrix mat_mul_parallel(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.field() != b.field())
    fail(errc::dimension_mismatch, "matrix product shape mismatch");
  Matrix out(a.field(), a.rows(), b.cols());
#ifdef XPROD_HAVE_OPENMP
  const Field f = a.field();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < a.rows(); ++i) mul_row_range(f, a, b, out, i, i + 1);
#else
  mul_row_range(a.field(), a, b, out, 0, a.rows());
#endif
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  long ops = static_cast<long>(a.rows()) * a.cols() * b.cols();
  if (parallel_available() && ops >= g_threshold) return mat_mul_parallel(a, b);
  return mat_mul_serial(a, b);
}

void eliminate_rows_serial(const Field& f, std::vector<Scalar>& data, int rows, int cols,
                           int pivot_row, int pivot_col) {
  auto idx = [cols](int r, int c) { return static_cast<size_t>(r) * cols + c; };
  for (int r = 0; r < rows; ++r) {
    if (r == pivot_row) continue;
    const Scalar factor = data[idx(r, pivot_col)];
    if (sgn(factor) == 0) continue;
    for (int c = pivot_col; c < cols; ++c)
      data[idx(r, c)] = f.sub(data[idx(r, c)], f.mul(factor, data[idx(pivot_row, c)]));
  }
}

void eliminate_rows_parallel(const Field& f, std::vector<Scalar>& data, int rows, int cols,
                             int pivot_row, int pivot_col) {
#ifdef XPROD_HAVE_OPENMP
  auto idx = [cols](int r, int c) { return static_cast<size_t>(r) * cols + c; };
#pragma omp parallel for schedule(static)
  for (int r = 0; r < rows; ++r) {
    if (r == pivot_row) continue;
    const Scalar factor = data[idx(r, pivot_col)];
    if (sgn(factor) == 0) continue;
    for (int c = pivot_col; c < cols; ++c)
      data[idx(r, c)] = f.sub(data[idx(r, c)], f.mul(factor, data[idx(pivot_row, c)]));
  }
#else
  eliminate_rows_serial(f, data, rows, cols, pivot_row, pivot_col);
#endif
}

void eliminate_rows(const Field& f, std::vector<Scalar>& data, int rows, int cols, int pivot_row,
                    int pivot_col) {
  long ops = static_cast<long>(rows) * (cols - pivot_col);
  if (parallel_available() && ops >= g_threshold / 8) {
    eliminate_rows_parallel(f, data, rows, cols, pivot_row, pivot_col);
    return;
  }
  eliminate_rows_serial(f, data, rows, cols, pivot_row, pivot_col);
}

std::optional<long> find_first_violation_serial(long count, const std::function<bool(long)>& check) {
  for (long i = 0; i < count; ++i)
    if (!check(i)) return i;
  return std::nullopt;
}

std::optional<long> find_first_violation(long count, const std::function<bool(long)>& check) {
#ifdef XPROD_HAVE_OPENMP
  if (count >= 64) {
    std::atomic<long> first(count);
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < count; ++i) {
      if (i >= first.load(std::memory_order_relaxed)) continue;
      if (!check(i)) {
        long cur = first.load(std::memory_order_relaxed);
        while (i < cur && !first.compare_exchange_weak(cur, i)) {
        }
      }
    }
    if (first.load() < count) return first.load();
    return std::nullopt;
  }
#endif
  return find_first_violation_serial(count, check);
}

}  // namespace xprod::kernels
