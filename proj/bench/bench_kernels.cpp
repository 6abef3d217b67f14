// Times the OpenMP kernels against their serial references on synthetic
// exact-arithmetic workloads: dense products over Q and GF(p), RREF-style row
// elimination, and the associativity sweep over a group algebra.

#include <chrono>
#include <iostream>

#include "xprod/algebra.hpp"
#include "xprod/kernels.hpp"

using namespace xprod;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Matrix random_matrix(Field f, int n, uint64_t seed, long lo, long hi) {
  Rng rng(seed);
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = f.from_long(rng.next_in(lo, hi));
  return m;
}

void bench_matmul(const char* label, Field f, int n, long lo, long hi) {
  Matrix a = random_matrix(f, n, 0xabcd, lo, hi);
  Matrix b = random_matrix(f, n, 0xbeef, lo, hi);
  auto t0 = Clock::now();
  Matrix serial = kernels::mat_mul_serial(a, b);
  double ts = seconds_since(t0);
  t0 = Clock::now();
  Matrix parallel = kernels::mat_mul_parallel(a, b);
  double tp = seconds_since(t0);
  std::cout << label << " " << n << "x" << n << ": serial " << ts << "s, parallel " << tp
            << "s, speedup " << (tp > 0 ? ts / tp : 0) << ", equal " << (serial == parallel) << "\n";
}

void bench_validate(int group_order) {
  Field f(9973);
  auto alg = group_algebra(CayleyTable::cyclic(group_order), f);
  auto t0 = Clock::now();
  auto serial = validate_algebra_serial(*alg);
  double ts = seconds_since(t0);
  t0 = Clock::now();
  auto parallel = validate_algebra(*alg);
  double tp = seconds_since(t0);
  std::cout << "associativity sweep kC" << group_order << ": serial " << ts << "s, parallel " << tp
            << "s, speedup " << (tp > 0 ? ts / tp : 0) << ", agree " << (serial.ok == parallel.ok)
            << "\n";
}

}  // namespace

int main() {
  std::cout << "parallel kernels available: " << kernels::parallel_available() << "\n";
  bench_matmul("Q  ", Field(0), 96, -9, 9);
  bench_matmul("GFp", Field(9973), 256, 0, 9972);
  bench_validate(24);
  bench_validate(40);
  return 0;
}
