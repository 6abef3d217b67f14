#include "xprod/algebra.hpp"

#include <array>
#include <map>
#include <mutex>
#include <sstream>

#include "xprod/kernels.hpp"

namespace xprod {

Algebra Algebra::assemble(Field field, int dim, std::vector<std::string> names, Matrix unit,
                          std::vector<MultEntry> mult) {
  Algebra a;
  a.field = field;
  a.dim = dim;
  a.basis_names = std::move(names);
  a.unit = std::move(unit);
  if (static_cast<int>(a.basis_names.size()) != dim || a.unit.rows() != dim || a.unit.cols() != 1)
    fail(errc::dimension_mismatch, "algebra: basis names or unit have wrong size");
  for (auto& e : mult) {
    if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 || e.k >= dim)
      fail(errc::invalid_argument, "algebra: structure constant index out of range");
    e.c = field.reduce(e.c);
  }
  a.mult = std::move(mult);
  a.left_mult.assign(dim, Matrix(field, dim, dim));
  a.right_mult.assign(dim, Matrix(field, dim, dim));
  for (const auto& e : a.mult) {
    if (sgn(e.c) == 0) continue;
    a.left_mult[e.i].at(e.k, e.j) = field.add(a.left_mult[e.i].at(e.k, e.j), e.c);
    a.right_mult[e.j].at(e.k, e.i) = field.add(a.right_mult[e.j].at(e.k, e.i), e.c);
  }
  return a;
}

Matrix Algebra::basis_vector(int i) const {
  Matrix v(field, dim, 1);
  v.at(i, 0) = 1;
  return v;
}

Matrix Algebra::multiply(const Matrix& x, const Matrix& y) const {
  return left_operator(x) * y;
}

Matrix Algebra::left_operator(const Matrix& x) const {
  if (x.rows() != dim || x.cols() != 1) fail(errc::dimension_mismatch, "left_operator: bad vector");
  Matrix op(field, dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (sgn(x.at(i, 0)) == 0) continue;
    op = op.add(left_mult[i].scaled(x.at(i, 0)));
  }
  return op;
}

Matrix Algebra::right_operator(const Matrix& x) const {
  if (x.rows() != dim || x.cols() != 1) fail(errc::dimension_mismatch, "right_operator: bad vector");
  Matrix op(field, dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (sgn(x.at(i, 0)) == 0) continue;
    op = op.add(right_mult[i].scaled(x.at(i, 0)));
  }
  return op;
}

bool Algebra::is_commutative() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (!(multiply(basis_vector(i), basis_vector(j)) == multiply(basis_vector(j), basis_vector(i))))
        return false;
  return true;
}

namespace {
std::string triple_name(const Algebra& a, int i, int j, int k) {
  std::ostringstream os;
  os << "(" << a.basis_names[i] << ", " << a.basis_names[j] << ", " << a.basis_names[k] << ")";
  return os.str();
}

// associativity on the pair (i, j) against every k at once:
// left-multiplication by e_i e_j must equal L_i ∘ L_j
bool assoc_pair_ok(const Algebra& a, int i, int j) {
  Matrix prod = a.multiply(a.basis_vector(i), a.basis_vector(j));
  return a.left_operator(prod) == a.left_mult[i] * a.left_mult[j];
}

ValidationResult validate_algebra_impl(const Algebra& a, bool parallel) {
  // unit axiom first: 1·e_i = e_i·1 = e_i
  Matrix unit_op = a.left_operator(a.unit);
  if (!unit_op.is_identity())
    return ValidationResult::violated("unit", "1·e_i != e_i for some basis element");
  if (!a.right_operator(a.unit).is_identity())
    return ValidationResult::violated("unit", "e_i·1 != e_i for some basis element");

  const long pairs = static_cast<long>(a.dim) * a.dim;
  auto check = [&a](long idx) { return assoc_pair_ok(a, static_cast<int>(idx / a.dim), static_cast<int>(idx % a.dim)); };
  auto bad = parallel ? kernels::find_first_violation(pairs, check)
                      : kernels::find_first_violation_serial(pairs, check);
  if (bad) {
    int i = static_cast<int>(*bad / a.dim), j = static_cast<int>(*bad % a.dim);
    // locate the concrete k for the report
    for (int k = 0; k < a.dim; ++k) {
      Matrix lhs = a.multiply(a.multiply(a.basis_vector(i), a.basis_vector(j)), a.basis_vector(k));
      Matrix rhs = a.multiply(a.basis_vector(i), a.multiply(a.basis_vector(j), a.basis_vector(k)));
      if (!(lhs == rhs))
        return ValidationResult::violated("associativity", triple_name(a, i, j, k));
    }
    return ValidationResult::violated("associativity", triple_name(a, i, j, 0));
  }
  return ValidationResult::certificate();
}
}  // namespace

ValidationResult validate_algebra(const Algebra& a) { return validate_algebra_impl(a, true); }
ValidationResult validate_algebra_serial(const Algebra& a) { return validate_algebra_impl(a, false); }

// ------------------------------------------------------------------- groups

CayleyTable CayleyTable::cyclic(int n) {
  CayleyTable g;
  g.n = n;
  g.t.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.t[i][j] = (i + j) % n;
  return g;
}

CayleyTable CayleyTable::symmetric3() {
  // permutations of {0,1,2} in lexicographic one-line order
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  CayleyTable g;
  g.n = 6;
  g.t.assign(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      for (int k = 0; k < 6; ++k)
        if (perms[k] == comp) g.t[i][j] = k;
    }
  return g;
}

ValidationResult validate_group(const CayleyTable& g) {
  if (g.n <= 0 || static_cast<int>(g.t.size()) != g.n)
    return ValidationResult::violated("closure", "table has wrong size");
  for (const auto& row : g.t) {
    if (static_cast<int>(row.size()) != g.n) return ValidationResult::violated("closure", "ragged table");
    for (int v : row)
      if (v < 0 || v >= g.n) return ValidationResult::violated("closure", "entry out of range");
  }
  int e = -1;
  for (int cand = 0; cand < g.n; ++cand) {
    bool ok = true;
    for (int i = 0; i < g.n; ++i) ok = ok && g.t[cand][i] == i && g.t[i][cand] == i;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) return ValidationResult::violated("identity", "no two-sided identity");
  for (int i = 0; i < g.n; ++i) {
    bool has_inverse = false;
    for (int j = 0; j < g.n; ++j) has_inverse = has_inverse || (g.t[i][j] == e && g.t[j][i] == e);
    if (!has_inverse) return ValidationResult::violated("inverses", "element " + std::to_string(i));
  }
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      for (int k = 0; k < g.n; ++k)
        if (g.t[g.t[i][j]][k] != g.t[i][g.t[j][k]])
          return ValidationResult::violated("associativity",
                                            "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
  return ValidationResult::certificate();
}

int group_identity(const CayleyTable& g) {
  for (int cand = 0; cand < g.n; ++cand) {
    bool ok = true;
    for (int i = 0; i < g.n; ++i) ok = ok && g.t[cand][i] == i && g.t[i][cand] == i;
    if (ok) return cand;
  }
  fail(errc::not_a_group, "no identity element");
}

AlgebraPtr group_algebra(const CayleyTable& g, Field field) {
  auto v = validate_group(g);
  if (!v) fail(errc::not_a_group, v.violation + " (" + v.detail + ")");
  int e = group_identity(g);
  std::vector<std::string> names(g.n);
  for (int i = 0; i < g.n; ++i) names[i] = i == e ? "e" : "g" + std::to_string(i);
  Matrix unit(field, g.n, 1);
  unit.at(e, 0) = 1;
  std::vector<MultEntry> mult;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) mult.push_back({i, j, g.t[i][j], Scalar(1)});
  return std::make_shared<Algebra>(Algebra::assemble(field, g.n, std::move(names), std::move(unit), std::move(mult)));
}

AlgebraPtr quotient_poly_algebra(const std::vector<Scalar>& monic_tail, Field field) {
  const int d = static_cast<int>(monic_tail.size());
  if (d < 1) fail(errc::invalid_argument, "quotient_poly_algebra: degree must be >= 1");
  // reductions of x^m for m = 0 .. 2d-2
  std::vector<std::vector<Scalar>> red(2 * d - 1, std::vector<Scalar>(d, field.zero()));
  for (int m = 0; m < d; ++m) red[m][m] = field.one();
  for (int m = d; m <= 2 * d - 2; ++m) {
    // x^m = x * x^{m-1}; shift then reduce the overflow through x^d = -tail
    std::vector<Scalar> shifted(d + 1, field.zero());
    for (int i = 0; i < d; ++i) shifted[i + 1] = red[m - 1][i];
    Scalar top = shifted[d];
    for (int i = 0; i < d; ++i) red[m][i] = field.sub(shifted[i], field.mul(top, field.reduce(monic_tail[i])));
  }
  std::vector<std::string> names(d);
  for (int i = 0; i < d; ++i) names[i] = i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i));
  Matrix unit(field, d, 1);
  unit.at(0, 0) = 1;
  std::vector<MultEntry> mult;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (sgn(red[i + j][k]) != 0) mult.push_back({i, j, k, red[i + j][k]});
  return std::make_shared<Algebra>(Algebra::assemble(field, d, std::move(names), std::move(unit), std::move(mult)));
}

AlgebraPtr matrix_algebra(const AlgebraPtr& a, int n) {
  if (n < 1) fail(errc::invalid_argument, "matrix_algebra: n must be >= 1");
  if (n == 1) return a;
  const int d = a->dim, dim = n * n * d;
  auto index = [n, d](int r, int c, int e) { return (r * n + c) * d + e; };
  std::vector<std::string> names(dim);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int e = 0; e < d; ++e)
        names[index(r, c, e)] = "E" + std::to_string(r + 1) + std::to_string(c + 1) + "(" + a->basis_names[e] + ")";
  Matrix unit(a->field, dim, 1);
  for (int r = 0; r < n; ++r)
    for (int e = 0; e < d; ++e) unit.at(index(r, r, e), 0) = a->unit.at(e, 0);
  std::vector<MultEntry> mult;
  for (const auto& me : a->mult)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        for (int c2 = 0; c2 < n; ++c2)
          mult.push_back({index(r, c, me.i), index(c, c2, me.j), index(r, c2, me.k), me.c});
  return std::make_shared<Algebra>(Algebra::assemble(a->field, dim, std::move(names), std::move(unit), std::move(mult)));
}

AlgebraPtr opposite(const AlgebraPtr& a) {
  // memoized per instance so downstream per-algebra caches stay warm; the
  // cache value retains the source pointer, otherwise a freed algebra's
  // address could be reused and hit a stale entry
  static std::mutex mu;
  static std::map<const Algebra*, std::pair<AlgebraPtr, AlgebraPtr>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(a.get());
    if (it != cache.end()) return it->second.second;
  }
  std::vector<MultEntry> mult;
  mult.reserve(a->mult.size());
  for (const auto& e : a->mult) mult.push_back({e.j, e.i, e.k, e.c});
  auto op = std::make_shared<Algebra>(
      Algebra::assemble(a->field, a->dim, a->basis_names, a->unit, std::move(mult)));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(a.get(), std::make_pair(a, op));
  return it->second.second;
}

AlgebraPtr upper_triangular(int n, Field field) {
  if (n < 1) fail(errc::invalid_argument, "upper_triangular: n must be >= 1");
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) cells.emplace_back(i, j);
  const int dim = static_cast<int>(cells.size());
  auto find_cell = [&cells](int i, int j) {
    for (size_t k = 0; k < cells.size(); ++k)
      if (cells[k] == std::make_pair(i, j)) return static_cast<int>(k);
    return -1;
  };
  std::vector<std::string> names(dim);
  for (int k = 0; k < dim; ++k)
    names[k] = "E" + std::to_string(cells[k].first + 1) + std::to_string(cells[k].second + 1);
  Matrix unit(field, dim, 1);
  for (int i = 0; i < n; ++i) unit.at(find_cell(i, i), 0) = 1;
  std::vector<MultEntry> mult;
  for (int p = 0; p < dim; ++p)
    for (int q = 0; q < dim; ++q) {
      auto [i, j] = cells[p];
      auto [k, l] = cells[q];
      if (j == k) mult.push_back({p, q, find_cell(i, l), Scalar(1)});
    }
  return std::make_shared<Algebra>(Algebra::assemble(field, dim, std::move(names), std::move(unit), std::move(mult)));
}

AlgebraPtr direct_sum(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->field != b->field) fail(errc::dimension_mismatch, "direct_sum: fields differ");
  const int dim = a->dim + b->dim;
  std::vector<std::string> names;
  for (const auto& s : a->basis_names) names.push_back(s + "L");
  for (const auto& s : b->basis_names) names.push_back(s + "R");
  Matrix unit(a->field, dim, 1);
  for (int i = 0; i < a->dim; ++i) unit.at(i, 0) = a->unit.at(i, 0);
  for (int i = 0; i < b->dim; ++i) unit.at(a->dim + i, 0) = b->unit.at(i, 0);
  std::vector<MultEntry> mult;
  for (const auto& e : a->mult) mult.push_back(e);
  for (const auto& e : b->mult) mult.push_back({a->dim + e.i, a->dim + e.j, a->dim + e.k, e.c});
  return std::make_shared<Algebra>(Algebra::assemble(a->field, dim, std::move(names), std::move(unit), std::move(mult)));
}

AlgebraPtr base_field_algebra(Field field) {
  Matrix unit(field, 1, 1);
  unit.at(0, 0) = 1;
  return std::make_shared<Algebra>(
      Algebra::assemble(field, 1, {"1"}, std::move(unit), {{0, 0, 0, Scalar(1)}}));
}

AlgebraMap identity_map(const AlgebraPtr& a) {
  return {a, a, Matrix::identity(a->field, a->dim)};
}

AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f) {
  if (f.target.get() != g.source.get()) fail(errc::dimension_mismatch, "compose: maps do not chain");
  return {f.source, g.target, g.matrix * f.matrix};
}

ValidationResult validate_algebra_map(const AlgebraMap& m) {
  const Algebra& s = *m.source;
  const Algebra& t = *m.target;
  if (m.matrix.rows() != t.dim || m.matrix.cols() != s.dim)
    return ValidationResult::violated("shape", "matrix is not dim(target) x dim(source)");
  if (!(m.matrix * s.unit == t.unit)) return ValidationResult::violated("unit", "unit not mapped to unit");
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j) {
      Matrix lhs = m.matrix * s.multiply(s.basis_vector(i), s.basis_vector(j));
      Matrix rhs = t.multiply(m.matrix * s.basis_vector(i), m.matrix * s.basis_vector(j));
      if (!(lhs == rhs))
        return ValidationResult::violated("multiplicativity",
                                          "(" + s.basis_names[i] + ", " + s.basis_names[j] + ")");
    }
  return ValidationResult::certificate();
}

}  // namespace xprod
