#include "xprod/decomposition.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "xprod/polynomial.hpp"

namespace xprod {

namespace {

Scalar trace_of_product(const Field& f, const Matrix& a, const Matrix& b) {
  Scalar acc = f.zero();
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) acc = f.add(acc, f.mul(a.at(r, c), b.at(c, r)));
  return acc;
}

// subspace products: span{x·y : x ∈ U, y ∈ W}
Matrix subspace_product(const Algebra& a, const Matrix& u, const Matrix& w) {
  Matrix cols(a.field, a.dim, 0);
  for (int i = 0; i < u.cols(); ++i) {
    Matrix op = a.left_operator(u.col(i));
    cols = cols.hstack(op * w);
  }
  return column_space_basis(cols);
}

Poly min_poly(const Matrix& f) {
  const Field& fd = f.field();
  const int n = f.rows();
  Matrix powers = Matrix::identity(fd, n).vec();  // columns: vec(f^0), vec(f^1), ...
  Matrix cur = Matrix::identity(fd, n);
  for (int deg = 1; deg <= n; ++deg) {
    cur = cur * f;
    Matrix target = cur.vec();
    auto c = solve(powers, target);
    if (c) {
      Poly mu(fd);
      mu.c.assign(deg + 1, fd.zero());
      for (int i = 0; i < deg; ++i) mu.c[i] = fd.neg(c->at(i, 0));
      mu.c[deg] = fd.one();
      return mu;
    }
    powers = powers.hstack(target);
  }
  fail(errc::internal_inconsistency, "minimal polynomial not found");
}

bool is_scalar_matrix(const Matrix& f) {
  for (int r = 0; r < f.rows(); ++r)
    for (int c = 0; c < f.cols(); ++c)
      if (r != c && sgn(f.at(r, c)) != 0) return false;
  for (int r = 1; r < f.rows(); ++r)
    if (!(f.at(r, r) == f.at(0, 0))) return false;
  return true;
}

// deterministic candidate stream over a hom-space basis
std::vector<Matrix> split_candidates(const std::vector<Matrix>& basis) {
  std::vector<Matrix> out = basis;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      out.push_back(basis[i].add(basis[j]));
      out.push_back(basis[i].sub(basis[j]));
    }
  Rng rng(0xdec0);
  for (int t = 0; t < 200; ++t) {
    Matrix cand = basis[0].scaled(Scalar(0));
    for (const auto& b : basis) {
      long c = rng.next_in(-2, 2);
      if (c != 0) cand = cand.add(b.scaled(Scalar(c)));
    }
    out.push_back(cand);
  }
  return out;
}

// complement of a submodule inside a semisimple module, by deterministic
// vector search; the pragmatic fallback when an endomorphism only yields a
// primary (non-split) invariant subspace
Matrix complement_submodule(const AModule& m, const Matrix& w) {
  const Field& f = m.alg->field;
  Matrix c(f, m.dim, 0);
  auto direct_dim = [&](const Matrix& extra) {
    return rank(w.hstack(c).hstack(extra));
  };
  std::vector<Matrix> pool;
  for (int i = 0; i < m.dim; ++i) {
    Matrix v(f, m.dim, 1);
    v.at(i, 0) = 1;
    pool.push_back(v);
  }
  Rng rng(0xc0de);
  for (int t = 0; t < 400; ++t) {
    Matrix v(f, m.dim, 1);
    for (int i = 0; i < m.dim; ++i) v.at(i, 0) = f.from_long(rng.next_in(-3, 3));
    pool.push_back(v);
  }
  int covered = w.cols() + c.cols();
  for (const auto& v : pool) {
    if (covered == m.dim) break;
    Matrix sp = spin(m, v);
    if (direct_dim(sp) == covered + sp.cols()) {
      c = c.hstack(sp);
      covered += sp.cols();
    }
  }
  if (covered != m.dim)
    fail(errc::indeterminate_decomposition, "no module complement found by search");
  return column_space_basis(c);
}

// recursion on semisimple modules; appends bases (in the coordinates of m)
void split_rec(const AModule& m, const Matrix& ambient, std::vector<Matrix>& out, int depth) {
  if (m.dim == 0) return;
  if (depth > 64) fail(errc::indeterminate_decomposition, "splitting recursion too deep");
  auto homs = hom_space(m, m);
  if (homs.size() == 1) {
    out.push_back(ambient);
    return;
  }
  auto recurse_pair = [&](const Matrix& part_a, const Matrix& part_b) {
    split_rec(submodule(m, part_a), ambient * part_a, out, depth + 1);
    split_rec(submodule(m, part_b), ambient * part_b, out, depth + 1);
  };

  for (const auto& f : split_candidates(homs)) {
    if (f.is_zero() || is_scalar_matrix(f)) continue;
    Poly mu = min_poly(f);
    if (mu.degree() < 1) continue;
    auto factors = factor(mu);
    if (factors.size() >= 2) {
      // primary decomposition M = ⊕ ker μ_i^{a_i}(f)
      std::vector<Matrix> pieces;
      int total = 0;
      for (const auto& [irr, mult] : factors) {
        Poly power = Poly::constant(mu.field, mu.field.one());
        for (int i = 0; i < mult; ++i) power = poly_mul(power, irr);
        Matrix ker = kernel_basis(poly_at_matrix(power, f));
        total += ker.cols();
        pieces.push_back(std::move(ker));
      }
      if (total != m.dim) fail(errc::internal_inconsistency, "primary decomposition dims off");
      for (const auto& piece : pieces) split_rec(submodule(m, piece), ambient * piece, out, depth + 1);
      return;
    }
    if (factors[0].second >= 2) {
      // single repeated irreducible: ker μ₁(f) is proper and nonzero
      Matrix w = kernel_basis(poly_at_matrix(factors[0].first, f));
      if (w.cols() == 0 || w.cols() == m.dim)
        fail(errc::internal_inconsistency, "primary kernel degenerate");
      Matrix c = complement_submodule(m, w);
      recurse_pair(w, c);
      return;
    }
    // irreducible minimal polynomial; a full-degree one proves End is a field
    if (mu.degree() == static_cast<int>(homs.size())) {
      out.push_back(ambient);
      return;
    }
  }
  fail(errc::indeterminate_decomposition, "no splitting endomorphism found");
}

}  // namespace

std::vector<Matrix> split_semisimple(const AModule& m) {
  std::vector<Matrix> out;
  split_rec(m, Matrix::identity(m.alg->field, m.dim), out, 0);
  return out;
}

Matrix radical_basis(const Algebra& a) {
  const Field& f = a.field;
  Matrix gram(f, a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) gram.at(i, j) = trace_of_product(f, a.left_mult[i], a.left_mult[j]);
  Matrix j = kernel_basis(gram);
  if (j.cols() == 0) return j;

  // the trace-form kernel contains the radical in every characteristic;
  // verified nilpotency certifies equality
  Matrix power = j;
  for (int step = 0; step <= a.dim + 1; ++step) {
    if (power.cols() == 0) {
      // also confirm it is a two-sided ideal (cheap, catches bad inputs)
      for (int c = 0; c < j.cols(); ++c)
        for (int i = 0; i < a.dim; ++i) {
          if (!in_span(j, a.left_mult[i] * j.col(c)) || !in_span(j, a.right_mult[i] * j.col(c)))
            fail(errc::internal_inconsistency, "trace-form kernel is not an ideal");
        }
      return j;
    }
    power = subspace_product(a, j, power);
  }
  fail(errc::unsupported_characteristic,
       "trace-form kernel is not nilpotent; radical not certified in this characteristic");
}

namespace {

std::mutex g_cache_mutex;
std::map<const Algebra*, DecompositionPtr> g_cache;

DecompositionPtr compute_decomposition(const AlgebraPtr& a) {
  auto dec = std::make_shared<Decomposition>();
  dec->alg = a;
  dec->radical = radical_basis(*a);
  const Field& f = a->field;

  // Ā on the complement basis
  QuotientBasis qb = quotient_basis(dec->radical, a->dim);
  const int q = qb.dim();
  std::vector<std::string> names(q);
  for (int c = 0; c < q; ++c) {
    int idx = 0;
    for (int r = 0; r < a->dim; ++r)
      if (f.is_one(qb.complement.at(r, c))) idx = r;
    names[c] = a->basis_names[idx];
  }
  std::vector<MultEntry> mult;
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      Matrix prod = qb.projection * a->multiply(qb.complement.col(i), qb.complement.col(j));
      for (int k = 0; k < q; ++k)
        if (sgn(prod.at(k, 0)) != 0) mult.push_back({i, j, k, prod.at(k, 0)});
    }
  dec->quotient = std::make_shared<Algebra>(
      Algebra::assemble(f, q, std::move(names), qb.projection * a->unit, std::move(mult)));
  dec->onto_quotient = {a, dec->quotient, qb.projection};

  // simple modules: split the regular module of Ā, inflate along A → Ā
  AModule qreg = regular_module(dec->quotient);
  std::vector<Matrix> pieces = split_semisimple(qreg);
  std::vector<AModule> factors;
  for (const auto& basis : pieces)
    factors.push_back(restrict_module(submodule(qreg, basis), dec->onto_quotient));

  std::vector<AModule> reps;
  for (const auto& cand : factors) {
    bool fresh = true;
    for (const auto& seen : reps)
      if (cand.dim == seen.dim && !hom_space(cand, seen).empty()) {
        fresh = false;  // nonzero hom between simples is an isomorphism
        break;
      }
    if (fresh) reps.push_back(cand);
  }
  std::sort(reps.begin(), reps.end(), [](const AModule& x, const AModule& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return module_signature(x) < module_signature(y);
  });
  dec->simples = std::move(reps);

  // primitive idempotents of Ā from the direct-sum pieces, lifted along J
  Matrix stacked(f, q, 0);
  for (const auto& b : pieces) stacked = stacked.hstack(b);
  auto coords = solve(stacked, dec->quotient->unit);
  if (!coords) fail(errc::internal_inconsistency, "unit not in span of direct sum pieces");
  std::vector<Matrix> ebar;
  int offset = 0;
  for (const auto& b : pieces) {
    Matrix component(f, q, 1);
    for (int c = 0; c < b.cols(); ++c) component = component.add(b.col(c).scaled(coords->at(offset + c, 0)));
    offset += b.cols();
    ebar.push_back(component);
  }

  const Algebra& alg = *a;
  auto idempotize = [&alg](Matrix u) {
    for (int it = 0; it < 64; ++it) {
      Matrix u2 = alg.multiply(u, u);
      if (u2 == u) return u;
      // u ← 3u² − 2u³ squares the idempotency error, J-adically
      u = u2.scaled(Scalar(3)).sub(alg.multiply(u2, u).scaled(Scalar(2)));
    }
    fail(errc::internal_inconsistency, "idempotent lifting did not converge");
  };

  Matrix acc(f, a->dim, 1);  // running sum of lifted idempotents
  for (const auto& eb : ebar) {
    Matrix v = qb.complement * eb;  // section of ē into A
    Matrix left = a->unit.sub(acc);
    Matrix g = alg.multiply(alg.multiply(left, v), left);
    g = idempotize(g);
    dec->idempotents.push_back(g);
    acc = acc.add(g);
  }
  if (!(acc == a->unit)) fail(errc::internal_inconsistency, "lifted idempotents do not sum to 1");
  for (size_t i = 0; i < dec->idempotents.size(); ++i)
    for (size_t j = 0; j < dec->idempotents.size(); ++j) {
      Matrix prod = alg.multiply(dec->idempotents[i], dec->idempotents[j]);
      Matrix expect = i == j ? dec->idempotents[i] : Matrix(f, a->dim, 1);
      if (!(prod == expect)) fail(errc::internal_inconsistency, "lifted idempotents not orthogonal");
    }

  // indecomposable projectives P = A·e and their tops
  AModule reg = regular_module(a);
  std::vector<std::pair<AModule, int>> projs;
  for (const auto& e : dec->idempotents) {
    Matrix basis = column_space_basis(a->right_operator(e));
    AModule p = submodule(reg, basis);
    int top = -1;
    for (size_t s = 0; s < dec->simples.size(); ++s)
      if (!hom_space(p, dec->simples[s]).empty()) {
        top = static_cast<int>(s);
        break;
      }
    if (top < 0) fail(errc::internal_inconsistency, "projective with no simple quotient");
    projs.emplace_back(std::move(p), top);
  }
  // keep one copy per isomorphism class (same top ⇒ isomorphic projective cover)
  std::vector<bool> seen_top(dec->simples.size(), false);
  for (auto& [p, top] : projs) {
    if (seen_top[top]) continue;
    seen_top[top] = true;
    dec->projectives.push_back(std::move(p));
    dec->projective_top.push_back(top);
  }
  return dec;
}

}  // namespace

DecompositionPtr decomposition_of(const AlgebraPtr& a) {
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(a.get());
    if (it != g_cache.end()) return it->second;
  }
  DecompositionPtr dec = compute_decomposition(a);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.emplace(a.get(), dec);
  return dec;
}

StripResult strip_projective_summands(const AModule& m, const Decomposition& dec) {
  StripResult res{m, {}};
  bool progress = true;
  while (progress && res.reduced.dim > 0) {
    progress = false;
    for (size_t t = 0; t < dec.projectives.size() && !progress; ++t) {
      const AModule& p = dec.projectives[t];
      if (p.dim > res.reduced.dim) continue;
      auto into = hom_space(p, res.reduced);
      if (into.empty()) continue;
      auto back = hom_space(res.reduced, p);
      for (const auto& alpha : into) {
        for (const auto& beta : back) {
          Matrix u = beta * alpha;  // endomorphism of P; non-nilpotent ⇒ unit (End(P) local)
          Matrix upow = u;
          for (int k = 1; k < p.dim; ++k) upow = upow * u;
          if (upow.is_zero()) continue;
          auto uinv = inverse(u);
          if (!uinv) fail(errc::internal_inconsistency, "non-nilpotent endomorphism of P not invertible");
          Matrix idem = alpha * (*uinv) * beta;
          if (!(idem * idem == idem)) fail(errc::internal_inconsistency, "splitting idempotent failed");
          if (rank(idem) != p.dim) fail(errc::internal_inconsistency, "split-off summand has wrong rank");
          Matrix ker = kernel_basis(idem);
          res.reduced = submodule(res.reduced, ker);
          res.stripped.push_back(static_cast<int>(t));
          progress = true;
          break;
        }
        if (progress) break;
      }
    }
  }
  return res;
}

}  // namespace xprod
