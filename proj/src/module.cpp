#include "xprod/module.hpp"

#include <sstream>

namespace xprod {

Matrix AModule::act(const Matrix& x) const {
  if (x.rows() != alg->dim || x.cols() != 1) fail(errc::dimension_mismatch, "act: bad algebra element");
  Matrix op(alg->field, dim, dim);
  for (int i = 0; i < alg->dim; ++i) {
    if (sgn(x.at(i, 0)) == 0) continue;
    op = op.add(action[i].scaled(x.at(i, 0)));
  }
  return op;
}

ValidationResult validate_module(const AModule& m) {
  const Algebra& a = *m.alg;
  if (static_cast<int>(m.action.size()) != a.dim)
    return ValidationResult::violated("shape", "one action matrix per basis element required");
  for (const auto& mat : m.action)
    if (mat.rows() != m.dim || mat.cols() != m.dim)
      return ValidationResult::violated("shape", "action matrix is not dim x dim");
  if (!m.act(a.unit).is_identity()) return ValidationResult::violated("unit", "ρ(1) != id");
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Matrix lhs = m.action[i] * m.action[j];
      Matrix rhs = m.act(a.multiply(a.basis_vector(i), a.basis_vector(j)));
      if (!(lhs == rhs))
        return ValidationResult::violated("structure constants",
                                          "ρ(e_i)ρ(e_j) != ρ(e_i e_j) at (" + a.basis_names[i] + ", " + a.basis_names[j] + ")");
    }
  return ValidationResult::certificate();
}

AModule regular_module(const AlgebraPtr& a) { return {a, a->dim, a->left_mult}; }

AModule zero_module(const AlgebraPtr& a) {
  return {a, 0, std::vector<Matrix>(a->dim, Matrix(a->field, 0, 0))};
}

AModule free_module(const AlgebraPtr& a, int rank) {
  const int d = a->dim;
  AModule f{a, d * rank, {}};
  f.action.reserve(d);
  for (int i = 0; i < d; ++i) {
    Matrix block(a->field, d * rank, d * rank);
    for (int s = 0; s < rank; ++s)
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) block.at(s * d + r, s * d + c) = a->left_mult[i].at(r, c);
    f.action.push_back(std::move(block));
  }
  return f;
}

AModule direct_sum_modules(const AModule& a, const AModule& b) {
  if (a.alg.get() != b.alg.get()) fail(errc::dimension_mismatch, "direct sum over different algebras");
  AModule s{a.alg, a.dim + b.dim, {}};
  for (int i = 0; i < a.alg->dim; ++i) {
    Matrix block(a.alg->field, s.dim, s.dim);
    for (int r = 0; r < a.dim; ++r)
      for (int c = 0; c < a.dim; ++c) block.at(r, c) = a.action[i].at(r, c);
    for (int r = 0; r < b.dim; ++r)
      for (int c = 0; c < b.dim; ++c) block.at(a.dim + r, a.dim + c) = b.action[i].at(r, c);
    s.action.push_back(std::move(block));
  }
  return s;
}

AModule restrict_module(const AModule& m, const AlgebraMap& phi) {
  if (m.alg.get() != phi.target.get()) fail(errc::dimension_mismatch, "restrict: module not over target");
  AModule r{phi.source, m.dim, {}};
  r.action.reserve(phi.source->dim);
  for (int i = 0; i < phi.source->dim; ++i) r.action.push_back(m.act(phi.matrix.col(i)));
  return r;
}

AModule dual_module(const AModule& m) {
  AModule d{opposite(m.alg), m.dim, {}};
  d.action.reserve(m.action.size());
  for (const auto& mat : m.action) d.action.push_back(mat.transpose());
  return d;
}

AModule submodule(const AModule& m, const Matrix& basis) {
  AModule s{m.alg, basis.cols(), {}};
  s.action.reserve(m.action.size());
  for (const auto& mat : m.action) {
    auto x = solve(basis, mat * basis);
    if (!x) fail(errc::internal_inconsistency, "submodule: subspace not invariant");
    s.action.push_back(std::move(*x));
  }
  return s;
}

QuotientModule quotient_module(const AModule& m, const Matrix& sub) {
  QuotientBasis qb = quotient_basis(sub, m.dim);
  AModule q{m.alg, qb.dim(), {}};
  q.action.reserve(m.action.size());
  for (const auto& mat : m.action) q.action.push_back(qb.projection * mat * qb.complement);
  return {std::move(q), qb.projection, qb.complement};
}

Matrix spin(const AModule& m, const Matrix& vectors) {
  Matrix w = column_space_basis(vectors);
  while (true) {
    Matrix bigger = w;
    for (const auto& mat : m.action) bigger = bigger.hstack(mat * w);
    Matrix next = column_space_basis(bigger);
    if (next.cols() == w.cols()) return next;
    w = next;
  }
}

bool is_module_map(const AModule& m, const AModule& n, const Matrix& f) {
  if (f.rows() != n.dim || f.cols() != m.dim) return false;
  for (size_t i = 0; i < m.action.size(); ++i)
    if (!(f * m.action[i] == n.action[i] * f)) return false;
  return true;
}

namespace {

// greedy max-gain generator selection; W starts at J·M when a radical is given
Matrix greedy_generators(const AModule& m, const Matrix* radical) {
  const Field& f = m.alg->field;
  Matrix w(f, m.dim, 0);
  if (radical && radical->cols() > 0) {
    Matrix jm(f, m.dim, 0);
    for (int j = 0; j < radical->cols(); ++j) jm = jm.hstack(m.act(radical->col(j)));
    w = column_space_basis(jm);
  }
  // candidate pool: basis vectors always; pairwise sums only at small
  // dimension, where a cross-summand generator actually shrinks the cover
  std::vector<Matrix> pool;
  for (int i = 0; i < m.dim; ++i) {
    Matrix v(f, m.dim, 1);
    v.at(i, 0) = 1;
    pool.push_back(v);
  }
  if (m.dim <= 12) {
    const int singles = m.dim;
    for (int i = 0; i < singles; ++i)
      for (int j = i + 1; j < singles; ++j) {
        pool.push_back(pool[i].add(pool[j]));
        pool.push_back(pool[i].sub(pool[j]));
      }
  }

  std::vector<Matrix> spins(pool.size());
  std::vector<bool> spun(pool.size(), false);

  Matrix gens(f, m.dim, 0);
  while (w.cols() < m.dim) {
    int best = -1, best_gain = 0;
    for (size_t c = 0; c < pool.size(); ++c) {
      if (in_span(w, pool[c])) continue;  // gain 0, skip without spinning
      if (!spun[c]) {
        spins[c] = spin(m, pool[c]);
        spun[c] = true;
      }
      int gain = rank(w.hstack(spins[c])) - w.cols();
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(c);
        if (best_gain == m.dim - w.cols()) break;  // cannot do better this round
      }
    }
    if (best < 0) fail(errc::internal_inconsistency, "generator search stalled");
    gens = gens.hstack(pool[best]);
    w = column_space_basis(w.hstack(spins[best]));
  }
  if (gens.cols() == 0) gens = Matrix(f, m.dim, 0);
  return gens;
}

}  // namespace

FreeCover free_cover(const AModule& m, const Matrix* radical) {
  const Field& f = m.alg->field;
  const int d = m.alg->dim;
  FreeCover c;
  if (m.dim == 0) {
    c.free = zero_module(m.alg);
    c.surjection = Matrix(f, 0, 0);
    c.generators = Matrix(f, 0, 0);
    c.kernel = Matrix(f, 0, 0);
    c.kernel_module = zero_module(m.alg);
    c.preimages = Matrix(f, 0, 0);
    return c;
  }
  c.generators = greedy_generators(m, radical);
  const int g = c.generators.cols();
  c.free = free_module(m.alg, g);
  c.surjection = Matrix(f, m.dim, d * g);
  for (int s = 0; s < g; ++s) {
    // basis (copy s, algebra basis a) ↦ ρ(e_a)·gen_s
    for (int a = 0; a < d; ++a) c.surjection.set_col(s * d + a, m.action[a] * c.generators.col(s));
  }
  c.kernel = kernel_basis(c.surjection);
  c.kernel_module = submodule(c.free, c.kernel);
  auto pre = solve(c.surjection, Matrix::identity(f, m.dim));
  if (!pre) fail(errc::internal_inconsistency, "free cover is not surjective");
  c.preimages = std::move(*pre);
  return c;
}

namespace {

// algebra-coefficient slice s of a vector in A^g
Matrix slice(const Matrix& v, int s, int d) {
  Matrix out(v.field(), d, 1);
  for (int i = 0; i < d; ++i) out.at(i, 0) = v.at(s * d + i, 0);
  return out;
}

// Maps M → N through a presentation F = A^g ↠ M: a map is a choice of
// generator images x_1..x_g ∈ N annihilating the kernel of the cover.
struct PresentedHom {
  FreeCover cover;
  Matrix solution_basis;  // (g·dimN) × s, each column a stacked (x_1..x_g)
};

PresentedHom presented_hom(const AModule& m, const AModule& n) {
  const Field& f = m.alg->field;
  const int d = m.alg->dim;
  PresentedHom ph;
  ph.cover = free_cover(m);
  const int g = ph.cover.generators.cols();
  if (g == 0) {
    ph.solution_basis = Matrix(f, 0, 0);
    return ph;
  }
  const int unknowns = g * n.dim;
  const int krows = ph.cover.kernel.cols();
  Matrix system(f, krows * n.dim, unknowns);
  for (int w = 0; w < krows; ++w) {
    Matrix kv = ph.cover.kernel.col(w);
    for (int s = 0; s < g; ++s) {
      Matrix op = n.act(slice(kv, s, d));  // dimN×dimN
      for (int r = 0; r < n.dim; ++r)
        for (int c2 = 0; c2 < n.dim; ++c2)
          system.at(w * n.dim + r, s * n.dim + c2) = f.add(system.at(w * n.dim + r, s * n.dim + c2), op.at(r, c2));
    }
  }
  ph.solution_basis = kernel_basis(system);
  return ph;
}

Matrix assemble_map(const PresentedHom& ph, const AModule& n, const Matrix& xs) {
  const int d = ph.cover.free.alg->dim;
  const int g = ph.cover.generators.cols();
  const AModule& m_src_free = ph.cover.free;
  const Field& f = n.alg->field;
  const int mdim = ph.cover.surjection.rows();
  Matrix out(f, n.dim, mdim);
  (void)m_src_free;
  for (int b = 0; b < mdim; ++b) {
    Matrix v = ph.cover.preimages.col(b);  // in F
    Matrix img(f, n.dim, 1);
    for (int s = 0; s < g; ++s) {
      Matrix xcol(f, n.dim, 1);
      for (int r = 0; r < n.dim; ++r) xcol.at(r, 0) = xs.at(s * n.dim + r, 0);
      img = img.add(n.act(slice(v, s, d)) * xcol);
    }
    out.set_col(b, img);
  }
  return out;
}

}  // namespace

std::vector<Matrix> hom_space(const AModule& m, const AModule& n) {
  if (m.alg.get() != n.alg.get() && !(m.alg->field == n.alg->field && m.alg->dim == n.alg->dim))
    fail(errc::dimension_mismatch, "hom_space: different algebras");
  std::vector<Matrix> out;
  if (m.dim == 0 || n.dim == 0) return out;
  PresentedHom ph = presented_hom(m, n);
  for (int j = 0; j < ph.solution_basis.cols(); ++j) {
    Matrix f = assemble_map(ph, n, ph.solution_basis.col(j));
    out.push_back(std::move(f));
  }
  return out;
}

ProjectivityResult is_projective(const AModule& m) {
  if (m.dim == 0) return {true, Matrix(m.alg->field, 0, 0)};
  const Field& f = m.alg->field;
  const int d = m.alg->dim;
  FreeCover cover = free_cover(m);
  const int g = cover.generators.cols();
  const int fdim = cover.free.dim;

  // unknown φ: F → F (module map, so g generator images in F) with
  // φ(kernel) = 0 and surjection∘φ = surjection; then s = φ∘preimages splits.
  const int unknowns = g * fdim;
  const int krows = cover.kernel.cols();
  Matrix lhs(f, krows * fdim + g * m.dim, unknowns);
  Matrix rhs(f, lhs.rows(), 1);
  for (int w = 0; w < krows; ++w) {
    Matrix kv = cover.kernel.col(w);
    for (int s = 0; s < g; ++s) {
      Matrix op = cover.free.act(slice(kv, s, d));
      for (int r = 0; r < fdim; ++r)
        for (int c2 = 0; c2 < fdim; ++c2)
          lhs.at(w * fdim + r, s * fdim + c2) = f.add(lhs.at(w * fdim + r, s * fdim + c2), op.at(r, c2));
    }
  }
  const int base = krows * fdim;
  for (int s = 0; s < g; ++s) {
    // surjection(φ(u_s)) = surjection(u_s); u_s is the unit in copy s
    Matrix us(f, fdim, 1);
    for (int i = 0; i < d; ++i) us.at(s * d + i, 0) = m.alg->unit.at(i, 0);
    Matrix target = cover.surjection * us;
    for (int r = 0; r < m.dim; ++r) {
      for (int c2 = 0; c2 < fdim; ++c2) lhs.at(base + s * m.dim + r, s * fdim + c2) = cover.surjection.at(r, c2);
      rhs.at(base + s * m.dim + r, 0) = target.at(r, 0);
    }
  }
  auto sol = solve(lhs, rhs);
  if (!sol) return {false, std::nullopt};

  // reconstruct s: M → F from φ and the chosen preimages
  Matrix s_map(f, fdim, m.dim);
  for (int b = 0; b < m.dim; ++b) {
    Matrix v = cover.preimages.col(b);
    Matrix img(f, fdim, 1);
    for (int s = 0; s < g; ++s) {
      Matrix xcol(f, fdim, 1);
      for (int r = 0; r < fdim; ++r) xcol.at(r, 0) = sol->at(s * fdim + r, 0);
      img = img.add(cover.free.act(slice(v, s, d)) * xcol);
    }
    s_map.set_col(b, img);
  }
  if (!(cover.surjection * s_map).is_identity())
    fail(errc::internal_inconsistency, "projective splitting does not split");
  if (!is_module_map(m, cover.free, s_map))
    fail(errc::internal_inconsistency, "projective splitting is not equivariant");
  return {true, s_map};
}

bool is_injective(const AModule& m) { return is_projective(dual_module(m)).projective; }

IsoResult module_iso(const AModule& m, const AModule& n) {
  if (m.dim != n.dim) return {IsoResult::Verdict::not_iso, std::nullopt};
  if (m.dim == 0) return {IsoResult::Verdict::iso, Matrix(m.alg->field, 0, 0)};
  auto homs = hom_space(m, n);
  if (homs.empty()) return {IsoResult::Verdict::not_iso, std::nullopt};
  for (const auto& h : homs)
    if (inverse(h)) return {IsoResult::Verdict::iso, h};

  const int s = static_cast<int>(homs.size());
  if (s <= 6) {
    // all coefficient vectors in {−2..2}^s
    std::vector<int> coeff(s, -2);
    while (true) {
      Matrix cand(m.alg->field, n.dim, m.dim);
      for (int i = 0; i < s; ++i)
        if (coeff[i] != 0) cand = cand.add(homs[i].scaled(Scalar(coeff[i])));
      if (!cand.is_zero() && inverse(cand)) return {IsoResult::Verdict::iso, cand};
      int pos = 0;
      while (pos < s && coeff[pos] == 2) coeff[pos++] = -2;
      if (pos == s) break;
      ++coeff[pos];
    }
  } else {
    Rng rng(0x1505);
    for (int trial = 0; trial < 2000; ++trial) {
      Matrix cand(m.alg->field, n.dim, m.dim);
      for (int i = 0; i < s; ++i) {
        long c = rng.next_in(-2, 2);
        if (c != 0) cand = cand.add(homs[i].scaled(Scalar(c)));
      }
      if (!cand.is_zero() && inverse(cand)) return {IsoResult::Verdict::iso, cand};
    }
  }
  return {IsoResult::Verdict::indeterminate, std::nullopt};
}

std::string module_signature(const AModule& m) {
  std::ostringstream os;
  os << m.dim << "|";
  for (const auto& a : m.action) os << a.to_string();
  return os.str();
}

}  // namespace xprod
