#include "xprod/crossed.hpp"

namespace xprod {

MeasuringAction MeasuringAction::assemble(HopfPtr h, AlgebraPtr r, std::vector<ActEntry> entries) {
  MeasuringAction a;
  a.H = std::move(h);
  a.R = std::move(r);
  if (a.H->field() != a.R->field) fail(errc::invalid_argument, "R and H live over different fields");
  const int dh = a.H->dim(), dr = a.R->dim;
  a.ops.assign(dh, Matrix(a.R->field, dr, dr));
  for (auto& e : entries) {
    if (e.h < 0 || e.h >= dh || e.r < 0 || e.r >= dr || e.rp < 0 || e.rp >= dr)
      fail(errc::invalid_argument, "action entry out of range");
    e.c = a.R->field.reduce(e.c);
    a.ops[e.h].at(e.rp, e.r) = a.R->field.add(a.ops[e.h].at(e.rp, e.r), e.c);
  }
  a.entries = std::move(entries);
  return a;
}

Matrix MeasuringAction::act_of(const Matrix& hvec) const {
  const Field& f = R->field;
  Matrix op(f, R->dim, R->dim);
  for (int i = 0; i < H->dim(); ++i) {
    if (sgn(hvec.at(i, 0)) == 0) continue;
    op = op.add(ops[i].scaled(hvec.at(i, 0)));
  }
  return op;
}

ValidationResult validate_action(const MeasuringAction& a) {
  const Algebra& r = *a.R;
  const HopfAlgebra& h = *a.H;
  const Field& f = r.field;

  // 1·b = b
  if (!a.act_of(h.alg->unit).is_identity())
    return ValidationResult::violated("unit action", "1_H does not act as the identity");
  // h·1 = ε(h)1
  for (int i = 0; i < h.dim(); ++i) {
    Matrix lhs = a.ops[i] * r.unit;
    if (!(lhs == r.unit.scaled(h.counit.at(0, i))))
      return ValidationResult::violated("measuring", "h·1 != ε(h)1 at " + h.alg->basis_names[i]);
  }
  // h·(bc) = Σ (h₁·b)(h₂·c)
  for (int i = 0; i < h.dim(); ++i)
    for (int b = 0; b < r.dim; ++b)
      for (int c = 0; c < r.dim; ++c) {
        Matrix lhs = a.ops[i] * r.multiply(r.basis_vector(b), r.basis_vector(c));
        Matrix rhs(f, r.dim, 1);
        for (const auto& ce : h.comul)
          if (ce.i == i)
            rhs = rhs.add(r.multiply(a.ops[ce.j] * r.basis_vector(b), a.ops[ce.k] * r.basis_vector(c))
                              .scaled(ce.c));
        if (!(lhs == rhs))
          return ValidationResult::violated(
              "measuring", "h·(bc) != Σ(h₁·b)(h₂·c) at (" + h.alg->basis_names[i] + ", " +
                               r.basis_names[b] + ", " + r.basis_names[c] + ")");
      }
  return ValidationResult::certificate();
}

namespace {

Matrix assemble_sigma(const MeasuringAction& action, const std::vector<CocEntry>& entries) {
  const int dh = action.H->dim(), dr = action.R->dim;
  Matrix sigma(action.R->field, dr, dh * dh);
  for (const auto& e : entries) {
    if (e.h < 0 || e.h >= dh || e.g < 0 || e.g >= dh || e.r < 0 || e.r >= dr)
      fail(errc::invalid_argument, "cocycle entry out of range");
    sigma.at(e.r, e.h * dh + e.g) =
        action.R->field.add(sigma.at(e.r, e.h * dh + e.g), action.R->field.reduce(e.c));
  }
  return sigma;
}

// σ(u, v) for arbitrary coefficient vectors
Matrix sigma_eval(const Matrix& sigma, const Matrix& u, const Matrix& v) {
  const int dh = u.rows();
  const Field& f = sigma.field();
  Matrix out(f, sigma.rows(), 1);
  for (int h = 0; h < dh; ++h) {
    if (sgn(u.at(h, 0)) == 0) continue;
    for (int g = 0; g < dh; ++g) {
      if (sgn(v.at(g, 0)) == 0) continue;
      out = out.add(sigma.col(h * dh + g).scaled(f.mul(u.at(h, 0), v.at(g, 0))));
    }
  }
  return out;
}

void check_sigma_normal(const MeasuringAction& action, const Matrix& sigma) {
  const HopfAlgebra& h = *action.H;
  const Algebra& r = *action.R;
  for (int g = 0; g < h.dim(); ++g) {
    Matrix left = sigma_eval(sigma, h.alg->unit, h.alg->basis_vector(g));
    Matrix right = sigma_eval(sigma, h.alg->basis_vector(g), h.alg->unit);
    Matrix want = r.unit.scaled(h.counit.at(0, g));
    if (!(left == want) || !(right == want))
      fail(errc::not_associative, "cocycle is not normal at " + h.alg->basis_names[g]);
  }
}

// convolution inverse of σ: Σ σ⁻¹(h₁,g₁) σ(h₂,g₂) = ε(h)ε(g) 1
Matrix solve_sigma_inverse(const MeasuringAction& action, const Matrix& sigma) {
  const HopfAlgebra& h = *action.H;
  const Algebra& r = *action.R;
  const Field& f = r.field;
  const int dh = h.dim(), dr = r.dim;
  const int unknowns = dr * dh * dh;  // column (h,g) stacked
  Matrix lhs(f, unknowns, unknowns);
  Matrix rhs(f, unknowns, 1);
  for (int hh = 0; hh < dh; ++hh)
    for (int gg = 0; gg < dh; ++gg) {
      const int row0 = (hh * dh + gg) * dr;
      for (const auto& ch : h.comul)
        if (ch.i == hh)
          for (const auto& cg : h.comul)
            if (cg.i == gg) {
              // coefficient block: RightOp(σ(h₂,g₂)) applied to X(h₁,g₁)
              Matrix rop = r.right_operator(sigma.col(ch.k * dh + cg.k)).scaled(f.mul(ch.c, cg.c));
              const int col0 = (ch.j * dh + cg.j) * dr;
              for (int i = 0; i < dr; ++i)
                for (int j = 0; j < dr; ++j)
                  lhs.at(row0 + i, col0 + j) = f.add(lhs.at(row0 + i, col0 + j), rop.at(i, j));
            }
      Scalar eps = f.mul(h.counit.at(0, hh), h.counit.at(0, gg));
      for (int i = 0; i < dr; ++i) rhs.at(row0 + i, 0) = f.mul(eps, r.unit.at(i, 0));
    }
  auto sol = solve(lhs, rhs);
  if (!sol) fail(errc::not_invertible_cocycle, "convolution-inverse system for σ is inconsistent");
  Matrix inv(f, dr, dh * dh);
  for (int hh = 0; hh < dh; ++hh)
    for (int gg = 0; gg < dh; ++gg)
      for (int i = 0; i < dr; ++i) inv.at(i, hh * dh + gg) = sol->at((hh * dh + gg) * dr + i, 0);

  // two-sided identity must follow; verify σ * σ⁻¹ = uεε as well
  for (int hh = 0; hh < dh; ++hh)
    for (int gg = 0; gg < dh; ++gg) {
      Matrix acc(f, dr, 1);
      for (const auto& ch : h.comul)
        if (ch.i == hh)
          for (const auto& cg : h.comul)
            if (cg.i == gg)
              acc = acc.add(r.multiply(sigma.col(ch.j * dh + cg.j), inv.col(ch.k * dh + cg.k))
                                .scaled(f.mul(ch.c, cg.c)));
      Matrix want = r.unit.scaled(f.mul(h.counit.at(0, hh), h.counit.at(0, gg)));
      if (!(acc == want)) fail(errc::not_invertible_cocycle, "σ⁻¹ is not a two-sided convolution inverse");
    }
  return inv;
}

}  // namespace

CrossedSystem build_crossed(const MeasuringAction& action, const std::vector<CocEntry>& sigma_entries) {
  auto av = validate_action(action);
  if (!av) fail(errc::not_measuring, av.violation + " (" + av.detail + ")");

  const HopfAlgebra& h = *action.H;
  const Algebra& r = *action.R;
  const Field& f = r.field;
  const int dh = h.dim(), dr = r.dim, dp = dh * dr;

  Matrix sigma = assemble_sigma(action, sigma_entries);
  check_sigma_normal(action, sigma);
  Matrix sigma_inv = solve_sigma_inverse(action, sigma);

  // product structure constants from the crossed multiplication rule
  std::vector<std::string> names(dp);
  for (int a = 0; a < dr; ++a)
    for (int i = 0; i < dh; ++i)
      names[smash_index(a, i, dh)] = r.basis_names[a] + "#" + h.alg->basis_names[i];

  std::vector<MultEntry> mult;
  for (int i = 0; i < dh; ++i) {
    auto d2 = h.comul_squared_of(h.alg->basis_vector(i));
    for (int j = 0; j < dh; ++j) {
      auto d1 = h.comul_of(h.alg->basis_vector(j));
      for (const auto& ti : d2)
        for (const auto& tj : d1) {
          Scalar kappa = f.mul(ti.coeff, tj.c);
          if (f.is_zero(kappa)) continue;
          // h-part: e_c · e_v
          Matrix hprod = h.alg->multiply(h.alg->basis_vector(ti.c), h.alg->basis_vector(tj.k));
          const Matrix sig = sigma.col(ti.b * dh + tj.j);
          for (int s = 0; s < dr; ++s) {
            // (h₁·b) σ(h₂,g₁) for b = e_s
            Matrix z = r.multiply(action.ops[ti.a] * r.basis_vector(s), sig);
            for (int a = 0; a < dr; ++a) {
              Matrix ra = r.multiply(r.basis_vector(a), z);
              for (int t = 0; t < dr; ++t) {
                if (sgn(ra.at(t, 0)) == 0) continue;
                for (int k = 0; k < dh; ++k) {
                  if (sgn(hprod.at(k, 0)) == 0) continue;
                  Scalar c = f.mul(kappa, f.mul(ra.at(t, 0), hprod.at(k, 0)));
                  if (f.is_zero(c)) continue;
                  mult.push_back({smash_index(a, i, dh), smash_index(s, j, dh), smash_index(t, k, dh), c});
                }
              }
            }
          }
        }
    }
  }

  Matrix unit(f, dp, 1);
  for (int a = 0; a < dr; ++a)
    for (int i = 0; i < dh; ++i)
      unit.at(smash_index(a, i, dh), 0) = f.mul(r.unit.at(a, 0), h.alg->unit.at(i, 0));

  CrossedSystem sys;
  sys.action = action;
  sys.sigma = sigma;
  sys.sigma_inv = sigma_inv;
  sys.product = std::make_shared<Algebra>(Algebra::assemble(f, dp, std::move(names), std::move(unit), std::move(mult)));

  Matrix embed(f, dp, dr);
  for (int a = 0; a < dr; ++a)
    for (int i = 0; i < dh; ++i) embed.at(smash_index(a, i, dh), a) = h.alg->unit.at(i, 0);
  sys.embed = {action.R, sys.product, std::move(embed)};

  sys.gamma = Matrix(f, dp, dh);
  for (int i = 0; i < dh; ++i)
    for (int a = 0; a < dr; ++a) sys.gamma.at(smash_index(a, i, dh), i) = r.unit.at(a, 0);

  // γ⁻¹ from Σ γ⁻¹(h₁)γ(h₂) = ε(h)·1#1
  {
    const Algebra& p = *sys.product;
    const int unknowns = dh * dp;
    Matrix lhs(f, dh * dp, unknowns);
    Matrix rhs(f, dh * dp, 1);
    for (int hh = 0; hh < dh; ++hh) {
      const int row0 = hh * dp;
      for (const auto& ch : h.comul)
        if (ch.i == hh) {
          Matrix rop = p.right_operator(sys.gamma.col(ch.k)).scaled(ch.c);
          const int col0 = ch.j * dp;
          for (int i = 0; i < dp; ++i)
            for (int j = 0; j < dp; ++j) lhs.at(row0 + i, col0 + j) = f.add(lhs.at(row0 + i, col0 + j), rop.at(i, j));
        }
      for (int i = 0; i < dp; ++i) rhs.at(row0 + i, 0) = f.mul(h.counit.at(0, hh), p.unit.at(i, 0));
    }
    auto sol = solve(lhs, rhs);
    if (!sol) fail(errc::not_invertible_cocycle, "γ has no convolution inverse");
    sys.gamma_inv = Matrix(f, dp, dh);
    for (int hh = 0; hh < dh; ++hh)
      for (int i = 0; i < dp; ++i) sys.gamma_inv.at(i, hh) = sol->at(hh * dp + i, 0);
  }

  auto v = validate_crossed(sys);
  if (!v) {
    if (v.violation == "associativity" || v.violation == "unit")
      fail(errc::not_associative, "crossed product failed " + v.violation + " at " + v.detail);
    fail(errc::internal_inconsistency, "crossed product failed " + v.violation + " (" + v.detail + ")");
  }
  return sys;
}

ValidationResult validate_crossed(const CrossedSystem& sys) {
  const Algebra& p = *sys.product;
  const Algebra& r = sys.R();
  const HopfAlgebra& h = sys.H();
  const Field& f = p.field;
  const int dh = h.dim(), dr = r.dim, dp = p.dim;

  auto va = validate_algebra(p);
  if (!va) return va;

  // embed is an algebra map: (a#1)(b#1) = ab#1
  auto ve = validate_algebra_map(sys.embed);
  if (!ve) return ValidationResult::violated("embedding", ve.violation + " at " + ve.detail);

  // (1#h)(1#g) = Σ σ(h₁,g₁) # h₂g₂
  for (int i = 0; i < dh; ++i)
    for (int j = 0; j < dh; ++j) {
      Matrix lhs = p.multiply(sys.gamma.col(i), sys.gamma.col(j));
      Matrix rhs(f, dp, 1);
      for (const auto& ch : h.comul)
        if (ch.i == i)
          for (const auto& cg : h.comul)
            if (cg.i == j) {
              Matrix sig = sys.sigma.col(ch.j * dh + cg.j);
              Matrix hm = h.alg->multiply(h.alg->basis_vector(ch.k), h.alg->basis_vector(cg.k));
              Scalar c = f.mul(ch.c, cg.c);
              for (int a = 0; a < dr; ++a) {
                if (sgn(sig.at(a, 0)) == 0) continue;
                for (int k = 0; k < dh; ++k) {
                  if (sgn(hm.at(k, 0)) == 0) continue;
                  rhs.at(smash_index(a, k, dh), 0) =
                      f.add(rhs.at(smash_index(a, k, dh), 0), f.mul(c, f.mul(sig.at(a, 0), hm.at(k, 0))));
                }
              }
            }
      if (!(lhs == rhs))
        return ValidationResult::violated("smash law", "(1#h)(1#g) != Σσ(h₁,g₁)#h₂g₂ at (" +
                                                            h.alg->basis_names[i] + ", " + h.alg->basis_names[j] + ")");
    }

  // convolution identities for γ and γ⁻¹, both orders
  for (int i = 0; i < dh; ++i) {
    Matrix acc1(f, dp, 1), acc2(f, dp, 1);
    for (const auto& ch : h.comul)
      if (ch.i == i) {
        acc1 = acc1.add(p.multiply(sys.gamma_inv.col(ch.j), sys.gamma.col(ch.k)).scaled(ch.c));
        acc2 = acc2.add(p.multiply(sys.gamma.col(ch.j), sys.gamma_inv.col(ch.k)).scaled(ch.c));
      }
    Matrix want = p.unit.scaled(h.counit.at(0, i));
    if (!(acc1 == want) || !(acc2 == want))
      return ValidationResult::violated("convolution identity",
                                        "γ⁻¹ * γ != ε·1#1 at " + h.alg->basis_names[i]);
  }

  // two-sided freeness of rank dim H over embedded R
  Matrix phi_left(f, dp, dp), phi_right(f, dp, dp);
  for (int a = 0; a < dr; ++a)
    for (int i = 0; i < dh; ++i) {
      int idx = smash_index(a, i, dh);
      phi_left.set_col(idx, p.multiply(sys.embed.matrix.col(a), sys.gamma.col(i)));
      phi_right.set_col(idx, p.multiply(sys.gamma.col(i), sys.embed.matrix.col(a)));
    }
  if (!inverse(phi_left))
    return ValidationResult::violated("left freeness", "R-basis {1#h_i} does not span");
  if (!inverse(phi_right))
    return ValidationResult::violated("right freeness", "right R-basis {1#h_i} does not span");

  return ValidationResult::certificate();
}

namespace {

Matrix normalized_right_integral(const CrossedSystem& sys) {
  auto ss = is_semisimple(sys.H());
  if (!ss.semisimple) fail(errc::not_semisimple, "H has no normalized integral");
  return *ss.normalized_integral;
}

void require_over(const AModule& m, const AlgebraPtr& alg, const char* what) {
  if (m.alg.get() != alg.get()) fail(errc::invalid_argument, std::string(what) + ": module is over the wrong algebra");
}

}  // namespace

Matrix average_left(const CrossedSystem& sys, const AModule& m, const AModule& n, const Matrix& f) {
  require_over(m, sys.product, "average_left");
  require_over(n, sys.product, "average_left");
  if (f.rows() != n.dim || f.cols() != m.dim) fail(errc::dimension_mismatch, "average_left: map shape");
  const Field& fd = sys.product->field;

  for (int a = 0; a < sys.R().dim; ++a) {
    Matrix e = sys.embed.matrix.col(a);
    if (!(f * m.act(e) == n.act(e) * f)) fail(errc::not_r_linear, "map does not commute with embedded R");
  }

  Matrix t = normalized_right_integral(sys);
  Matrix avg(fd, n.dim, m.dim);
  for (const auto& term : sys.H().comul_of(t))
    avg = avg.add((n.act(sys.gamma_inv.col(term.j)) * f * m.act(sys.gamma.col(term.k))).scaled(term.c));

  for (int pidx = 0; pidx < sys.product->dim; ++pidx) {
    Matrix e = Matrix(fd, sys.product->dim, 1);
    e.at(pidx, 0) = 1;
    if (!(avg * m.act(e) == n.act(e) * avg))
      fail(errc::internal_inconsistency, "averaged map is not equivariant");
  }
  return avg;
}

Matrix average_right(const CrossedSystem& sys, const AModule& mop, const AModule& nop, const Matrix& f) {
  AlgebraPtr pop = opposite(sys.product);
  require_over(mop, pop, "average_right");
  require_over(nop, pop, "average_right");
  if (f.rows() != nop.dim || f.cols() != mop.dim) fail(errc::dimension_mismatch, "average_right: map shape");
  const Field& fd = sys.product->field;

  for (int a = 0; a < sys.R().dim; ++a) {
    Matrix e = sys.embed.matrix.col(a);
    if (!(f * mop.act(e) == nop.act(e) * f)) fail(errc::not_r_linear, "map does not commute with embedded R");
  }

  Matrix t = normalized_right_integral(sys);
  Matrix avg(fd, nop.dim, mop.dim);
  // f̄(m) = Σ f(m γ⁻¹(t₁)) γ(t₂); right multiplications act through the opposite
  for (const auto& term : sys.H().comul_of(t))
    avg = avg.add((nop.act(sys.gamma.col(term.k)) * f * mop.act(sys.gamma_inv.col(term.j))).scaled(term.c));

  for (int pidx = 0; pidx < sys.product->dim; ++pidx) {
    Matrix e = Matrix(fd, sys.product->dim, 1);
    e.at(pidx, 0) = 1;
    if (!(avg * mop.act(e) == nop.act(e) * avg))
      fail(errc::internal_inconsistency, "averaged right-module map is not equivariant");
  }
  return avg;
}

CrossedSystem smash_with_dual(const CrossedSystem& sys) {
  HopfPtr hstar = dual_hopf(sys.H());
  const HopfAlgebra& h = sys.H();
  const int dh = h.dim(), dr = sys.R().dim;

  // e^j · (e_s # e_i) = Σ_u comul(i -> (u, j)) (e_s # e_u)
  std::vector<ActEntry> act;
  for (const auto& ce : h.comul)
    for (int s = 0; s < dr; ++s)
      act.push_back({ce.k, smash_index(s, ce.i, dh), smash_index(s, ce.j, dh), ce.c});
  MeasuringAction action = MeasuringAction::assemble(hstar, sys.product, std::move(act));

  // trivial cocycle σ(f, f') = ε*(f) ε*(f') 1
  std::vector<CocEntry> sigma;
  const Matrix& unit_p = sys.product->unit;
  const Field& fd = sys.product->field;
  for (int a = 0; a < hstar->dim(); ++a)
    for (int b = 0; b < hstar->dim(); ++b) {
      Scalar eps = fd.mul(hstar->counit.at(0, a), hstar->counit.at(0, b));
      if (fd.is_zero(eps)) continue;
      for (int t = 0; t < sys.product->dim; ++t)
        if (sgn(unit_p.at(t, 0)) != 0) sigma.push_back({a, b, t, fd.mul(eps, unit_p.at(t, 0))});
    }
  return build_crossed(action, sigma);
}

CrossedSystem skew_group_ring(const AlgebraPtr& r, const CayleyTable& g,
                              const std::vector<Matrix>& automorphisms, Field field) {
  auto vg = validate_group(g);
  if (!vg) fail(errc::not_a_group, vg.violation + " (" + vg.detail + ")");
  if (static_cast<int>(automorphisms.size()) != g.n)
    fail(errc::not_group_action, "one automorphism per group element required");

  for (int i = 0; i < g.n; ++i) {
    AlgebraMap am{r, r, automorphisms[i]};
    auto v = validate_algebra_map(am);
    if (!v) fail(errc::not_automorphism, "element " + std::to_string(i) + ": " + v.violation);
    if (!inverse(automorphisms[i])) fail(errc::not_automorphism, "element " + std::to_string(i) + " not invertible");
  }
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (!(automorphisms[i] * automorphisms[j] == automorphisms[g.t[i][j]]))
        fail(errc::not_group_action, "automorphisms do not compose along the group law");

  HopfPtr kg = group_hopf(g, field);
  std::vector<ActEntry> act;
  for (int i = 0; i < g.n; ++i)
    for (int c = 0; c < r->dim; ++c)
      for (int rr = 0; rr < r->dim; ++rr)
        if (sgn(automorphisms[i].at(rr, c)) != 0) act.push_back({i, c, rr, automorphisms[i].at(rr, c)});
  MeasuringAction action = MeasuringAction::assemble(kg, r, std::move(act));

  std::vector<CocEntry> sigma;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int t = 0; t < r->dim; ++t)
        if (sgn(r->unit.at(t, 0)) != 0) sigma.push_back({a, b, t, r->unit.at(t, 0)});
  return build_crossed(action, sigma);
}

CrossedSystem trivial_system(const AlgebraPtr& r, const HopfPtr& h) {
  std::vector<ActEntry> act;
  for (int i = 0; i < h->dim(); ++i) {
    Scalar eps = h->counit.at(0, i);
    if (h->alg->field.is_zero(eps)) continue;
    for (int c = 0; c < r->dim; ++c) act.push_back({i, c, c, eps});
  }
  MeasuringAction action = MeasuringAction::assemble(h, r, std::move(act));
  std::vector<CocEntry> sigma;
  for (int a = 0; a < h->dim(); ++a)
    for (int b = 0; b < h->dim(); ++b) {
      Scalar eps = h->alg->field.mul(h->counit.at(0, a), h->counit.at(0, b));
      if (h->alg->field.is_zero(eps)) continue;
      for (int t = 0; t < r->dim; ++t)
        if (sgn(r->unit.at(t, 0)) != 0) sigma.push_back({a, b, t, h->alg->field.mul(eps, r->unit.at(t, 0))});
    }
  return build_crossed(action, sigma);
}

}  // namespace xprod
