#include "xprod/comparison.hpp"

namespace xprod {

namespace {

void require_terms(const Resolution& r, int needed) {
  if (static_cast<int>(r.terms.size()) > needed || r.exhausted_at >= 0) return;
  fail(errc::resolution_too_short,
       "resolution has " + std::to_string(r.terms.size()) + " terms, need degree " + std::to_string(needed));
}

int rank_at(const Resolution& r, int i) {
  return i < static_cast<int>(r.ranks.size()) ? r.ranks[i] : 0;
}

// unit generator of copy t in the free term F_i
Matrix unit_generator(const Resolution& r, int i, int t) {
  const Algebra& a = *r.module.alg;
  Matrix u(a.field, r.terms[i].dim, 1);
  for (int e = 0; e < a.dim; ++e) u.at(t * a.dim + e, 0) = a.unit.at(e, 0);
  return u;
}

}  // namespace

ExtRestriction ext_restriction_map(const CrossedSystem& sys, const AModule& m, const AModule& n,
                                   int degree, int cap) {
  if (!is_semisimple(sys.H()).semisimple)
    fail(errc::not_semisimple, "ext restriction check requires a semisimple H");
  if (m.alg.get() != sys.product.get() || n.alg.get() != sys.product.get())
    fail(errc::invalid_argument, "ext_restriction_map: modules must live over the product");
  if (degree < 0) fail(errc::invalid_argument, "degree must be >= 0");

  const Field& f = sys.product->field;
  const int dh = sys.H().dim();
  const int dr = sys.R().dim;
  const int dp = sys.product->dim;

  Resolution r = free_resolution(m, std::min(cap, degree + 1), false);
  require_terms(r, degree + 1);
  const int upto = degree + 1;

  // product side: Hom_P(F_i, N) = N^{g_i}
  HomComplex cp = hom_complex(r, n, upto);

  // R side: F_i restricted is free over R on the generators γ(h_b)·u_t;
  // first the freeness isomorphisms T_i: R^{g_i·dimH} → F_i
  std::vector<Matrix> t_mats(upto + 1), t_invs(upto + 1);
  for (int i = 0; i <= upto; ++i) {
    int g = rank_at(r, i);
    if (g == 0) continue;
    Matrix t(f, g * dp, g * dh * dr);
    for (int s = 0; s < g; ++s)
      for (int b = 0; b < dh; ++b)
        for (int rho = 0; rho < dr; ++rho) {
          Matrix val = sys.product->multiply(sys.embed.matrix.col(rho), sys.gamma.col(b));
          int col = (s * dh + b) * dr + rho;
          for (int row = 0; row < dp; ++row) t.at(s * dp + row, col) = val.at(row, 0);
        }
    auto tinv = inverse(t);
    if (!tinv) fail(errc::internal_inconsistency, "restricted term is not R-free");
    t_mats[i] = std::move(t);
    t_invs[i] = std::move(*tinv);
  }

  // R-side deltas on C_R^i = N^{g_i·dimH}
  std::vector<Matrix> deltas_r;  // deltas_r[i−1]: C_R^{i−1} → C_R^i
  for (int i = 1; i <= upto; ++i) {
    int gi = rank_at(r, i), gprev = rank_at(r, i - 1);
    Matrix delta(f, gi * dh * n.dim, gprev * dh * n.dim);
    if (gi > 0 && gprev > 0) {
      for (int t = 0; t < gi; ++t) {
        Matrix base_image = r.diffs[i] * unit_generator(r, i, t);
        for (int b = 0; b < dh; ++b) {
          // d(γ(h_b)·u_t) = γ(h_b)·d(u_t): the left action on the free term
          Matrix w = r.terms[i - 1].act(sys.gamma.col(b)) * base_image;
          Matrix coords = t_invs[i - 1] * w;
          for (int s = 0; s < gprev; ++s)
            for (int c = 0; c < dh; ++c) {
              Matrix rcoeff(f, dr, 1);
              for (int rho = 0; rho < dr; ++rho) rcoeff.at(rho, 0) = coords.at((s * dh + c) * dr + rho, 0);
              Matrix op = n.act(sys.embed.matrix * rcoeff);
              for (int rr = 0; rr < n.dim; ++rr)
                for (int cc = 0; cc < n.dim; ++cc)
                  delta.at((t * dh + b) * n.dim + rr, (s * dh + c) * n.dim + cc) =
                      f.add(delta.at((t * dh + b) * n.dim + rr, (s * dh + c) * n.dim + cc), op.at(rr, cc));
            }
        }
      }
    }
    deltas_r.push_back(std::move(delta));
  }

  // inclusions ι_i: C_P^i → C_R^i, ψ_{(s,b)} = φ(γ(h_b)·u_s) = ρ_N(γ(h_b))·φ_s
  std::vector<Matrix> iotas;
  for (int i = 0; i <= upto; ++i) {
    int g = rank_at(r, i);
    Matrix iota(f, g * dh * n.dim, g * n.dim);
    for (int s = 0; s < g; ++s)
      for (int b = 0; b < dh; ++b) {
        Matrix op = n.act(sys.gamma.col(b));
        for (int rr = 0; rr < n.dim; ++rr)
          for (int cc = 0; cc < n.dim; ++cc)
            iota.at((s * dh + b) * n.dim + rr, s * n.dim + cc) = op.at(rr, cc);
      }
    iotas.push_back(std::move(iota));
  }

  // the inclusion is a chain map; this must hold exactly
  for (int i = 1; i <= upto; ++i)
    if (!(deltas_r[i - 1] * iotas[i - 1] == iotas[i] * cp.deltas[i - 1]))
      fail(errc::internal_inconsistency, "ext restriction is not a chain map at degree " + std::to_string(i));

  Matrix out_p = cp.deltas[degree];
  Matrix in_p = degree >= 1 ? cp.deltas[degree - 1] : Matrix(f, cp.space_dims[degree], 0);
  HomologySpot hp = homology_spot(out_p, in_p, cp.space_dims[degree]);

  int dim_r_space = rank_at(r, degree) * dh * n.dim;
  Matrix out_r = deltas_r[degree];
  Matrix in_r = degree >= 1 ? deltas_r[degree - 1] : Matrix(f, dim_r_space, 0);
  HomologySpot hr = homology_spot(out_r, in_r, dim_r_space);

  ExtRestriction res;
  res.degree = degree;
  res.dim_product = hp.dim();
  res.dim_restricted = hr.dim();
  res.map = Matrix(f, hr.dim(), hp.dim());
  for (int j = 0; j < hp.dim(); ++j) {
    Matrix cocycle = hp.cycles * hp.classes.complement.col(j);
    res.map.set_col(j, hr.class_of(iotas[degree] * cocycle));
  }
  res.injective = rank(res.map) == res.dim_product;
  return res;
}

TorComparison tor_comparison_map(const CrossedSystem& sys, const AModule& mop, const AModule& n,
                                 int degree, int cap) {
  AlgebraPtr pop = opposite(sys.product);
  if (mop.alg.get() != pop.get()) fail(errc::invalid_argument, "tor_comparison_map: left argument must be over the opposite product");
  if (n.alg.get() != sys.product.get()) fail(errc::invalid_argument, "tor_comparison_map: right argument must be over the product");
  if (degree < 0) fail(errc::invalid_argument, "degree must be >= 0");

  const Field& f = sys.product->field;
  Resolution r = free_resolution(mop, std::min(cap, degree + 1), false);
  require_terms(r, degree + 1);
  const int upto = degree + 1;

  TensorComplex tp = tensor_complex(r, n, upto);
  TensorComplex tr = tensor_complex_with(r, n, upto, sys.embed.matrix);

  // ξ_i: T_i^R → T_i^P is the further quotient
  std::vector<Matrix> xi;
  for (int i = 0; i <= upto; ++i) xi.push_back(tp.spots[i].projection * tr.spots[i].complement);

  TorComparison res;
  res.degree = degree;
  res.chain_map_verified = true;
  for (int i = 1; i <= upto; ++i)
    if (!(tp.diffs[i - 1] * xi[i] == xi[i - 1] * tr.diffs[i - 1])) {
      res.chain_map_verified = false;
      fail(errc::internal_inconsistency, "ξ is not a chain map at degree " + std::to_string(i));
    }

  int dim_r_spot = tr.spots[degree].dim();
  Matrix out_r = degree >= 1 ? tr.diffs[degree - 1] : Matrix(f, 0, dim_r_spot);
  Matrix in_r = tr.diffs[degree];
  HomologySpot hr = homology_spot(out_r, in_r, dim_r_spot);

  int dim_p_spot = tp.spots[degree].dim();
  Matrix out_p = degree >= 1 ? tp.diffs[degree - 1] : Matrix(f, 0, dim_p_spot);
  Matrix in_p = tp.diffs[degree];
  HomologySpot hp = homology_spot(out_p, in_p, dim_p_spot);

  res.dim_restricted = hr.dim();
  res.dim_product = hp.dim();
  res.map = Matrix(f, hp.dim(), hr.dim());
  for (int j = 0; j < hr.dim(); ++j) {
    Matrix cycle = hr.cycles * hr.classes.complement.col(j);
    res.map.set_col(j, hp.class_of(xi[degree] * cycle));
  }
  return res;
}

}  // namespace xprod
