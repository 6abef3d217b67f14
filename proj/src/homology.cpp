#include "xprod/homology.hpp"

namespace xprod {

std::string DimValue::to_string() const {
  switch (kind) {
    case Kind::exact: return std::to_string(n);
    case Kind::infinite: return "inf";
    case Kind::at_least: return ">=" + std::to_string(n);
  }
  return "?";
}

Matrix free_slice(const Matrix& v, int s, int algebra_dim) {
  Matrix out(v.field(), algebra_dim, 1);
  for (int i = 0; i < algebra_dim; ++i) out.at(i, 0) = v.at(s * algebra_dim + i, 0);
  return out;
}

namespace {

// cross-check between the splitting test and the stripped syzygy; the two
// must always agree, a divergence is an engine bug
bool projective_consistent(const AModule& m, const Decomposition* dec) {
  bool by_split = is_projective(m).projective;
  if (dec) {
    bool by_strip = strip_projective_summands(m, *dec).reduced.dim == 0;
    if (by_split != by_strip)
      fail(errc::internal_inconsistency, "projectivity probes disagree");
  }
  return by_split;
}

}  // namespace

Resolution free_resolution(const AModule& m, int cap, bool stop_at_certificate) {
  if (cap < 0) fail(errc::invalid_argument, "resolution cap must be >= 0");
  Resolution r;
  r.module = m;
  r.cap = cap;

  DecompositionPtr dec;
  const Matrix* radical = nullptr;
  try {
    dec = decomposition_of(m.alg);
    radical = &dec->radical;
  } catch (const Error& e) {
    if (e.code() != errc::unsupported_characteristic) throw;
    // proceed without minimal covers or stripping; certificates degrade to
    // plain projectivity tests and literal syzygy isomorphism
  }

  auto stripped = [&](const AModule& k) {
    if (dec) return strip_projective_summands(k, *dec).reduced;
    return k;
  };

  if (stop_at_certificate && projective_consistent(m, dec.get())) {
    r.status = Resolution::Status::module_projective;
    FreeCover c0 = free_cover(m, radical);
    r.terms.push_back(c0.free);
    r.ranks.push_back(c0.generators.cols());
    r.diffs.push_back(c0.surjection);
    r.syzygies.push_back(c0.kernel);
    r.syzygy_modules.push_back(c0.kernel_module);
    r.reduced.push_back(stripped(c0.kernel_module));
    return r;
  }

  AModule current = m;
  for (int n = 0; n <= cap; ++n) {
    FreeCover c = free_cover(current, radical);
    if (n == 0) {
      r.diffs.push_back(c.surjection);
    } else {
      // embed the cover of K_{n−1} back into F_{n−1}
      r.diffs.push_back(r.syzygies[n - 1] * c.surjection);
    }
    r.terms.push_back(c.free);
    r.ranks.push_back(c.generators.cols());
    r.syzygies.push_back(c.kernel);
    r.syzygy_modules.push_back(c.kernel_module);
    r.reduced.push_back(stripped(c.kernel_module));

    const AModule& red = r.reduced.back();
    if (red.dim == 0) {
      if (r.status == Resolution::Status::capped) {
        if (dec) projective_consistent(c.kernel_module, dec.get());
        r.status = Resolution::Status::syzygy_projective;
        r.first_projective = n;
      }
      if (c.kernel.cols() == 0) r.exhausted_at = n;
      if (stop_at_certificate) return r;
    } else if (r.status == Resolution::Status::capped) {
      for (int prev = 0; prev < n; ++prev) {
        if (r.reduced[prev].dim != red.dim || r.reduced[prev].dim == 0) continue;
        IsoResult iso = module_iso(red, r.reduced[prev]);
        if (iso.verdict == IsoResult::Verdict::iso) {
          r.status = Resolution::Status::periodic;
          r.period_from = prev;
          r.period_to = n;
          r.period_witness = *iso.witness;
          if (stop_at_certificate) return r;
          break;
        }
      }
    }
    if (r.exhausted_at >= 0) return r;  // kernel literally zero; nothing further
    current = c.kernel_module;
  }
  return r;
}

DimValue pd(const AModule& m, int cap) {
  Resolution r = free_resolution(m, cap, true);
  switch (r.status) {
    case Resolution::Status::module_projective: return DimValue::exact(0);
    case Resolution::Status::syzygy_projective: return DimValue::exact(r.first_projective + 1);
    case Resolution::Status::periodic: return DimValue::infinite();
    case Resolution::Status::capped: return DimValue::at_least(cap + 1);
  }
  return DimValue::at_least(cap + 1);
}

DimValue gldim(const AlgebraPtr& a, int cap) {
  auto dec = decomposition_of(a);
  bool any_capped = false;
  int max_exact = 0, max_floor = 0;
  for (const auto& s : dec->simples) {
    DimValue v = pd(s, cap);
    if (v.is_infinite()) return DimValue::infinite();
    if (v.kind == DimValue::Kind::at_least) {
      any_capped = true;
      max_floor = std::max(max_floor, v.n);
    } else {
      max_exact = std::max(max_exact, v.n);
    }
  }
  if (any_capped) return DimValue::at_least(std::max(max_floor, max_exact));
  return DimValue::exact(max_exact);
}

// ------------------------------------------------------------- Ext machinery

HomComplex hom_complex(const Resolution& r, const AModule& n, int upto) {
  const int d = r.module.alg->dim;
  const Field& f = n.alg->field;
  HomComplex c;
  const int built = static_cast<int>(r.terms.size());
  for (int i = 0; i <= upto; ++i) {
    int gi = i < built ? r.ranks[i] : 0;
    c.space_dims.push_back(gi * n.dim);
  }
  for (int i = 1; i <= upto; ++i) {
    int gprev = c.space_dims[i - 1] / std::max(1, n.dim);
    int gi = c.space_dims[i] / std::max(1, n.dim);
    Matrix delta(f, gi * n.dim, gprev * n.dim);
    if (i < built && gi > 0 && gprev > 0) {
      for (int t = 0; t < gi; ++t) {
        // d_i(u_t) in F_{i−1}, sliced into algebra coefficients per copy
        Matrix ut(f, r.terms[i].dim, 1);
        for (int e = 0; e < d; ++e) ut.at(t * d + e, 0) = r.module.alg->unit.at(e, 0);
        Matrix image = r.diffs[i] * ut;
        for (int s = 0; s < gprev; ++s) {
          Matrix op = n.act(free_slice(image, s, d));
          for (int rr = 0; rr < n.dim; ++rr)
            for (int cc = 0; cc < n.dim; ++cc)
              delta.at(t * n.dim + rr, s * n.dim + cc) = op.at(rr, cc);
        }
      }
    }
    c.deltas.push_back(std::move(delta));
  }
  return c;
}

Matrix HomologySpot::class_of(const Matrix& cycle) const {
  auto coords = solve(cycles, cycle);
  if (!coords) fail(errc::internal_inconsistency, "vector is not a cycle");
  return classes.projection * *coords;
}

HomologySpot homology_spot(const Matrix& outgoing, const Matrix& incoming, int space_dim) {
  HomologySpot h;
  h.space_dim = space_dim;
  h.cycles = outgoing.rows() == 0 ? Matrix::identity(incoming.field(), space_dim) : kernel_basis(outgoing);
  Matrix image = column_space_basis(incoming);
  // boundary classes inside cycle coordinates
  Matrix b_in_z(h.cycles.field(), h.cycles.cols(), image.cols());
  if (image.cols() > 0) {
    auto coords = solve(h.cycles, image);
    if (!coords) fail(errc::internal_inconsistency, "boundaries are not cycles");
    b_in_z = *coords;
  }
  h.classes = quotient_basis(b_in_z, h.cycles.cols());
  return h;
}

namespace {

void require_terms(const Resolution& r, int needed) {
  if (static_cast<int>(r.terms.size()) > needed || r.exhausted_at >= 0) return;
  fail(errc::resolution_too_short,
       "resolution has " + std::to_string(r.terms.size()) + " terms, need degree " + std::to_string(needed));
}

}  // namespace

ExtSpace ext(const AModule& m, const AModule& n, int degree, int cap) {
  if (degree < 0) fail(errc::invalid_argument, "ext degree must be >= 0");
  Resolution r = free_resolution(m, std::min(cap, degree + 1), false);
  require_terms(r, degree + 1);
  HomComplex c = hom_complex(r, n, degree + 1);
  const Field& f = n.alg->field;

  Matrix outgoing = degree + 1 <= static_cast<int>(c.deltas.size())
                        ? c.deltas[degree]
                        : Matrix(f, 0, c.space_dims[degree]);
  Matrix incoming = degree >= 1 ? c.deltas[degree - 1] : Matrix(f, c.space_dims[degree], 0);
  if (degree >= 1 && incoming.rows() != c.space_dims[degree])
    fail(errc::internal_inconsistency, "hom complex shape drift");
  HomologySpot spot = homology_spot(outgoing, incoming, c.space_dims[degree]);

  ExtSpace out;
  out.degree = degree;
  out.dim = spot.dim();
  const int d = m.alg->dim;
  const int g = degree < static_cast<int>(r.ranks.size()) ? r.ranks[degree] : 0;
  for (int j = 0; j < spot.dim(); ++j) {
    // lift the j-th class rep back to a cocycle, then to a matrix F_degree → N
    Matrix rep = spot.cycles * spot.classes.complement.col(j);
    Matrix mat(f, n.dim, g * d);
    for (int s = 0; s < g; ++s) {
      Matrix xcol(f, n.dim, 1);
      for (int rr = 0; rr < n.dim; ++rr) xcol.at(rr, 0) = rep.at(s * n.dim + rr, 0);
      for (int e = 0; e < d; ++e) {
        Matrix img = n.action[e] * xcol;
        for (int rr = 0; rr < n.dim; ++rr) mat.at(rr, s * d + e) = img.at(rr, 0);
      }
    }
    out.basis.push_back(std::move(mat));
  }
  return out;
}

// ------------------------------------------------------------- Tor machinery

TensorComplex tensor_complex_with(const Resolution& r, const AModule& n, int upto,
                                  const Matrix& balancing_elements) {
  // terms are modules over opposite(A); n is a left A-module on the same
  // basis; the balancing subspace runs over the supplied algebra elements
  // (all of A for ⊗_A, the embedded subalgebra for ⊗_R)
  const Field& f = n.alg->field;
  TensorComplex tc;
  const int built = static_cast<int>(r.terms.size());
  const int nelts = balancing_elements.cols();
  std::vector<int> full_dims;
  for (int i = 0; i <= upto; ++i) {
    int fdim = i < built ? r.terms[i].dim : 0;
    full_dims.push_back(fdim * n.dim);
    if (fdim == 0) {
      tc.spots.push_back(quotient_basis(Matrix(f, 0, 0), 0));
      continue;
    }
    // balancing subspace: x·a ⊗ y − x ⊗ a·y
    Matrix bal(f, fdim * n.dim, nelts * fdim * n.dim);
    int col = 0;
    for (int a = 0; a < nelts; ++a) {
      Matrix tau = r.terms[i].act(balancing_elements.col(a));
      Matrix rho = n.act(balancing_elements.col(a));
      for (int x = 0; x < fdim; ++x)
        for (int y = 0; y < n.dim; ++y) {
          for (int xr = 0; xr < fdim; ++xr)
            if (sgn(tau.at(xr, x)) != 0)
              bal.at(xr * n.dim + y, col) = f.add(bal.at(xr * n.dim + y, col), tau.at(xr, x));
          for (int yr = 0; yr < n.dim; ++yr)
            if (sgn(rho.at(yr, y)) != 0)
              bal.at(x * n.dim + yr, col) = f.sub(bal.at(x * n.dim + yr, col), rho.at(yr, y));
          ++col;
        }
    }
    tc.spots.push_back(quotient_basis(bal, fdim * n.dim));
  }
  for (int i = 1; i <= upto; ++i) {
    if (full_dims[i] == 0 || full_dims[i - 1] == 0) {
      tc.diffs.push_back(Matrix(f, tc.spots[i - 1].dim(), tc.spots[i].dim()));
      continue;
    }
    Matrix big = r.diffs[i].kronecker(Matrix::identity(f, n.dim));
    tc.diffs.push_back(tc.spots[i - 1].projection * big * tc.spots[i].complement);
  }
  return tc;
}

TensorComplex tensor_complex(const Resolution& r, const AModule& n, int upto) {
  return tensor_complex_with(r, n, upto, Matrix::identity(n.alg->field, n.alg->dim));
}

TorSpace tor(const AModule& mop, const AModule& n, int degree, int cap) {
  if (degree < 0) fail(errc::invalid_argument, "tor degree must be >= 0");
  Resolution r = free_resolution(mop, std::min(cap, degree + 1), false);
  require_terms(r, degree + 1);
  TensorComplex tc = tensor_complex(r, n, degree + 1);
  const Field& f = n.alg->field;

  int spot_dim = tc.spots[degree].dim();
  Matrix outgoing = degree >= 1 ? tc.diffs[degree - 1] : Matrix(f, 0, spot_dim);
  Matrix incoming = degree < static_cast<int>(tc.diffs.size())
                        ? tc.diffs[degree]
                        : Matrix(f, spot_dim, 0);
  HomologySpot spot = homology_spot(outgoing, incoming, spot_dim);

  TorSpace out;
  out.degree = degree;
  out.dim = spot.dim();
  Matrix basis(f, spot_dim, spot.dim());
  for (int j = 0; j < spot.dim(); ++j) basis.set_col(j, spot.cycles * spot.classes.complement.col(j));
  out.basis = std::move(basis);
  return out;
}

DimValue wdim(const AlgebraPtr& a, int cap) {
  auto dec_left = decomposition_of(a);
  auto aop = opposite(a);
  auto dec_right = decomposition_of(aop);

  bool any_capped = false;
  bool infinite = false;
  int max_nonzero = 0;

  for (const auto& s : dec_right->simples) {
    Resolution cert = free_resolution(s, cap, true);
    int need;
    int window_from = -1, window_to = -1;
    switch (cert.status) {
      case Resolution::Status::module_projective:
        need = 0;
        break;
      case Resolution::Status::syzygy_projective:
        need = cert.first_projective + 1;
        break;
      case Resolution::Status::periodic: {
        int d = cert.period_to - cert.period_from;
        window_from = cert.period_from + 2;
        window_to = cert.period_from + 1 + d;
        need = window_to;
        break;
      }
      case Resolution::Status::capped:
      default:
        need = cap;
        any_capped = true;
        break;
    }
    if (need == 0 && window_from < 0) {
      // projective right module: only Tor_0 can be nonzero
      for (const auto& t : dec_left->simples) {
        TorSpace t0 = tor(s, t, 0, 1);
        if (t0.dim > 0) max_nonzero = std::max(max_nonzero, 0);
      }
      continue;
    }
    Resolution full = free_resolution(s, std::max(need + 1, 1), false);
    for (const auto& t : dec_left->simples) {
      TensorComplex tc = tensor_complex(full, t, need + 1);
      int max_spot = static_cast<int>(tc.spots.size()) - 1;
      for (int deg = 0; deg <= need && deg <= max_spot; ++deg) {
        int spot_dim = tc.spots[deg].dim();
        Matrix outgoing = deg >= 1 ? tc.diffs[deg - 1] : Matrix(a->field, 0, spot_dim);
        Matrix incoming = deg < static_cast<int>(tc.diffs.size()) ? tc.diffs[deg]
                                                                  : Matrix(a->field, spot_dim, 0);
        int hdim = homology_spot(outgoing, incoming, spot_dim).dim();
        if (hdim > 0) {
          if (window_from >= 0 && deg >= window_from) infinite = true;
          max_nonzero = std::max(max_nonzero, deg);
        }
      }
    }
  }

  DimValue result = infinite ? DimValue::infinite()
                             : (any_capped ? DimValue::at_least(cap + 1) : DimValue::exact(max_nonzero));

  DimValue g = gldim(a, cap);
  if (result.certified() && g.certified() && !(result == g))
    fail(errc::internal_inconsistency,
         "weak dimension " + result.to_string() + " disagrees with global dimension " + g.to_string());
  return result;
}

bool is_flat(const AModule& m, int cap) {
  bool proj = is_projective(m).projective;
  // Tor₁(S, M) over the simple right modules must agree
  auto dec_right = decomposition_of(opposite(m.alg));
  bool tor_clean = true;
  for (const auto& s : dec_right->simples) {
    TorSpace t1 = tor(s, m, 1, std::max(2, cap));
    if (t1.dim != 0) tor_clean = false;
  }
  if (proj != tor_clean)
    fail(errc::internal_inconsistency, "flatness probes disagree (projective vs Tor)");
  return proj;
}

}  // namespace xprod
