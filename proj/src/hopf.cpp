#include "xprod/hopf.hpp"

namespace xprod {

Matrix HopfAlgebra::comul_matrix() const {
  const int d = dim();
  Matrix m(field(), d * d, d);
  for (const auto& e : comul) m.at(e.j * d + e.k, e.i) = field().add(m.at(e.j * d + e.k, e.i), e.c);
  return m;
}

std::vector<ComulEntry> HopfAlgebra::comul_of(const Matrix& x) const {
  std::vector<ComulEntry> out;
  for (const auto& e : comul) {
    if (sgn(x.at(e.i, 0)) == 0) continue;
    out.push_back({e.i, e.j, e.k, field().mul(e.c, x.at(e.i, 0))});
  }
  return out;
}

std::vector<HopfAlgebra::ComulSquaredTerm> HopfAlgebra::comul_squared_of(const Matrix& x) const {
  // (Δ⊗id)Δ: expand the first tensorand of each Δ(x) term again
  std::vector<ComulSquaredTerm> out;
  for (const auto& outer : comul_of(x))
    for (const auto& inner : comul)
      if (inner.i == outer.j && sgn(inner.c) != 0)
        out.push_back({inner.j, inner.k, outer.k, field().mul(outer.c, inner.c)});
  return out;
}

Scalar HopfAlgebra::counit_of(const Matrix& x) const {
  Scalar acc = field().zero();
  for (int i = 0; i < dim(); ++i) acc = field().add(acc, field().mul(counit.at(0, i), x.at(i, 0)));
  return acc;
}

bool HopfAlgebra::is_cocommutative() const {
  const int d = dim();
  Matrix c = comul_matrix();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (!(c.at(j * d + k, i) == c.at(k * d + j, i))) return false;
  return true;
}

ValidationResult validate_hopf(const HopfAlgebra& h) {
  const Algebra& a = *h.alg;
  const Field& f = a.field;
  const int d = a.dim;
  if (h.counit.rows() != 1 || h.counit.cols() != d || h.antipode.rows() != d || h.antipode.cols() != d)
    return ValidationResult::violated("shape", "counit or antipode has wrong shape");
  for (const auto& e : h.comul)
    if (e.i < 0 || e.i >= d || e.j < 0 || e.j >= d || e.k < 0 || e.k >= d)
      return ValidationResult::violated("shape", "comultiplication index out of range");

  Matrix c = h.comul_matrix();
  Matrix id = Matrix::identity(f, d);

  // coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ
  if (!(c.kronecker(id) * c == id.kronecker(c) * c))
    return ValidationResult::violated("coassociativity", "(Δ⊗id)Δ != (id⊗Δ)Δ");

  // counit laws
  if (!(h.counit.kronecker(id) * c == id) || !(id.kronecker(h.counit) * c == id))
    return ValidationResult::violated("counit", "(ε⊗id)Δ != id or (id⊗ε)Δ != id");

  // bialgebra: Δ and ε are algebra maps
  Matrix one_tensor_one = c * a.unit;
  Matrix expected_unit(f, d * d, 1);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      expected_unit.at(i * d + j, 0) = f.mul(a.unit.at(i, 0), a.unit.at(j, 0));
  if (!(one_tensor_one == expected_unit))
    return ValidationResult::violated("bialgebra", "Δ(1) != 1⊗1");
  if (!f.is_one(h.counit_of(a.unit))) return ValidationResult::violated("bialgebra", "ε(1) != 1");

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Matrix prod = a.multiply(a.basis_vector(i), a.basis_vector(j));
      // Δ(e_i e_j)
      Matrix lhs = c * prod;
      // Δ(e_i)Δ(e_j) in H⊗H
      Matrix rhs(f, d * d, 1);
      for (const auto& u : h.comul)
        if (u.i == i)
          for (const auto& v : h.comul)
            if (v.i == j) {
              Matrix pl = a.multiply(a.basis_vector(u.j), a.basis_vector(v.j));
              Matrix pr = a.multiply(a.basis_vector(u.k), a.basis_vector(v.k));
              Scalar cc = f.mul(u.c, v.c);
              for (int r = 0; r < d; ++r) {
                if (sgn(pl.at(r, 0)) == 0) continue;
                for (int s = 0; s < d; ++s)
                  rhs.at(r * d + s, 0) =
                      f.add(rhs.at(r * d + s, 0), f.mul(cc, f.mul(pl.at(r, 0), pr.at(s, 0))));
              }
            }
      if (!(lhs == rhs))
        return ValidationResult::violated("bialgebra",
                                          "Δ not multiplicative at (" + a.basis_names[i] + ", " + a.basis_names[j] + ")");
      Scalar el = h.counit_of(prod);
      Scalar er = f.mul(h.counit.at(0, i), h.counit.at(0, j));
      if (!f.eq(el, er))
        return ValidationResult::violated("bialgebra",
                                          "ε not multiplicative at (" + a.basis_names[i] + ", " + a.basis_names[j] + ")");
    }

  // antipode: Σ S(h₁)h₂ = ε(h)1 = Σ h₁S(h₂)
  for (int i = 0; i < d; ++i) {
    Matrix lhs(f, d, 1), rhs(f, d, 1);
    for (const auto& e : h.comul) {
      if (e.i != i) continue;
      lhs = lhs.add(a.multiply(h.antipode * a.basis_vector(e.j), a.basis_vector(e.k)).scaled(e.c));
      rhs = rhs.add(a.multiply(a.basis_vector(e.j), h.antipode * a.basis_vector(e.k)).scaled(e.c));
    }
    Matrix target = a.unit.scaled(h.counit.at(0, i));
    if (!(lhs == target))
      return ValidationResult::violated("antipode", "Σ S(h₁)h₂ != ε(h)1 at " + a.basis_names[i]);
    if (!(rhs == target))
      return ValidationResult::violated("antipode", "Σ h₁S(h₂) != ε(h)1 at " + a.basis_names[i]);
  }

  if (!inverse(h.antipode)) return ValidationResult::violated("antipode", "S is not invertible");
  return ValidationResult::certificate();
}

IntegralSpace integrals(const HopfAlgebra& h, IntegralSide side) {
  const Algebra& a = *h.alg;
  const Field& f = a.field;
  const int d = a.dim;
  // stack (L_h − ε(h)·id) t = 0 over basis h (or R_h for the right side)
  Matrix system(f, 0, d);
  for (int i = 0; i < d; ++i) {
    const Matrix& op = side == IntegralSide::left ? a.left_mult[i] : a.right_mult[i];
    Matrix block = op.sub(Matrix::identity(f, d).scaled(h.counit.at(0, i)));
    system = system.rows() == 0 ? block : system.vstack(block);
  }
  Matrix basis = kernel_basis(system);
  if (basis.cols() != 1)
    fail(errc::malformed_hopf,
         "integral space has dimension " + std::to_string(basis.cols()) + ", expected 1");
  IntegralSpace out{side, basis, std::nullopt};
  Scalar eps = h.counit_of(basis.col(0));
  if (!f.is_zero(eps)) out.normalized = basis.col(0).scaled(f.inv(eps));
  return out;
}

SemisimpleResult is_semisimple(const HopfAlgebra& h) {
  IntegralSpace ints = integrals(h, IntegralSide::right);
  return {ints.normalized.has_value(), ints.normalized};
}

HopfPtr dual_hopf(const HopfAlgebra& h) {
  const Algebra& a = *h.alg;
  const Field& f = a.field;
  const int d = a.dim;

  std::vector<std::string> names(d);
  for (int i = 0; i < d; ++i) names[i] = a.basis_names[i] + "*";
  // multiplication of H* is the transpose of Δ; its unit is ε
  Matrix unit = h.counit.transpose();
  std::vector<MultEntry> mult;
  for (const auto& e : h.comul) mult.push_back({e.j, e.k, e.i, e.c});
  Algebra dual_alg = Algebra::assemble(f, d, std::move(names), std::move(unit), std::move(mult));

  // comultiplication of H* is the transpose of the multiplication; counit is
  // evaluation at 1; antipode is Sᵀ
  HopfAlgebra dual;
  dual.alg = std::make_shared<Algebra>(std::move(dual_alg));
  for (const auto& e : a.mult) dual.comul.push_back({e.k, e.i, e.j, e.c});
  dual.counit = a.unit.transpose();
  dual.antipode = h.antipode.transpose();
  return std::make_shared<HopfAlgebra>(std::move(dual));
}

bool is_cosemisimple(const HopfAlgebra& h) { return is_semisimple(*dual_hopf(h)).semisimple; }

HopfPtr group_hopf(const CayleyTable& g, Field field) {
  AlgebraPtr alg = group_algebra(g, field);
  int e = group_identity(g);
  HopfAlgebra h;
  h.alg = alg;
  h.counit = Matrix(field, 1, g.n);
  h.antipode = Matrix(field, g.n, g.n);
  for (int i = 0; i < g.n; ++i) {
    h.comul.push_back({i, i, i, Scalar(1)});
    h.counit.at(0, i) = 1;
    for (int j = 0; j < g.n; ++j)
      if (g.t[i][j] == e) h.antipode.at(j, i) = 1;  // S(g) = g⁻¹
  }
  return std::make_shared<HopfAlgebra>(std::move(h));
}

HopfPtr trivial_hopf(Field field) { return group_hopf(CayleyTable::cyclic(1), field); }

HopfPtr sweedler_h4(Field field) {
  if (field.characteristic() == 2) fail(errc::invalid_argument, "Sweedler algebra needs char != 2");
  // basis order: 1, g, x, gx
  enum { one = 0, g = 1, x = 2, gx = 3 };
  std::vector<MultEntry> mult;
  auto put = [&mult, &field](int i, int j, int k, long c) {
    if (c != 0) mult.push_back({i, j, k, field.from_long(c)});
  };
  // g² = 1, x² = 0, xg = −gx, g·x = gx, g·gx = x, gx·g = −x, x·gx = 0, gx·x = 0, gx·gx = 0
  put(one, one, one, 1);
  put(one, g, g, 1);
  put(one, x, x, 1);
  put(one, gx, gx, 1);
  put(g, one, g, 1);
  put(x, one, x, 1);
  put(gx, one, gx, 1);
  put(g, g, one, 1);
  put(g, x, gx, 1);
  put(x, g, gx, -1);
  put(g, gx, x, 1);
  put(gx, g, x, -1);
  Matrix unit(field, 4, 1);
  unit.at(one, 0) = 1;
  Algebra alg = Algebra::assemble(field, 4, {"1", "g", "x", "gx"}, std::move(unit), std::move(mult));

  HopfAlgebra h;
  h.alg = std::make_shared<Algebra>(std::move(alg));
  // Δ1 = 1⊗1, Δg = g⊗g, Δx = x⊗1 + g⊗x, Δ(gx) = gx⊗g + 1⊗gx
  h.comul = {{one, one, one, Scalar(1)},
             {g, g, g, Scalar(1)},
             {x, x, one, Scalar(1)},
             {x, g, x, Scalar(1)},
             {gx, gx, g, Scalar(1)},
             {gx, one, gx, Scalar(1)}};
  h.counit = Matrix(field, 1, 4);
  h.counit.at(0, one) = 1;
  h.counit.at(0, g) = 1;
  // S(1) = 1, S(g) = g, S(x) = −gx, S(gx) = x
  h.antipode = Matrix(field, 4, 4);
  h.antipode.at(one, one) = 1;
  h.antipode.at(g, g) = 1;
  h.antipode.at(gx, x) = field.from_long(-1);
  h.antipode.at(x, gx) = 1;
  return std::make_shared<HopfAlgebra>(std::move(h));
}

}  // namespace xprod
