#pragma once

#include "xprod/hopf.hpp"
#include "xprod/module.hpp"

namespace xprod {

// h·e_r = Σ c e_{r'}
struct ActEntry {
  int h, r, rp;
  Scalar c;
};

// σ(e_h, e_g) = Σ c e_r
struct CocEntry {
  int h, g, r;
  Scalar c;
};

struct MeasuringAction {
  HopfPtr H;
  AlgebraPtr R;
  std::vector<ActEntry> entries;
  std::vector<Matrix> ops;  // per H basis element, dimR×dimR

  static MeasuringAction assemble(HopfPtr h, AlgebraPtr r, std::vector<ActEntry> entries);
  // operator of an arbitrary element of H
  Matrix act_of(const Matrix& hvec) const;
};

// h·(bc) = Σ(h₁·b)(h₂·c), h·1 = ε(h)1, 1·b = b
ValidationResult validate_action(const MeasuringAction& a);

struct CrossedSystem {
  MeasuringAction action;
  Matrix sigma;      // dimR × dimH², column h·dimH+g holds σ(e_h, e_g)
  Matrix sigma_inv;  // convolution inverse, same layout
  AlgebraPtr product;
  AlgebraMap embed;  // R → product, a ↦ a#1
  Matrix gamma;      // dimP × dimH, h ↦ 1#h
  Matrix gamma_inv;  // convolution inverse of gamma

  const Algebra& R() const { return *action.R; }
  const HopfAlgebra& H() const { return *action.H; }
  int product_dim() const { return product->dim; }
  Matrix sigma_of(int h, int g) const { return sigma.col(h * H().dim() + g); }
};

// Crossed-product multiplication over all basis pairs:
//   (a#h)(b#g) = Σ a (h₁·b) σ(h₂,g₁) # h₃g₂
// σ⁻¹ and γ⁻¹ come from linear convolution systems; inconsistency of the σ
// system is exactly the NotInvertibleCocycle error, and a failed associativity
// or unit check on the result is NotAssociative with the failing triple.
CrossedSystem build_crossed(const MeasuringAction& action, const std::vector<CocEntry>& sigma);

ValidationResult validate_crossed(const CrossedSystem& sys);

// Lemma-style averaging of an R-linear map into an equivariant one, via the
// normalized right integral: f ↦ Σ γ⁻¹(t₁) f(γ(t₂) m). NotSemisimple without
// a normalized integral, NotRLinear if f does not commute with embedded R.
Matrix average_left(const CrossedSystem& sys, const AModule& m, const AModule& n, const Matrix& f);

// Right-module version, f ↦ Σ f(m γ⁻¹(t₁)) γ(t₂); modules are presented as
// left modules over opposite(product).
Matrix average_right(const CrossedSystem& sys, const AModule& mop, const AModule& nop, const Matrix& f);

// (R#σH)#H* with the canonical H*-action f·(a#h) = Σ (a#h₁)·f(h₂) and the
// trivial cocycle.
CrossedSystem smash_with_dual(const CrossedSystem& sys);

// Skew group ring R*G: H = kG acting by automorphisms, trivial σ.
CrossedSystem skew_group_ring(const AlgebraPtr& r, const CayleyTable& g,
                              const std::vector<Matrix>& automorphisms, Field field);

// trivial action (h·b = ε(h)b) and trivial cocycle: plain tensor algebra R⊗H
CrossedSystem trivial_system(const AlgebraPtr& r, const HopfPtr& h);

// product basis index for a#h with the R-major convention
inline int smash_index(int r, int h, int dim_h) { return r * dim_h + h; }

}  // namespace xprod
