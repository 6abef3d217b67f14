#pragma once

#include "xprod/algebra.hpp"

namespace xprod {

// Finite-dimensional left module: one action matrix per algebra basis element.
struct AModule {
  AlgebraPtr alg;
  int dim = 0;
  std::vector<Matrix> action;

  // action of an arbitrary algebra element given by its coefficient vector
  Matrix act(const Matrix& algebra_element) const;
};

// ρ(e_i)ρ(e_j) = Σ c[i][j][k] ρ(e_k) and ρ(1) = id
ValidationResult validate_module(const AModule& m);

AModule regular_module(const AlgebraPtr& a);
AModule zero_module(const AlgebraPtr& a);
AModule free_module(const AlgebraPtr& a, int rank);
AModule direct_sum_modules(const AModule& a, const AModule& b);

// View a module over B as a module over A along φ: A → B.
AModule restrict_module(const AModule& m, const AlgebraMap& phi);

// Transposed action over the opposite algebra.
AModule dual_module(const AModule& m);

// Submodule spanned by the given independent columns (must be invariant).
AModule submodule(const AModule& m, const Matrix& basis);
// Quotient by an invariant subspace, together with the maps.
struct QuotientModule {
  AModule module;
  Matrix projection;  // q×dimM
  Matrix section;     // dimM×q
};
QuotientModule quotient_module(const AModule& m, const Matrix& sub);

// Smallest invariant subspace containing the given columns; echelon basis.
Matrix spin(const AModule& m, const Matrix& vectors);

struct ModuleMap {
  AModule source, target;
  Matrix matrix;
};

bool is_module_map(const AModule& m, const AModule& n, const Matrix& f);

// Free cover on a greedy generating set (seeded with J·M when the radical is
// supplied, which keeps the cover close to minimal).
struct FreeCover {
  AModule free;
  Matrix surjection;  // dimM × dimF
  Matrix generators;  // dimM × g
  Matrix kernel;      // dimF × dimK echelon basis
  AModule kernel_module;
  Matrix preimages;   // dimF × dimM, surjection∘preimages = id
};
FreeCover free_cover(const AModule& m, const Matrix* radical = nullptr);

// Deterministic basis of the intertwiner space Hom(M, N), as dimN×dimM
// matrices. Solved through a free presentation of M so that free sources cost
// nothing.
std::vector<Matrix> hom_space(const AModule& m, const AModule& n);

struct ProjectivityResult {
  bool projective = false;
  std::optional<Matrix> splitting;  // s with surjection∘s = id
};
// Splitting of the free cover as a linear feasibility problem.
ProjectivityResult is_projective(const AModule& m);

bool is_injective(const AModule& m);

// flat = projective for finite-dimensional modules over artinian algebras;
// cross-checked against the Tor₁ probe (both must agree). Defined with the
// homology engine.
bool is_flat(const AModule& m, int cap = 8);

struct IsoResult {
  enum class Verdict { iso, not_iso, indeterminate } verdict;
  std::optional<Matrix> witness;
};
// Search for an invertible intertwiner: basis elements first, then small
// integer combinations. Failure with a nonzero hom space is reported
// indeterminate, never asserted non-isomorphic.
IsoResult module_iso(const AModule& m, const AModule& n);

std::string module_signature(const AModule& m);  // deterministic sort key

}  // namespace xprod
