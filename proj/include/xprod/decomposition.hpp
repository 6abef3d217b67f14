#pragma once

#include "xprod/module.hpp"

namespace xprod {

// Radical, simple modules and indecomposable projectives of an algebra.
// Computed once per algebra and cached; everything here is deterministic.
struct Decomposition {
  AlgebraPtr alg;
  Matrix radical;           // dim×r echelon basis of J
  AlgebraPtr quotient;      // Ā = A/J on a complement basis
  AlgebraMap onto_quotient; // A → Ā
  std::vector<AModule> simples;  // pairwise non-isomorphic, over A, sorted
  std::vector<Matrix> idempotents;   // primitive orthogonal, summing to 1
  std::vector<AModule> projectives;  // P_t = A·e_t
  std::vector<int> projective_top;   // index into simples
};

using DecompositionPtr = std::shared_ptr<const Decomposition>;

// Throws UnsupportedCharacteristic when the trace-form radical cannot be
// certified (its kernel fails the nilpotency check). The kernel of the trace
// form always contains the radical; verified nilpotency makes them equal in
// any characteristic.
DecompositionPtr decomposition_of(const AlgebraPtr& a);

// Pure radical computation (trace form kernel + nilpotency certificate).
Matrix radical_basis(const Algebra& a);

struct StripResult {
  AModule reduced;
  std::vector<int> stripped;  // indices into dec.projectives, with multiplicity
};
// Split off projective direct summands until none remain. The reduced module
// represents the stable (projective-free) part; pd and syzygy periodicity are
// read off it.
StripResult strip_projective_summands(const AModule& m, const Decomposition& dec);

// split a semisimple module into simple submodules (bases within m)
std::vector<Matrix> split_semisimple(const AModule& m);

}  // namespace xprod
