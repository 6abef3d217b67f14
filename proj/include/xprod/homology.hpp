#pragma once

#include "xprod/decomposition.hpp"

namespace xprod {

// exact / certified-infinite / capped dimension value
struct DimValue {
  enum class Kind { exact, infinite, at_least } kind = Kind::exact;
  int n = 0;

  static DimValue exact(int v) { return {Kind::exact, v}; }
  static DimValue infinite() { return {Kind::infinite, 0}; }
  static DimValue at_least(int v) { return {Kind::at_least, v}; }

  bool certified() const { return kind != Kind::at_least; }
  bool is_infinite() const { return kind == Kind::infinite; }
  std::string to_string() const;
  bool operator==(const DimValue& o) const { return kind == o.kind && (kind != Kind::exact || n == o.n) && (kind != Kind::at_least || n == o.n); }
};

// Free resolution ... → F_1 → F_0 → M → 0 with syzygy tracking. Terms are
// free; periodicity and projectivity are detected on the syzygies with their
// projective direct summands split off (the stable syzygy), which is what
// makes the infinite-dimension certificates fire for non-local algebras.
struct Resolution {
  AModule module;
  std::vector<AModule> terms;      // F_0 .. F_L
  std::vector<int> ranks;          // free ranks of the terms
  std::vector<Matrix> diffs;       // diffs[0]: F_0 → M; diffs[n]: F_n → F_{n−1}
  std::vector<Matrix> syzygies;    // K_n ⊂ F_n, echelon columns
  std::vector<AModule> syzygy_modules;
  std::vector<AModule> reduced;    // K_n with projective summands stripped

  enum class Status { module_projective, syzygy_projective, periodic, capped };
  Status status = Status::capped;
  int first_projective = -1;       // K_n projective (status syzygy_projective)
  int period_from = -1, period_to = -1;
  Matrix period_witness;           // iso reduced[period_to] → reduced[period_from]
  int exhausted_at = -1;           // K_e = 0; all later terms vanish
  int cap = 0;

  bool has_certificate() const { return status != Status::capped; }
};

// stop_at_certificate: stop as soon as projectivity or periodicity is known
// (enough for pd); otherwise build all cap+1 terms (needed for Ext/Tor).
Resolution free_resolution(const AModule& m, int cap, bool stop_at_certificate = true);

DimValue pd(const AModule& m, int cap);
DimValue gldim(const AlgebraPtr& a, int cap);
// max degree of a nonvanishing Tor over pairs of simples; must agree with
// gldim whenever both are certified (artinian collapse) — a mismatch throws
// InternalInconsistency.
DimValue wdim(const AlgebraPtr& a, int cap);

struct ExtSpace {
  int degree = 0;
  int dim = 0;
  std::vector<Matrix> basis;  // cocycle representatives F_n → N as dimN×dimF_n matrices
};
ExtSpace ext(const AModule& m, const AModule& n, int degree, int cap);

struct TorSpace {
  int degree = 0;
  int dim = 0;
  Matrix basis;  // homology class representatives, columns in T_degree coordinates
};
// mop is a right module presented as a left module over opposite(algebra)
TorSpace tor(const AModule& mop, const AModule& n, int degree, int cap);

// ---- low-level complex plumbing shared with the comparison maps ----

// homology at a spot: ker(outgoing)/im(incoming)
struct HomologySpot {
  int space_dim = 0;
  Matrix cycles;       // ambient×z
  QuotientBasis classes;  // of the boundary image inside cycle coordinates
  int dim() const { return classes.dim(); }
  // homology class of an ambient cycle vector
  Matrix class_of(const Matrix& cycle) const;
};
HomologySpot homology_spot(const Matrix& outgoing, const Matrix& incoming, int space_dim);

// Hom_A(F_•, N) with the free-source identification Hom(A^g, N) = N^g.
struct HomComplex {
  std::vector<int> space_dims;   // g_i · dim N
  std::vector<Matrix> deltas;    // deltas[i]: C^{i−1} → C^i for i ≥ 1
};
HomComplex hom_complex(const Resolution& r, const AModule& n, int upto);

// F_• ⊗_A N as quotients of F_i ⊗_k N by the balancing subspace
struct TensorComplex {
  std::vector<QuotientBasis> spots;  // per term
  std::vector<Matrix> diffs;         // diffs[i]: T_i → T_{i−1}, i ≥ 1
};
TensorComplex tensor_complex(const Resolution& r, const AModule& n, int upto);
// balancing restricted to the span of the supplied elements (e.g. an embedded
// subalgebra), giving ⊗ over that subalgebra
TensorComplex tensor_complex_with(const Resolution& r, const AModule& n, int upto,
                                  const Matrix& balancing_elements);

// algebra-coefficient slice s of a vector in A^g
Matrix free_slice(const Matrix& v, int s, int algebra_dim);

}  // namespace xprod
