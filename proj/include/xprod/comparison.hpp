#pragma once

#include "xprod/crossed.hpp"
#include "xprod/homology.hpp"

namespace xprod {

// Restriction of Ext along the embedding R → R#σH: the equivariant Hom
// complex of a free resolution of M over the product includes into the
// R-linear Hom complex of the same (restricted) resolution; the induced map
// on cohomology is computed explicitly, with its rank. With H semisimple the
// map must be injective.
struct ExtRestriction {
  int degree = 0;
  int dim_product = 0;    // dim Ext over the crossed product
  int dim_restricted = 0; // dim Ext over R
  Matrix map;             // dim_restricted × dim_product on cohomology classes
  bool injective = false;
};

ExtRestriction ext_restriction_map(const CrossedSystem& sys, const AModule& m, const AModule& n,
                                   int degree, int cap);

// Canonical surjections P_i ⊗_R N ↠ P_i ⊗_{R#σH} N assemble into a chain map
// ξ; the induced map on homology compares Tor over R with Tor over the
// product. No semisimplicity needed.
struct TorComparison {
  int degree = 0;
  int dim_restricted = 0;  // Tor over R
  int dim_product = 0;     // Tor over the crossed product
  Matrix map;              // dim_product × dim_restricted
  bool chain_map_verified = false;
};

TorComparison tor_comparison_map(const CrossedSystem& sys, const AModule& mop, const AModule& n,
                                 int degree, int cap);

}  // namespace xprod
