#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xprod/comparison.hpp"
#include "xprod/homology.hpp"

using namespace xprod;

namespace {

CrossedSystem skew_dual_numbers() {
  Field q(0);
  auto r = quotient_poly_algebra({Scalar(0), Scalar(0)}, q);
  Matrix sign = Matrix::identity(q, 2);
  sign.at(1, 1) = Scalar(-1);
  return skew_group_ring(r, CayleyTable::cyclic(2), {Matrix::identity(q, 2), sign}, q);
}

CrossedSystem skew_qq() {
  Field q(0);
  auto r = direct_sum(base_field_algebra(q), base_field_algebra(q));
  Matrix swap(q, 2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  return skew_group_ring(r, CayleyTable::cyclic(2), {Matrix::identity(q, 2), swap}, q);
}

CrossedSystem twisted_c2(long sigma_gg) {
  Field q(0);
  auto r = base_field_algebra(q);
  auto h = group_hopf(CayleyTable::cyclic(2), q);
  std::vector<ActEntry> act = {{0, 0, 0, Scalar(1)}, {1, 0, 0, Scalar(1)}};
  std::vector<CocEntry> sig = {
      {0, 0, 0, Scalar(1)}, {0, 1, 0, Scalar(1)}, {1, 0, 0, Scalar(1)}, {1, 1, 0, Scalar(sigma_gg)}};
  return build_crossed(MeasuringAction::assemble(h, r, std::move(act)), sig);
}

}  // namespace

TEST_CASE("trivial action and cocycle collapse to the tensor product") {
  Field q(0);
  auto r = quotient_poly_algebra({Scalar(0), Scalar(0)}, q);
  auto h = group_hopf(CayleyTable::cyclic(2), q);
  CrossedSystem sys = trivial_system(r, h);
  CHECK(sys.product_dim() == 4);
  CHECK(validate_crossed(sys));
  // (a#h)(b#g) = ab # hg on basis elements
  const int dh = 2;
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < 2; ++i)
      for (int b = 0; b < 2; ++b)
        for (int j = 0; j < 2; ++j) {
          Matrix lhs = sys.product->multiply(sys.product->basis_vector(smash_index(a, i, dh)),
                                             sys.product->basis_vector(smash_index(b, j, dh)));
          Matrix ab = r->multiply(r->basis_vector(a), r->basis_vector(b));
          Matrix hg = h->alg->multiply(h->alg->basis_vector(i), h->alg->basis_vector(j));
          Matrix rhs(q, 4, 1);
          for (int t = 0; t < 2; ++t)
            for (int k = 0; k < 2; ++k)
              rhs.at(smash_index(t, k, dh), 0) = q.mul(ab.at(t, 0), hg.at(k, 0));
          CHECK(lhs == rhs);
        }
}

TEST_CASE("the swap action on Q+Q yields a semisimple 4-dimensional product") {
  CrossedSystem sys = skew_qq();
  CHECK(sys.product_dim() == 4);
  CHECK(validate_crossed(sys));
  CHECK(gldim(sys.product, 8) == DimValue::exact(0));
  auto dec = decomposition_of(sys.product);
  REQUIRE(dec->simples.size() == 1);
  CHECK(dec->simples[0].dim == 2);  // a 2x2 matrix algebra
}

TEST_CASE("the twisted C2 product matches the polynomial quotient presentation") {
  CrossedSystem tw = twisted_c2(2);
  auto sqrt2 = quotient_poly_algebra({Scalar(-2), Scalar(0)}, Field(0));
  // basis 1#1, 1#g against 1, x: structure constants must agree
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(tw.product->multiply(tw.product->basis_vector(i), tw.product->basis_vector(j)) ==
            sqrt2->multiply(sqrt2->basis_vector(i), sqrt2->basis_vector(j)));
  CHECK(gldim(tw.product, 8) == DimValue::exact(0));

  CrossedSystem split = twisted_c2(1);
  auto kc2 = group_algebra(CayleyTable::cyclic(2), Field(0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(split.product->multiply(split.product->basis_vector(i), split.product->basis_vector(j)) ==
            kc2->multiply(kc2->basis_vector(i), kc2->basis_vector(j)));
}

TEST_CASE("build rejects bad inputs with the named errors") {
  Field q(0);
  auto r = direct_sum(base_field_algebra(q), base_field_algebra(q));
  auto h = group_hopf(CayleyTable::cyclic(2), q);

  // g acting by a non-multiplicative map is not measuring
  std::vector<ActEntry> bad_act = {{0, 0, 0, Scalar(1)}, {0, 1, 1, Scalar(1)},
                                   {1, 0, 0, Scalar(1)}, {1, 0, 1, Scalar(1)},
                                   {1, 1, 0, Scalar(1)}};
  std::vector<CocEntry> triv = {{0, 0, 0, Scalar(1)}, {0, 0, 1, Scalar(1)},
                                {0, 1, 0, Scalar(1)}, {0, 1, 1, Scalar(1)},
                                {1, 0, 0, Scalar(1)}, {1, 0, 1, Scalar(1)},
                                {1, 1, 0, Scalar(1)}, {1, 1, 1, Scalar(1)}};
  try {
    build_crossed(MeasuringAction::assemble(h, r, bad_act), triv);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_measuring);
  }

  // a cocycle vanishing at (g,g) has no convolution inverse over Q
  auto k = base_field_algebra(q);
  std::vector<ActEntry> triv_act = {{0, 0, 0, Scalar(1)}, {1, 0, 0, Scalar(1)}};
  std::vector<CocEntry> degenerate = {{0, 0, 0, Scalar(1)}, {0, 1, 0, Scalar(1)}, {1, 0, 0, Scalar(1)}};
  try {
    build_crossed(MeasuringAction::assemble(h, k, triv_act), degenerate);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_invertible_cocycle);
  }

  // a non-normal cocycle is rejected before building
  std::vector<CocEntry> nonnormal = {{0, 0, 0, Scalar(2)}, {0, 1, 0, Scalar(1)},
                                     {1, 0, 0, Scalar(1)}, {1, 1, 0, Scalar(1)}};
  try {
    build_crossed(MeasuringAction::assemble(h, k, triv_act), nonnormal);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_associative);
  }
}

TEST_CASE("hand-edited systems are caught by validate_crossed") {
  CrossedSystem sys = skew_qq();
  CHECK(validate_crossed(sys));

  CrossedSystem bent = sys;
  Matrix g_inv = bent.gamma_inv;
  g_inv.at(0, 1) = Field(0).add(g_inv.at(0, 1), Scalar(1));
  bent.gamma_inv = g_inv;
  auto v = validate_crossed(bent);
  CHECK_FALSE(v.ok);
  CHECK(v.violation == "convolution identity");

  // perturbing one structure constant of the product breaks associativity or
  // one of the product laws
  CrossedSystem bent2 = sys;
  Algebra broken = *sys.product;
  broken.mult.push_back({1, 1, 0, Scalar(1)});
  bent2.product = std::make_shared<Algebra>(Algebra::assemble(
      broken.field, broken.dim, broken.basis_names, broken.unit, broken.mult));
  CHECK_FALSE(validate_crossed(bent2).ok);
}

TEST_CASE("skew group ring rejections") {
  Field q(0);
  auto r = direct_sum(base_field_algebra(q), base_field_algebra(q));
  Matrix swap(q, 2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  Matrix not_mult(q, 2, 2);
  not_mult.at(0, 0) = 1;
  not_mult.at(1, 0) = 1;  // sends both idempotents onto the first
  try {
    skew_group_ring(r, CayleyTable::cyclic(2), {Matrix::identity(q, 2), not_mult}, q);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_automorphism);
  }
  try {
    // valid automorphisms that do not satisfy g² = identity
    skew_group_ring(r, CayleyTable::cyclic(4),
                    {Matrix::identity(q, 2), swap, swap, Matrix::identity(q, 2)}, q);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_group_action);
  }
}

TEST_CASE("restriction of the regular module is free of rank dim H") {
  for (CrossedSystem sys : {skew_qq(), skew_dual_numbers(), twisted_c2(2)}) {
    AModule restricted = restrict_module(regular_module(sys.product), sys.embed);
    AModule free_model = free_module(sys.action.R, sys.H().dim());
    CHECK(restricted.dim == free_model.dim);
    auto iso = module_iso(restricted, free_model);
    CHECK(iso.verdict == IsoResult::Verdict::iso);
    CHECK(is_projective(restricted).projective);
  }
}

TEST_CASE("projectives restrict to projectives on both sides") {
  for (CrossedSystem sys : {skew_qq(), skew_dual_numbers()}) {
    auto dec = decomposition_of(sys.product);
    for (const auto& p : dec->projectives)
      CHECK(is_projective(restrict_module(p, sys.embed)).projective);
    // right modules through the opposite algebras
    AlgebraPtr pop = opposite(sys.product);
    AlgebraMap embed_op{opposite(sys.action.R), pop, sys.embed.matrix};
    for (const auto& p : decomposition_of(pop)->projectives)
      CHECK(is_projective(restrict_module(p, embed_op)).projective);
  }
}

TEST_CASE("projective dimension never grows under restriction") {
  CrossedSystem sys = skew_dual_numbers();
  auto dec = decomposition_of(sys.product);
  for (const auto& s : dec->simples) {
    DimValue over_product = pd(s, 8);
    DimValue over_r = pd(restrict_module(s, sys.embed), 8);
    REQUIRE(over_product.certified());
    REQUIRE(over_r.certified());
    bool le = over_product.is_infinite() ? over_r.is_infinite() || true
                                         : (!over_r.is_infinite() && over_r.n <= over_product.n) ||
                                               over_r.is_infinite() == false;
    // pd_R(M) ≤ pd_{product}(M): infinite on the right dominates everything
    if (over_product.is_infinite()) {
      CHECK(true);
    } else {
      REQUIRE_FALSE(over_r.is_infinite());
      CHECK(over_r.n <= over_product.n);
    }
    (void)le;
  }
}

TEST_CASE("multiplication rule specializations") {
  CrossedSystem sys = skew_dual_numbers();
  const Algebra& p = *sys.product;
  const Algebra& r = sys.R();
  const HopfAlgebra& h = sys.H();
  const int dh = h.dim();
  // (a#h)(b#1) = Σ a(h₁·b) # h₂
  for (int a = 0; a < r.dim; ++a)
    for (int i = 0; i < dh; ++i)
      for (int b = 0; b < r.dim; ++b) {
        Matrix lhs = p.multiply(p.basis_vector(smash_index(a, i, dh)),
                                sys.embed.matrix.col(b));
        Matrix rhs(p.field, p.dim, 1);
        for (const auto& ce : h.comul)
          if (ce.i == i) {
            Matrix rpart = r.multiply(r.basis_vector(a), sys.action.ops[ce.j] * r.basis_vector(b));
            for (int t = 0; t < r.dim; ++t)
              rhs.at(smash_index(t, ce.k, dh), 0) =
                  p.field.add(rhs.at(smash_index(t, ce.k, dh), 0), p.field.mul(ce.c, rpart.at(t, 0)));
          }
        CHECK(lhs == rhs);
      }
  // with trivial σ, (1#h)(1#g) = 1#hg
  for (int i = 0; i < dh; ++i)
    for (int j = 0; j < dh; ++j) {
      Matrix lhs = p.multiply(sys.gamma.col(i), sys.gamma.col(j));
      Matrix hg = h.alg->multiply(h.alg->basis_vector(i), h.alg->basis_vector(j));
      Matrix rhs(p.field, p.dim, 1);
      for (int k = 0; k < dh; ++k)
        for (int t = 0; t < r.dim; ++t)
          rhs.at(smash_index(t, k, dh), 0) = p.field.mul(r.unit.at(t, 0), hg.at(k, 0));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("restricted resolutions stay projective term by term") {
  CrossedSystem sys = skew_dual_numbers();
  auto dec = decomposition_of(sys.product);
  Resolution r = free_resolution(dec->simples[0], 2, false);
  for (size_t i = 0; i < r.terms.size(); ++i) {
    AModule term_r = restrict_module(r.terms[i], sys.embed);
    CHECK(is_projective(term_r).projective);
  }
  // the restricted complex is the same family of k-linear maps, so exactness
  // is inherited on the nose
  for (size_t n = 1; n < r.terms.size(); ++n)
    CHECK(rank(r.diffs[n]) == r.syzygies[n - 1].cols());
}

TEST_CASE("right-module projective dimension never grows under restriction") {
  CrossedSystem sys = skew_dual_numbers();
  AlgebraPtr pop = opposite(sys.product);
  AlgebraMap embed_op{opposite(sys.action.R), pop, sys.embed.matrix};
  for (const auto& s : decomposition_of(pop)->simples) {
    DimValue over_product = pd(s, 8);
    DimValue over_r = pd(restrict_module(s, embed_op), 8);
    REQUIRE(over_product.certified());
    REQUIRE(over_r.certified());
    if (!over_product.is_infinite()) {
      REQUIRE_FALSE(over_r.is_infinite());
      CHECK(over_r.n <= over_product.n);
    }
  }
}

TEST_CASE("averaging: identity, equivariant fixed points, linearity") {
  CrossedSystem sys = skew_dual_numbers();
  AModule reg = regular_module(sys.product);
  Matrix id = Matrix::identity(sys.product->field, reg.dim);
  CHECK(average_left(sys, reg, reg, id) == id);

  for (const auto& h : hom_space(reg, reg))
    CHECK(average_left(sys, reg, reg, h) == h);

  // an R-linear but non-equivariant map gets projected, and the projection
  // is linear
  AModule reg_r = restrict_module(reg, sys.embed);
  auto rbasis = hom_space(reg_r, reg_r);
  REQUIRE(rbasis.size() > hom_space(reg, reg).size());
  Matrix f = rbasis[0], g = rbasis[1];
  Matrix av_f = average_left(sys, reg, reg, f);
  Matrix av_g = average_left(sys, reg, reg, g);
  CHECK(average_left(sys, reg, reg, f.add(g)) == av_f.add(av_g));
  CHECK(average_left(sys, reg, reg, av_f) == av_f);

  // right-module mirror over the opposite product
  AModule reg_op = regular_module(opposite(sys.product));
  Matrix id_op = Matrix::identity(sys.product->field, reg_op.dim);
  CHECK(average_right(sys, reg_op, reg_op, id_op) == id_op);
}

TEST_CASE("averaging rejections") {
  CrossedSystem h4sys = trivial_system(base_field_algebra(Field(0)), sweedler_h4(Field(0)));
  AModule reg = regular_module(h4sys.product);
  Matrix id = Matrix::identity(Field(0), reg.dim);
  try {
    average_left(h4sys, reg, reg, id);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_semisimple);
  }

  CrossedSystem sys = skew_dual_numbers();
  AModule reg2 = regular_module(sys.product);
  Matrix not_linear(sys.product->field, reg2.dim, reg2.dim);
  not_linear.at(0, 1) = 1;
  try {
    average_left(sys, reg2, reg2, not_linear);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_r_linear);
  }
}

TEST_CASE("double smash: dimensions, validity and the dimension chain") {
  CrossedSystem tiny = twisted_c2(2);
  CrossedSystem dd = smash_with_dual(tiny);
  CHECK(dd.product_dim() == 4);  // dim R · (dim H)²
  CHECK(validate_crossed(dd));

  CrossedSystem sys = skew_qq();
  CrossedSystem dd2 = smash_with_dual(sys);
  CHECK(dd2.product_dim() == 8);
  CHECK(validate_crossed(dd2));
  CHECK(gldim(dd2.product, 8) == gldim(sys.action.R, 8));
}

TEST_CASE("ext restriction is injective with semisimple H") {
  CrossedSystem sys = skew_dual_numbers();
  auto dec = decomposition_of(sys.product);
  for (const auto& m : dec->simples)
    for (const auto& n : dec->simples)
      for (int deg = 0; deg <= 3; ++deg) {
        ExtRestriction er = ext_restriction_map(sys, m, n, deg, 8);
        CHECK(er.injective);
        CHECK(rank(er.map) == er.dim_product);
      }
  // degree 0 is the literal inclusion of hom spaces
  ExtRestriction e0 = ext_restriction_map(sys, dec->simples[0], dec->simples[0], 0, 8);
  CHECK(e0.dim_product == static_cast<int>(hom_space(dec->simples[0], dec->simples[0]).size()));
}

TEST_CASE("ext restriction requires a semisimple H") {
  CrossedSystem h4sys = trivial_system(base_field_algebra(Field(0)), sweedler_h4(Field(0)));
  AModule reg = regular_module(h4sys.product);
  CHECK_THROWS_AS(ext_restriction_map(h4sys, reg, reg, 0, 4), Error);
}

TEST_CASE("tor comparison: chain map always, isomorphism for trivial H") {
  CrossedSystem sys = skew_dual_numbers();
  auto left = decomposition_of(opposite(sys.product))->simples;
  auto right = decomposition_of(sys.product)->simples;
  for (int deg = 0; deg <= 2; ++deg) {
    TorComparison tc = tor_comparison_map(sys, left[0], right[0], deg, 8);
    CHECK(tc.chain_map_verified);
    CHECK(tc.map.rows() == tc.dim_product);
    CHECK(tc.map.cols() == tc.dim_restricted);
  }

  CrossedSystem triv = trivial_system(upper_triangular(2, Field(0)), trivial_hopf(Field(0)));
  auto tl = decomposition_of(opposite(triv.product))->simples;
  auto tr = decomposition_of(triv.product)->simples;
  for (const auto& m : tl)
    for (const auto& n : tr)
      for (int deg = 0; deg <= 2; ++deg) {
        TorComparison tc = tor_comparison_map(triv, m, n, deg, 8);
        CHECK(tc.dim_restricted == tc.dim_product);
        CHECK(rank(tc.map) == tc.dim_product);
      }
}
