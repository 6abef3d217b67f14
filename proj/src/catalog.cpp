#include "xprod/catalog.hpp"

#include <mutex>

namespace xprod {

namespace {

CrossedSystem twisted_c2(const Scalar& sigma_gg) {
  Field q(0);
  auto r = base_field_algebra(q);
  auto h = group_hopf(CayleyTable::cyclic(2), q);
  std::vector<ActEntry> act = {{0, 0, 0, Scalar(1)}, {1, 0, 0, Scalar(1)}};
  std::vector<CocEntry> sig = {
      {0, 0, 0, Scalar(1)}, {0, 1, 0, Scalar(1)}, {1, 0, 0, Scalar(1)}, {1, 1, 0, sigma_gg}};
  return build_crossed(MeasuringAction::assemble(h, r, std::move(act)), sig);
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> cat;
  Field q(0), f2(2), f7(7);

  auto all_pass = [] {
    return std::map<std::string, std::string>{
        {"construction", "Pass"}, {"thm2.4", "Pass"},  {"thm2.5", "Pass"},
        {"cor2.6", "Pass"},       {"cor2.8", "Pass"},  {"cor2.9", "Pass"},
        {"averaging", "Pass"},    {"ext-embed", "Pass"}, {"tor-map", "Pass"}};
  };
  auto hypothesis_skipped = [] {
    return std::map<std::string, std::string>{
        {"construction", "Pass"},          {"thm2.4", "SkippedHypothesis"},
        {"thm2.5", "SkippedHypothesis"},   {"cor2.6", "SkippedHypothesis"},
        {"cor2.8", "SkippedHypothesis"},   {"cor2.9", "SkippedHypothesis"},
        {"averaging", "SkippedHypothesis"}, {"ext-embed", "SkippedHypothesis"},
        {"tor-map", "Pass"}};
  };

  {
    CatalogEntry e;
    e.name = "trivial_tensor";
    e.description = "Q+Q tensored with the group algebra of C2 (trivial action and cocycle)";
    e.tags = {"semisimple", "cosemisimple"};
    e.system = trivial_system(direct_sum(base_field_algebra(q), base_field_algebra(q)),
                              group_hopf(CayleyTable::cyclic(2), q));
    e.expected = all_pass();
    e.expected["gldim_R"] = "0";
    e.expected["gldim_product"] = "0";
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "skew_c2_qq";
    e.description = "C2 swapping the two factors of Q+Q; the product is a 2x2 matrix algebra";
    e.tags = {"semisimple", "cosemisimple"};
    auto r = direct_sum(base_field_algebra(q), base_field_algebra(q));
    Matrix swap(q, 2, 2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    e.system = skew_group_ring(r, CayleyTable::cyclic(2), {Matrix::identity(q, 2), swap}, q);
    e.expected = all_pass();
    e.expected["gldim_R"] = "0";
    e.expected["gldim_product"] = "0";
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "skew_c2_dual_numbers";
    e.description = "C2 acting on Q[x]/(x^2) by x -> -x; infinite global dimension on both sides";
    e.tags = {"semisimple", "cosemisimple"};
    auto r = quotient_poly_algebra({Scalar(0), Scalar(0)}, q);
    Matrix sign = Matrix::identity(q, 2);
    sign.at(1, 1) = Scalar(-1);
    e.system = skew_group_ring(r, CayleyTable::cyclic(2), {Matrix::identity(q, 2), sign}, q);
    e.expected = all_pass();
    e.expected["gldim_R"] = "inf";
    e.expected["gldim_product"] = "inf";
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "twisted_c2_sqrt2";
    e.description = "cocycle-twisted C2 over Q with sigma(g,g) = 2; the product is Q(sqrt 2)";
    e.tags = {"semisimple", "cosemisimple"};
    e.system = twisted_c2(Scalar(2));
    e.expected = all_pass();
    e.expected["gldim_R"] = "0";
    e.expected["gldim_product"] = "0";
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "twisted_c2_split";
    e.description = "cocycle-twisted C2 over Q with sigma(g,g) = 1; the plain group algebra";
    e.tags = {"semisimple", "cosemisimple"};
    e.system = twisted_c2(Scalar(1));
    e.expected = all_pass();
    e.expected["gldim_R"] = "0";
    e.expected["gldim_product"] = "0";
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "kc3_q";
    e.description = "group algebra of C3 over Q as a trivial crossed product";
    e.tags = {"semisimple", "cosemisimple"};
    e.system = trivial_system(base_field_algebra(q), group_hopf(CayleyTable::cyclic(3), q));
    e.expected = all_pass();
    e.expected["gldim_R"] = "0";
    e.expected["gldim_product"] = "0";
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "kc3_gf7";
    e.description = "group algebra of C3 over GF(7); 7 does not divide 3";
    e.tags = {"semisimple", "cosemisimple"};
    e.system = trivial_system(base_field_algebra(f7), group_hopf(CayleyTable::cyclic(3), f7));
    e.expected = all_pass();
    e.expected["gldim_R"] = "0";
    e.expected["gldim_product"] = "0";
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "sweedler_smash";
    e.description = "the 4-dimensional Sweedler algebra smashed over Q; H is not semisimple";
    e.tags = {"negative-control"};
    e.system = trivial_system(base_field_algebra(q), sweedler_h4(q));
    e.expected = hypothesis_skipped();
    e.expected["gldim_R"] = "0";
    e.expected["gldim_product"] = "inf";
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "ut2_trivial_h";
    e.description = "upper triangular 2x2 matrices with the trivial Hopf algebra k";
    e.tags = {"semisimple", "cosemisimple", "trivial-h"};
    e.system = trivial_system(upper_triangular(2, q), trivial_hopf(q));
    e.expected = all_pass();
    e.expected["gldim_R"] = "1";
    e.expected["gldim_product"] = "1";
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "kc2_gf2";
    e.description = "group algebra of C2 over GF(2); the characteristic divides dim H";
    e.tags = {"negative-control"};
    e.system = trivial_system(base_field_algebra(f2), group_hopf(CayleyTable::cyclic(2), f2));
    e.expected = hypothesis_skipped();
    cat.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "morita_m2_dual_numbers";
    e.description = "2x2 matrices over Q[x]/(x^2) with trivial H; the matrix-algebra spot check";
    e.tags = {"semisimple", "cosemisimple", "trivial-h", "morita-pair"};
    e.system = trivial_system(matrix_algebra(quotient_poly_algebra({Scalar(0), Scalar(0)}, q), 2),
                              trivial_hopf(q));
    e.expected = all_pass();
    e.expected["gldim_R"] = "inf";
    e.expected["gldim_product"] = "inf";
    cat.push_back(std::move(e));
  }
  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& bundled_catalog() {
  static std::vector<CatalogEntry> cat = make_catalog();
  return cat;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const auto& e : bundled_catalog())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace xprod
