#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "xprod/checks.hpp"

using namespace xprod;

TEST_CASE("the bundled catalog builds and has at least eight entries") {
  const auto& cat = bundled_catalog();
  CHECK(cat.size() >= 8);
  for (const auto& e : cat) {
    CAPTURE(e.name);
    CHECK(validate_crossed(e.system));
    CHECK(e.system.product_dim() == e.system.R().dim * e.system.H().dim());
  }
  CHECK(find_entry("skew_c2_qq") != nullptr);
  CHECK(find_entry("no_such_entry") == nullptr);
}

TEST_CASE("catalog verdicts match the frozen expectations") {
  Report report = run_catalog("", 8, 0x5eed);
  REQUIRE(report.entries.size() == bundled_catalog().size());
  for (const auto& er : report.entries) {
    const CatalogEntry* entry = find_entry(er.name);
    REQUIRE(entry != nullptr);
    for (const auto& rec : er.checks) {
      auto it = entry->expected.find(rec.check_id);
      if (it == entry->expected.end()) continue;
      CAPTURE(er.name);
      CAPTURE(rec.check_id);
      CAPTURE(rec.data.dump());
      CHECK(verdict_name(rec.status) == it->second);
    }
  }
  CHECK(report.fails == 0);
  CHECK(report_exit_code(report) == 0);
}

TEST_CASE("expected dimension facts hold") {
  for (const auto& e : bundled_catalog()) {
    auto it = e.expected.find("gldim_R");
    if (it == e.expected.end()) continue;
    CAPTURE(e.name);
    CHECK(gldim(e.system.action.R, 8).to_string() == it->second);
    CHECK(gldim(e.system.product, 8).to_string() == e.expected.at("gldim_product"));
  }
}

TEST_CASE("filtering narrows the run") {
  Report controls = run_catalog("negative-control", 4, 1);
  CHECK(controls.entries.size() == 2);
  for (const auto& er : controls.entries) {
    bool skipped_dims = false;
    for (const auto& rec : er.checks)
      if (rec.check_id == "thm2.4") skipped_dims = rec.status == Verdict::skipped_hypothesis;
    CHECK(skipped_dims);
  }
  Report one = run_catalog("twisted_c2_sqrt2", 4, 1);
  CHECK(one.entries.size() == 1);
}

TEST_CASE("cap zero yields conservative verdicts, never failures") {
  Report report = run_catalog("", 0, 7);
  CHECK(report.fails == 0);
  bool saw_indeterminate = false;
  for (const auto& er : report.entries)
    for (const auto& rec : er.checks)
      if (rec.status == Verdict::indeterminate) saw_indeterminate = true;
  CHECK(saw_indeterminate);  // the infinite-dimension entries cannot certify at cap 0
}

TEST_CASE("verdicts are deterministic across runs") {
  Report a = run_catalog("trivial_tensor", 6, 99);
  Report b = run_catalog("trivial_tensor", 6, 99);
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());
}

TEST_CASE("report JSON carries anchors, repro lines and a summary") {
  Report report = run_catalog("ut2_trivial_h", 8, 3);
  json j = report_to_json(report);
  CHECK(j.at("tool") == "xprod");
  CHECK(j.at("cap") == 8);
  REQUIRE(j.at("entries").size() == 1);
  for (const auto& rec : j.at("entries").at(0).at("checks")) {
    CHECK(rec.contains("paper_anchor"));
    CHECK(rec.contains("status"));
    CHECK(rec.at("repro").get<std::string>().find("xprod verify --check") == 0);
  }
  int total = j.at("summary").at("pass").get<int>() + j.at("summary").at("fail").get<int>() +
              j.at("summary").at("indeterminate").get<int>() + j.at("summary").at("skipped").get<int>();
  CHECK(total == static_cast<int>(known_checks().size()));
}

TEST_CASE("the divisibility route and the integral route agree on every applicable entry") {
  for (const auto& e : bundled_catalog()) {
    const HopfAlgebra& h = e.system.H();
    if (!h.alg->is_commutative() && !h.is_cocommutative()) continue;
    CheckRecord rec = check_cor_2_9(e.system, 4);
    CAPTURE(e.name);
    CHECK(rec.data.contains("routes_agree"));
    CHECK(rec.data.at("routes_agree") == true);
  }
}

TEST_CASE("JSON round trips preserve structure") {
  Field q(0);
  auto ut2 = upper_triangular(2, q);
  AlgebraPtr back = algebra_from_json(algebra_to_json(*ut2));
  CHECK(back->dim == ut2->dim);
  CHECK(back->basis_names == ut2->basis_names);
  for (int i = 0; i < ut2->dim; ++i)
    for (int j = 0; j < ut2->dim; ++j)
      CHECK(back->multiply(back->basis_vector(i), back->basis_vector(j)) ==
            ut2->multiply(ut2->basis_vector(i), ut2->basis_vector(j)));

  auto h4 = sweedler_h4(q);
  HopfPtr hback = hopf_from_json(hopf_to_json(*h4));
  CHECK(validate_hopf(*hback));
  CHECK(hback->antipode == h4->antipode);
  CHECK(hback->counit == h4->counit);

  const CatalogEntry* entry = find_entry("skew_c2_dual_numbers");
  REQUIRE(entry);
  CrossedSystem sys = system_from_json(system_to_json(entry->system));
  CHECK(sys.product_dim() == entry->system.product_dim());
  for (int i = 0; i < sys.product_dim(); ++i)
    for (int j = 0; j < sys.product_dim(); ++j)
      CHECK(sys.product->multiply(sys.product->basis_vector(i), sys.product->basis_vector(j)) ==
            entry->system.product->multiply(entry->system.product->basis_vector(i),
                                            entry->system.product->basis_vector(j)));

  AModule reg = regular_module(ut2);
  AModule mback = module_from_json(module_to_json(reg));
  CHECK(validate_module(mback));
  CHECK(mback.dim == reg.dim);
  for (size_t i = 0; i < reg.action.size(); ++i) CHECK(mback.action[i] == reg.action[i]);
}

TEST_CASE("GF(p) scalars serialize as integers, rationals as strings") {
  Field f7(7), q(0);
  json j7 = scalar_to_json(f7, f7.from_long(-3));
  CHECK(j7.is_number_integer());
  CHECK(j7.get<long>() == 4);
  json jq = scalar_to_json(q, Scalar(3, 2));
  CHECK(jq.is_string());
  CHECK(jq.get<std::string>() == "3/2");
  CHECK(scalar_from_json(q, jq) == Scalar(3, 2));
  CHECK(scalar_from_json(f7, json(10)) == Scalar(3));
}

TEST_CASE("file round trip through a temporary directory") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "xprod_io_test";
  fs::create_directories(dir);
  const CatalogEntry* entry = find_entry("twisted_c2_sqrt2");
  REQUIRE(entry);
  std::string path = (dir / "system.json").string();
  write_json_file(path, system_to_json(entry->system));
  json loaded = load_json_file(path);
  CHECK(sniff_kind(loaded) == JsonKind::system);
  CrossedSystem sys = system_from_json(loaded, dir.string());
  CHECK(validate_crossed(sys));
  fs::remove_all(dir);
}

TEST_CASE("sniffing distinguishes the four file kinds") {
  Field q(0);
  auto a = base_field_algebra(q);
  CHECK(sniff_kind(algebra_to_json(*a)) == JsonKind::algebra);
  CHECK(sniff_kind(hopf_to_json(*trivial_hopf(q))) == JsonKind::hopf);
  CHECK(sniff_kind(module_to_json(regular_module(a))) == JsonKind::module);
  const CatalogEntry* entry = find_entry("kc3_q");
  CHECK(sniff_kind(system_to_json(entry->system)) == JsonKind::system);
  CHECK(sniff_kind(json::object()) == JsonKind::unknown);
}

TEST_CASE("single-check runner covers every advertised check id") {
  const CatalogEntry* entry = find_entry("twisted_c2_split");
  REQUIRE(entry);
  for (const auto& id : known_checks()) {
    CheckRecord rec = run_single_check(entry->system, id, 4, 5, "catalog:twisted_c2_split");
    CHECK(rec.check_id == id);
    CHECK(rec.status != Verdict::fail);
    CHECK(rec.repro.find(id) != std::string::npos);
  }
  CHECK_THROWS_AS(run_single_check(entry->system, "thm9.9", 4, 5), Error);
}

TEST_CASE("averaging check samples at least twenty maps") {
  const CatalogEntry* entry = find_entry("skew_c2_dual_numbers");
  CheckRecord rec = check_averaging(entry->system, 0x5eed);
  REQUIRE(rec.status == Verdict::pass);
  CHECK(rec.data.at("sampled_maps").get<int>() >= 20);
}
