#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "xprod/checks.hpp"

using namespace xprod;

namespace {

std::string dir_of(const std::string& path) {
  return std::filesystem::path(path).parent_path().string();
}

CrossedSystem load_system(const std::string& ref) {
  if (ref.rfind("catalog:", 0) == 0) {
    const CatalogEntry* e = find_entry(ref.substr(8));
    if (!e) fail(errc::io_error, "no catalog entry named '" + ref.substr(8) + "'");
    return e->system;
  }
  return system_from_json(load_json_file(ref), dir_of(ref));
}

void print_record(const CheckRecord& rec) {
  std::cout << "[" << verdict_name(rec.status) << "] " << rec.check_id << " — " << rec.anchor << "\n";
  std::cout << "  " << rec.data.dump() << "\n";
  if (!rec.repro.empty()) std::cout << "  repro: " << rec.repro << "\n";
}

int cmd_validate(const std::string& path) {
  json j = load_json_file(path);
  ValidationResult v;
  std::string kind;
  switch (sniff_kind(j)) {
    case JsonKind::system: {
      kind = "crossed system";
      try {
        CrossedSystem sys = system_from_json(j, dir_of(path));  // build_crossed validates
        v = validate_crossed(sys);
      } catch (const Error& e) {
        // a system whose data violates the crossed-product axioms is invalid
        // input, not an I/O problem
        switch (e.code()) {
          case errc::not_measuring:
          case errc::not_invertible_cocycle:
          case errc::not_associative:
          case errc::malformed_hopf:
            v = ValidationResult::violated(errc_name(e.code()), e.what());
            break;
          default:
            throw;
        }
      }
      break;
    }
    case JsonKind::hopf: {
      kind = "Hopf algebra";
      HopfPtr h = hopf_from_json(j);
      v = validate_algebra(*h->alg);
      if (v) v = validate_hopf(*h);
      break;
    }
    case JsonKind::module: {
      kind = "module";
      AModule m = module_from_json(j, dir_of(path));
      v = validate_module(m);
      break;
    }
    case JsonKind::algebra: {
      kind = "algebra";
      AlgebraPtr a = algebra_from_json(j);
      v = validate_algebra(*a);
      break;
    }
    default:
      fail(errc::io_error, "unrecognized input shape (not an algebra, Hopf algebra, module or system)");
  }
  if (v) {
    std::cout << "valid " << kind << "\n";
    return 0;
  }
  std::cout << "invalid " << kind << ": " << v.violation << " (" << v.detail << ")\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic workbench for crossed products of finite-dimensional algebras"};
  app.set_version_flag("--version", std::string("xprod ") + kToolVersion);
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "validate an algebra/Hopf/module/system JSON file");
  validate->add_option("file", validate_path, "input file")->required();

  std::string gldim_path;
  int gldim_cap = 8;
  auto* gl = app.add_subcommand("gldim", "global dimension of an algebra (max pd over simples)");
  gl->add_option("file", gldim_path, "algebra JSON file")->required();
  gl->add_option("--cap", gldim_cap, "resolution length cap");

  auto* crossed = app.add_subcommand("crossed", "crossed product operations");
  crossed->require_subcommand(1);
  std::string build_path, build_out;
  auto* build = crossed->add_subcommand("build", "build R#H from a system file");
  build->add_option("file", build_path, "system JSON file")->required();
  build->add_option("--out", build_out, "write the product algebra JSON here");

  std::string verify_check, verify_system, verify_json;
  int verify_cap = 8;
  uint64_t verify_seed = 0x5eed;
  auto* verify = app.add_subcommand("verify", "run one check against one system");
  verify->add_option("--check", verify_check, "one of: thm2.4 thm2.5 cor2.6 cor2.8 cor2.9 averaging ext-embed tor-map construction")
      ->required();
  verify->add_option("--system", verify_system, "system JSON file or catalog:<name>")->required();
  verify->add_option("--cap", verify_cap, "resolution length cap");
  verify->add_option("--seed", verify_seed, "seed for sampled maps");
  verify->add_option("--json", verify_json, "write the record as JSON here");

  auto* catalog = app.add_subcommand("catalog", "bundled example systems");
  catalog->require_subcommand(1);
  std::string run_filter, run_json;
  int run_cap = 8;
  uint64_t run_seed = 0x5eed;
  auto* run = catalog->add_subcommand("run", "run every check on every matching entry");
  run->add_option("--filter", run_filter, "restrict to entries with this tag or name fragment");
  run->add_option("--cap", run_cap, "resolution length cap");
  run->add_option("--seed", run_seed, "seed for sampled maps");
  run->add_option("--json", run_json, "write the full report here");
  auto* list = catalog->add_subcommand("list", "list bundled entries");
  std::string export_dir;
  auto* exp = catalog->add_subcommand("export", "write bundled systems as JSON files");
  exp->add_option("--dir", export_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(validate_path);

    if (*gl) {
      AlgebraPtr a = algebra_from_json(load_json_file(gldim_path));
      auto v = validate_algebra(*a);
      if (!v) {
        std::cout << "invalid algebra: " << v.violation << " (" << v.detail << ")\n";
        return 2;
      }
      std::cout << "gldim = " << gldim(a, gldim_cap).to_string() << "\n";
      return 0;
    }

    if (*build) {
      CrossedSystem sys = load_system(build_path);
      json out = algebra_to_json(*sys.product);
      if (build_out.empty())
        std::cout << out.dump(2) << "\n";
      else
        write_json_file(build_out, out);
      return 0;
    }

    if (*verify) {
      CrossedSystem sys = load_system(verify_system);
      CheckRecord rec = run_single_check(sys, verify_check, verify_cap, verify_seed, verify_system);
      print_record(rec);
      if (!verify_json.empty()) {
        json j;
        j["tool"] = "xprod";
        j["version"] = kToolVersion;
        j["check_id"] = rec.check_id;
        j["paper_anchor"] = rec.anchor;
        j["status"] = verdict_name(rec.status);
        j["data"] = rec.data;
        j["repro"] = rec.repro;
        write_json_file(verify_json, j);
      }
      return rec.status == Verdict::fail ? 1 : 0;
    }

    if (*run) {
      Report report = run_catalog(run_filter, run_cap, run_seed);
      for (const auto& er : report.entries) {
        std::cout << er.name << "\n";
        for (const auto& rec : er.checks)
          std::cout << "  [" << verdict_name(rec.status) << "] " << rec.check_id << "\n";
      }
      std::cout << "pass " << report.passes << ", fail " << report.fails << ", indeterminate "
                << report.indeterminates << ", skipped " << report.skips << "\n";
      if (!run_json.empty()) write_json_file(run_json, report_to_json(report));
      return report_exit_code(report);
    }

    if (*list) {
      for (const auto& e : bundled_catalog()) {
        std::cout << e.name << " [";
        for (size_t i = 0; i < e.tags.size(); ++i) std::cout << (i ? "," : "") << e.tags[i];
        std::cout << "] — " << e.description << "\n";
      }
      return 0;
    }

    if (*exp) {
      std::filesystem::create_directories(export_dir);
      for (const auto& e : bundled_catalog())
        write_json_file((std::filesystem::path(export_dir) / (e.name + ".json")).string(),
                        system_to_json(e.system));
      std::cout << "wrote " << bundled_catalog().size() << " systems to " << export_dir << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
