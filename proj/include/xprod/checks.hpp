#pragma once

#include "xprod/catalog.hpp"
#include "xprod/homology.hpp"
#include "xprod/json_io.hpp"

namespace xprod {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Verdict { pass, fail, indeterminate, skipped_hypothesis };
const char* verdict_name(Verdict v);

struct CheckRecord {
  std::string check_id;
  std::string anchor;  // which statement the check exercises
  Verdict status = Verdict::indeterminate;
  json data;           // dimensions, ranks, witnesses; every Fail is reproducible from this
  std::string repro;   // single CLI invocation reproducing the record
};

// Dimension inequalities for the crossed product (left, right and weak);
// hypothesis: H semisimple.
CheckRecord check_thm_2_4(const CrossedSystem& sys, int cap);
// Dimension equalities plus the double-smash chain; hypothesis: H semisimple
// and cosemisimple.
CheckRecord check_thm_2_5(const CrossedSystem& sys, int cap);
// Semi-hereditary / von Neumann regular transfer (implications).
CheckRecord check_cor_2_6(const CrossedSystem& sys, int cap);
// The same properties as equivalences under the stronger hypothesis.
CheckRecord check_cor_2_8(const CrossedSystem& sys, int cap);
// Commutative/cocommutative route: char ∤ dim H must agree with the integral
// criterion, then the equalities are delegated.
CheckRecord check_cor_2_9(const CrossedSystem& sys, int cap);
// Averaging operator laws on seeded R-linear maps (left and right), plus the
// projective-splitting replay.
CheckRecord check_averaging(const CrossedSystem& sys, uint64_t seed);
// Injectivity of the Ext restriction on simple pairs in degrees 0..3.
CheckRecord check_ext_embedding(const CrossedSystem& sys, int cap);
// ξ chain-map identity and the induced Tor comparison in degrees 0..2;
// isomorphism required when H = k.
CheckRecord check_tor_comparison(const CrossedSystem& sys, int cap);
// validate_crossed as a report record
CheckRecord check_construction(const CrossedSystem& sys);

std::vector<std::string> known_checks();
CheckRecord run_single_check(const CrossedSystem& sys, const std::string& check_id, int cap,
                             uint64_t seed, const std::string& system_label = "");

struct EntryReport {
  std::string name;
  json field;
  std::vector<CheckRecord> checks;
};

struct Report {
  std::string version = kToolVersion;
  int cap = 8;
  uint64_t seed = 0;
  std::vector<EntryReport> entries;
  int passes = 0, fails = 0, indeterminates = 0, skips = 0;
};

Report run_catalog(const std::string& filter, int cap, uint64_t seed);
json report_to_json(const Report& r);
// 0 when no Fail, 1 otherwise
int report_exit_code(const Report& r);

}  // namespace xprod
