#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace xprod {

enum class errc {
  dimension_mismatch,
  no_solution,
  not_a_group,
  malformed_hopf,
  not_measuring,
  not_invertible_cocycle,
  not_associative,
  not_semisimple,
  not_r_linear,
  not_automorphism,
  not_group_action,
  unsupported_characteristic,
  internal_inconsistency,
  resolution_too_short,
  indeterminate_decomposition,
  io_error,
  invalid_argument,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

// Verdict-valued result for the validate_* operations. A failed validation is
// data, not an exception; `violation` names the first axiom that broke.
struct ValidationResult {
  bool ok = true;
  std::string violation;  // e.g. "associativity"
  std::string detail;     // e.g. the failing basis triple

  static ValidationResult certificate() { return {}; }
  static ValidationResult violated(std::string what, std::string detail) {
    return {false, std::move(what), std::move(detail)};
  }
  explicit operator bool() const { return ok; }
};

// xorshift64* generator. Sampling in the harness must be reproducible across
// platforms, so no <random> distributions anywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  uint64_t next() {
    s_ ^= s_ >> 12;
    s_ ^= s_ << 25;
    s_ ^= s_ >> 27;
    return s_ * 0x2545f4914f6cdd1dull;
  }

  // uniform-ish in [lo, hi], inclusive
  long next_in(long lo, long hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

 private:
  uint64_t s_;
};

}  // namespace xprod
