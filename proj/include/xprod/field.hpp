#pragma once

#include <gmpxx.h>

#include <string>

#include "xprod/util.hpp"

namespace xprod {

// Exact field element. Over the rationals this is an arbitrary-precision
// fraction; over GF(p) the value is an integer representative in [0, p) with
// denominator 1. All arithmetic goes through a Field so the modulus is applied
// in exactly one place.
using Scalar = mpq_class;

class Field {
 public:
  // characteristic 0 = rationals, otherwise a prime p
  explicit Field(unsigned long characteristic = 0);

  unsigned long characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_long(long v) const;
  Scalar reduce(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  bool is_one(const Scalar& a) const { return a == 1; }
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

  // "3", "-3/2" over the rationals; integer representatives over GF(p)
  Scalar parse(const std::string& text) const;
  std::string to_string(const Scalar& a) const;

  bool operator==(const Field& other) const { return p_ == other.p_; }
  bool operator!=(const Field& other) const { return p_ != other.p_; }

 private:
  unsigned long p_ = 0;
  mpz_class pz_;
};

}  // namespace xprod
