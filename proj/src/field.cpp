#include "xprod/field.hpp"

namespace xprod {

const char* errc_name(errc code) {
  switch (code) {
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::no_solution: return "NoSolution";
    case errc::not_a_group: return "NotAGroup";
    case errc::malformed_hopf: return "MalformedHopf";
    case errc::not_measuring: return "NotMeasuring";
    case errc::not_invertible_cocycle: return "NotInvertibleCocycle";
    case errc::not_associative: return "NotAssociative";
    case errc::not_semisimple: return "NotSemisimple";
    case errc::not_r_linear: return "NotRLinear";
    case errc::not_automorphism: return "NotAutomorphism";
    case errc::not_group_action: return "NotGroupAction";
    case errc::unsupported_characteristic: return "UnsupportedCharacteristic";
    case errc::internal_inconsistency: return "InternalInconsistency";
    case errc::resolution_too_short: return "ResolutionTooShort";
    case errc::indeterminate_decomposition: return "IndeterminateDecomposition";
    case errc::io_error: return "IoError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

Field::Field(unsigned long characteristic) : p_(characteristic), pz_(0) {
  if (p_ != 0) {
    pz_ = mpz_class(p_);
    if (mpz_probab_prime_p(pz_.get_mpz_t(), 40) == 0)
      fail(errc::invalid_argument, "field characteristic must be 0 or a prime, got " + std::to_string(p_));
  }
}

Scalar Field::from_long(long v) const { return reduce(Scalar(v)); }

Scalar Field::reduce(const Scalar& a) const {
  if (p_ == 0) return a;
  // residue field: fold the denominator in by modular inverse
  mpz_class num = a.get_num() % pz_;
  if (num < 0) num += pz_;
  if (a.get_den() != 1) {
    mpz_class den = a.get_den() % pz_;
    if (den < 0) den += pz_;
    mpz_class deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), pz_.get_mpz_t()) == 0)
      fail(errc::invalid_argument, "denominator not invertible mod p");
    num = (num * deninv) % pz_;
  }
  return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  mpz_class num = (a.get_num() + b.get_num()) % pz_;
  if (num < 0) num += pz_;
  return Scalar(num);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  mpz_class num = (a.get_num() - b.get_num()) % pz_;
  if (num < 0) num += pz_;
  return Scalar(num);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  mpz_class num = (a.get_num() * b.get_num()) % pz_;
  if (num < 0) num += pz_;
  return Scalar(num);
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  if (sgn(a) == 0) return a;
  return Scalar(mpz_class(pz_ - a.get_num()));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) fail(errc::invalid_argument, "division by zero");
  if (p_ == 0) return Scalar(1) / a;
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), pz_.get_mpz_t()) == 0)
    fail(errc::invalid_argument, "element not invertible mod p");
  return Scalar(r);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::parse(const std::string& text) const {
  if (text.empty()) fail(errc::io_error, "empty scalar literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(text);
      return reduce(Scalar(n));
    }
    mpz_class n(text.substr(0, slash)), d(text.substr(slash + 1));
    if (d == 0) fail(errc::io_error, "zero denominator in scalar literal");
    Scalar q(n, d);
    q.canonicalize();
    return reduce(q);
  } catch (const std::invalid_argument&) {
    fail(errc::io_error, "bad scalar literal '" + text + "'");
  }
}

std::string Field::to_string(const Scalar& a) const {
  if (p_ != 0 || a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

}  // namespace xprod
