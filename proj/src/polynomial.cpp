#include "xprod/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "xprod/linalg.hpp"
#include "xprod/matrix.hpp"

namespace xprod {

Poly Poly::constant(Field f, const Scalar& a) {
  Poly p(f);
  p.c = {f.reduce(a)};
  p.trim();
  return p;
}

Poly Poly::x(Field f) {
  Poly p(f);
  p.c = {f.zero(), f.one()};
  return p;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (sgn(c[i]) == 0) continue;
    if (!first) os << " + ";
    os << field.to_string(c[i]);
    if (i > 0) os << "*x^" << i;
    first = false;
  }
  return os.str();
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(a.field);
  r.c.resize(std::max(a.c.size(), b.c.size()), a.field.zero());
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.field.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  r.trim();
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(a.field);
  r.c.resize(std::max(a.c.size(), b.c.size()), a.field.zero());
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.field.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  r.trim();
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field);
  Poly r(a.field);
  r.c.assign(a.c.size() + b.c.size() - 1, a.field.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (sgn(a.c[i]) == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = a.field.add(r.c[i + j], a.field.mul(a.c[i], b.c[j]));
  }
  r.trim();
  return r;
}

Poly poly_scale(const Poly& a, const Scalar& s) {
  Poly r(a.field);
  r.c.reserve(a.c.size());
  Scalar ss = a.field.reduce(s);
  for (const auto& x : a.c) r.c.push_back(a.field.mul(x, ss));
  r.trim();
  return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(errc::invalid_argument, "polynomial division by zero");
  const Field& f = a.field;
  Poly rem = a;
  Poly quo(f);
  if (a.degree() >= b.degree()) quo.c.assign(a.degree() - b.degree() + 1, f.zero());
  Scalar lcinv = f.inv(b.lc());
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Scalar q = f.mul(rem.lc(), lcinv);
    quo.c[shift] = q;
    for (int i = 0; i <= b.degree(); ++i)
      rem.c[i + shift] = f.sub(rem.c[i + shift], f.mul(q, b.c[i]));
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

Poly poly_monic(const Poly& a) {
  if (a.is_zero()) return a;
  return poly_scale(a, a.field.inv(a.lc()));
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_divmod(x, y).second;
    x = y;
    y = r;
  }
  return poly_monic(x);
}

Poly poly_derivative(const Poly& a) {
  Poly r(a.field);
  if (a.degree() < 1) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i)
    r.c[i - 1] = a.field.mul(a.c[i], a.field.from_long(static_cast<long>(i)));
  r.trim();
  return r;
}

Scalar poly_eval(const Poly& a, const Scalar& x) {
  Scalar acc = a.field.zero();
  for (int i = a.degree(); i >= 0; --i) acc = a.field.add(a.field.mul(acc, x), a.c[i]);
  return acc;
}

Matrix poly_at_matrix(const Poly& p, const Matrix& m) {
  Matrix acc = Matrix::zeros(m.field(), m.rows(), m.cols());
  Matrix id = Matrix::identity(m.field(), m.rows());
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    acc = acc.add(id.scaled(p.coeff(i)));
  }
  return acc;
}

namespace {

// ---------------------------------------------------------------- GF(p) part

Poly poly_powmod(const Poly& base, const mpz_class& exp, const Poly& mod) {
  Poly result = Poly::constant(base.field, base.field.one());
  Poly b = poly_divmod(base, mod).second;
  mpz_class e = exp;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = poly_divmod(poly_mul(result, b), mod).second;
    b = poly_divmod(poly_mul(b, b), mod).second;
    e >>= 1;
  }
  return result;
}

// Berlekamp split of a monic squarefree polynomial over GF(p).
void berlekamp(const Poly& g, std::vector<Poly>& out) {
  const Field& f = g.field;
  const int n = g.degree();
  if (n <= 1) {
    if (n == 1) out.push_back(g);
    return;
  }
  const mpz_class p(static_cast<unsigned long>(f.characteristic()));

  // Q[i] = x^{ip} mod g as column i
  Matrix q(f, n, n);
  Poly xp = poly_powmod(Poly::x(f), p, g);
  Poly cur = Poly::constant(f, f.one());
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < n; ++r) q.at(r, i) = cur.coeff(r);
    cur = poly_divmod(poly_mul(cur, xp), g).second;
  }
  Matrix nullsp = kernel_basis(q.sub(Matrix::identity(f, n)));
  if (nullsp.cols() <= 1) {
    out.push_back(g);
    return;
  }
  // any non-constant element of the Berlekamp subalgebra splits g
  for (int j = 0; j < nullsp.cols(); ++j) {
    Poly v(f);
    v.c.resize(n);
    for (int r = 0; r < n; ++r) v.c[r] = nullsp.at(r, j);
    v.trim();
    if (v.degree() < 1) continue;
    const unsigned long pl = f.characteristic();
    const unsigned long sweep_cap = 200000;
    for (unsigned long cval = 0; cval < pl && cval < sweep_cap; ++cval) {
      Poly shifted = poly_sub(v, Poly::constant(f, f.from_long(static_cast<long>(cval))));
      Poly d = poly_gcd(g, shifted);
      if (d.degree() > 0 && d.degree() < g.degree()) {
        berlekamp(d, out);
        berlekamp(poly_monic(poly_divmod(g, d).first), out);
        return;
      }
    }
  }
  fail(errc::indeterminate_decomposition, "Berlekamp split not found (characteristic too large?)");
}

// ------------------------------------------------------------- rational part

using ZPoly = std::vector<mpz_class>;  // low degree first, trimmed

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

mpz_class mod_sym(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

ZPoly zmod(const ZPoly& a, const mpz_class& m) {
  ZPoly r = a;
  for (auto& x : r) x = mod_pos(x, m);
  ztrim(r);
  return r;
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) { return zmod(zmul(a, b), m); }

ZPoly zadd_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
    r[i] = mod_pos(r[i], m);
  }
  ztrim(r);
  return r;
}

ZPoly zsub_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
    r[i] = mod_pos(r[i], m);
  }
  ztrim(r);
  return r;
}

// divides by a monic divisor mod m
std::pair<ZPoly, ZPoly> zdivmod_monic(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly rem = zmod(a, m);
  ZPoly quo;
  if (zdeg(rem) >= zdeg(b)) quo.assign(zdeg(rem) - zdeg(b) + 1, mpz_class(0));
  while (zdeg(rem) >= zdeg(b) && !rem.empty()) {
    int shift = zdeg(rem) - zdeg(b);
    mpz_class q = rem.back();
    quo[shift] = q;
    for (size_t i = 0; i < b.size(); ++i)
      rem[i + shift] = mod_pos(rem[i + shift] - q * b[i], m);
    ztrim(rem);
  }
  ztrim(quo);
  return {quo, rem};
}

// exact division over Z; nullopt if not divisible
std::optional<ZPoly> zdiv_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) return std::nullopt;
  ZPoly rem = a, quo;
  if (zdeg(a) < zdeg(b)) return std::nullopt;
  quo.assign(zdeg(a) - zdeg(b) + 1, mpz_class(0));
  while (!rem.empty() && zdeg(rem) >= zdeg(b)) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(), b.back().get_mpz_t());
    if (r != 0) return std::nullopt;
    int shift = zdeg(rem) - zdeg(b);
    quo[shift] = q;
    for (size_t i = 0; i < b.size(); ++i) rem[i + shift] -= q * b[i];
    ztrim(rem);
  }
  if (!rem.empty()) return std::nullopt;
  ztrim(quo);
  return quo;
}

mpz_class zcontent(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Poly poly_from_z(const ZPoly& a, const Field& f) {
  Poly p(f);
  p.c.reserve(a.size());
  for (const auto& x : a) p.c.push_back(f.reduce(Scalar(x)));
  p.trim();
  return p;
}

struct HenselPair {
  ZPoly g, h, s, t;  // f = g h, s g + t h = 1, all mod modulus
  mpz_class modulus;
};

// one quadratic lifting step: modulus -> modulus^2 (capped at target)
void hensel_step(const ZPoly& f, HenselPair& p, const mpz_class& target) {
  mpz_class m2 = p.modulus * p.modulus;
  if (m2 > target * target) m2 = m2;  // lift fully; final reduction happens at use sites
  ZPoly e = zsub_mod(f, zmul(p.g, p.h), m2);
  auto [q, r] = zdivmod_monic(zmul_mod(p.s, e, m2), p.h, m2);
  ZPoly gstar = zadd_mod(zadd_mod(p.g, zmul_mod(p.t, e, m2), m2), zmul_mod(q, p.g, m2), m2);
  ZPoly hstar = zadd_mod(p.h, r, m2);
  ZPoly ep = zsub_mod(zadd_mod(zmul_mod(p.s, gstar, m2), zmul_mod(p.t, hstar, m2), m2),
                      ZPoly{mpz_class(1)}, m2);
  auto [c, d] = zdivmod_monic(zmul_mod(p.s, ep, m2), hstar, m2);
  ZPoly sstar = zsub_mod(p.s, d, m2);
  ZPoly tstar = zsub_mod(zsub_mod(p.t, zmul_mod(p.t, ep, m2), m2), zmul_mod(c, gstar, m2), m2);
  p.g = gstar;
  p.h = hstar;
  p.s = sstar;
  p.t = tstar;
  p.modulus = m2;
}

// extended Euclid over GF(p) for the initial Bezout pair
void bezout_mod_p(const Poly& g, const Poly& h, ZPoly& s_out, ZPoly& t_out) {
  const Field& f = g.field;
  Poly r0 = g, r1 = h;
  Poly s0 = Poly::constant(f, f.one()), s1 = Poly::zero(f);
  Poly t0 = Poly::zero(f), t1 = Poly::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    Poly t2 = poly_sub(t0, poly_mul(q, t1));
    r0 = r1; r1 = r;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  // r0 = gcd (a unit for coprime g,h); scale Bezout by its inverse
  if (r0.degree() != 0) fail(errc::internal_inconsistency, "hensel: factors not coprime mod p");
  Scalar inv = f.inv(r0.c[0]);
  s0 = poly_scale(s0, inv);
  t0 = poly_scale(t0, inv);
  auto to_z = [](const Poly& p) {
    ZPoly z;
    z.reserve(p.c.size());
    for (const auto& x : p.c) z.push_back(x.get_num());
    return z;
  };
  s_out = to_z(s0);
  t_out = to_z(t0);
}

// lifts the mod-p factor list of monic f to mod p^k (binary factor tree)
std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, const std::vector<Poly>& factors_p,
                                    unsigned long p, const mpz_class& target) {
  if (factors_p.size() == 1) return {zmod(f, target)};
  const Field fp(p);
  size_t half = factors_p.size() / 2;
  Poly gp = Poly::constant(fp, fp.one()), hp = Poly::constant(fp, fp.one());
  for (size_t i = 0; i < half; ++i) gp = poly_mul(gp, factors_p[i]);
  for (size_t i = half; i < factors_p.size(); ++i) hp = poly_mul(hp, factors_p[i]);

  HenselPair pair;
  pair.modulus = mpz_class(p);
  auto to_z = [](const Poly& q) {
    ZPoly z;
    z.reserve(q.c.size());
    for (const auto& x : q.c) z.push_back(x.get_num());
    return z;
  };
  pair.g = to_z(gp);
  pair.h = to_z(hp);
  bezout_mod_p(gp, hp, pair.s, pair.t);

  while (pair.modulus < target) hensel_step(f, pair, target);

  std::vector<Poly> left(factors_p.begin(), factors_p.begin() + half);
  std::vector<Poly> right(factors_p.begin() + half, factors_p.end());
  auto lefts = hensel_lift_tree(pair.g, left, p, target);
  auto rights = hensel_lift_tree(pair.h, right, p, target);
  lefts.insert(lefts.end(), rights.begin(), rights.end());
  return lefts;
}

// factor a monic squarefree integer polynomial (Zassenhaus)
std::vector<ZPoly> factor_monic_squarefree_z(const ZPoly& f0) {
  std::vector<ZPoly> result;
  ZPoly f = f0;
  if (zdeg(f) <= 1) {
    if (zdeg(f) == 1) result.push_back(f);
    return result;
  }

  // prime with squarefree reduction
  unsigned long p = 0;
  std::vector<Poly> factors_p;
  for (unsigned long cand : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul,
                             43ul, 47ul, 53ul, 59ul, 61ul, 67ul, 71ul, 73ul, 79ul, 83ul, 89ul, 97ul,
                             101ul, 103ul, 107ul, 109ul, 113ul}) {
    Field fp(cand);
    Poly fmodp = poly_from_z(f, fp);
    if (fmodp.degree() != zdeg(f)) continue;  // lc vanished (cannot happen: monic)
    if (poly_gcd(fmodp, poly_derivative(fmodp)).degree() != 0) continue;
    std::vector<Poly> fs;
    berlekamp(poly_monic(fmodp), fs);
    p = cand;
    factors_p = std::move(fs);
    break;
  }
  if (p == 0) fail(errc::indeterminate_decomposition, "no usable prime for factorization");
  if (factors_p.size() == 1) {
    result.push_back(f);
    return result;
  }
  std::sort(factors_p.begin(), factors_p.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
      if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
  });

  // Mignotte-style bound: any factor's coefficients are below 2^n * ||f||_2
  mpz_class norm2 = 0;
  for (const auto& x : f) norm2 += x * x;
  mpz_class bound = mpz_class(1) << (zdeg(f) + 1);
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  bound *= (root + 1);
  mpz_class target(p);
  while (target <= 2 * bound) target *= target;

  std::vector<ZPoly> lifted = hensel_lift_tree(zmod(f, target), factors_p, p, target);

  // recombination over subsets, smallest first
  std::vector<bool> used(lifted.size(), false);
  size_t remaining = lifted.size();
  ZPoly rem = f;
  auto balanced = [&](const ZPoly& a) {
    ZPoly r = a;
    for (auto& x : r) x = mod_sym(x, target);
    ztrim(r);
    return r;
  };

  for (size_t size = 1; size <= remaining / 2;) {
    // iterate subsets of `size` unused factors via index combinations
    std::vector<size_t> avail;
    for (size_t i = 0; i < lifted.size(); ++i)
      if (!used[i]) avail.push_back(i);
    if (size > avail.size() / 2 && size * 2 != avail.size()) break;

    std::vector<size_t> comb(size);
    for (size_t i = 0; i < size; ++i) comb[i] = i;
    bool found = false;
    while (true) {
      ZPoly candidate{mpz_class(1)};
      for (size_t i : comb) candidate = zmod(zmul(candidate, lifted[avail[i]]), target);
      candidate = balanced(candidate);
      auto quo = zdiv_exact(rem, candidate);
      if (quo) {
        result.push_back(candidate);
        for (size_t i : comb) used[avail[i]] = true;
        remaining -= size;
        rem = *quo;
        found = true;
        break;
      }
      // next combination
      int pos = static_cast<int>(size) - 1;
      while (pos >= 0 && comb[pos] == avail.size() - size + pos) --pos;
      if (pos < 0) break;
      ++comb[pos];
      for (size_t i = pos + 1; i < size; ++i) comb[i] = comb[i - 1] + 1;
    }
    if (!found) ++size;
    if (zdeg(rem) == 0) break;
  }
  if (zdeg(rem) > 0) result.push_back(rem);
  return result;
}

// squarefree part list: (g_i, multiplicity i), Yun over Q, gcd-chain over GF(p)
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  const Field& fd = f.field;
  std::vector<std::pair<Poly, int>> out;
  if (f.degree() < 1) return out;

  if (fd.is_rational()) {
    Poly a = poly_monic(f);
    Poly d = poly_derivative(a);
    Poly g = poly_gcd(a, d);
    Poly w = poly_divmod(a, g).first;
    Poly y = poly_divmod(d, g).first;
    Poly z = poly_sub(y, poly_derivative(w));
    int i = 1;
    while (w.degree() > 0) {
      Poly gi = poly_gcd(w, z);
      if (gi.degree() > 0) out.emplace_back(gi, i);
      w = poly_divmod(w, gi).first;
      y = poly_divmod(z, gi).first;
      z = poly_sub(y, poly_derivative(w));
      ++i;
    }
    return out;
  }

  // characteristic p: peel gcd chain, recurse on p-th powers
  unsigned long p = fd.characteristic();
  Poly a = poly_monic(f);
  Poly d = poly_derivative(a);
  if (d.is_zero()) {
    // a = h(x^p); over the prime field the p-th root just compresses exponents
    Poly h(fd);
    h.c.resize(a.degree() / p + 1, fd.zero());
    for (int i = 0; i <= a.degree(); i += static_cast<int>(p)) h.c[i / p] = a.coeff(i);
    h.trim();
    auto inner = squarefree_decomposition(h);
    for (auto& [g, m] : inner) out.emplace_back(g, m * static_cast<int>(p));
    return out;
  }
  Poly g = poly_gcd(a, d);
  Poly w = poly_divmod(a, g).first;
  int i = 1;
  while (w.degree() > 0) {
    Poly wn = poly_gcd(w, g);
    Poly gi = poly_divmod(w, wn).first;
    if (gi.degree() > 0) out.emplace_back(poly_monic(gi), i);
    w = wn;
    g = poly_divmod(g, wn).first;
    ++i;
  }
  if (g.degree() > 0) {
    auto inner = squarefree_decomposition(g);  // g = h(x^p) part
    for (auto& [q, m] : inner) out.emplace_back(q, m);
  }
  return out;
}

std::vector<Poly> factor_squarefree(const Poly& f) {
  const Field& fd = f.field;
  if (f.degree() <= 1) return f.degree() == 1 ? std::vector<Poly>{poly_monic(f)} : std::vector<Poly>{};
  if (!fd.is_rational()) {
    std::vector<Poly> out;
    berlekamp(poly_monic(f), out);
    return out;
  }
  // clear denominators, make monic over Z via y = lc * x
  mpz_class den = 1;
  for (const auto& c : f.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly zf(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) {
    Scalar s = f.c[i] * Scalar(den);
    zf[i] = s.get_num();
  }
  mpz_class cont = zcontent(zf);
  if (zf.back() < 0) cont = -cont;
  for (auto& x : zf) x /= cont;

  mpz_class l = zf.back();
  ZPoly monic(zf.size());
  // F(y) = l^{n-1} f(y/l): coefficient of y^i is f_i * l^{n-1-i}
  int n = zdeg(zf);
  for (int i = 0; i <= n; ++i) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(n - 1 - i >= 0 ? n - 1 - i : 0));
    monic[i] = (i == n) ? mpz_class(1) : zf[i] * pw;
  }

  std::vector<Poly> out;
  for (const auto& zfac : factor_monic_squarefree_z(monic)) {
    // map back through x = y/l and renormalize to a monic rational polynomial
    Poly q(fd);
    q.c.resize(zfac.size());
    int dq = zdeg(zfac);
    for (int i = 0; i <= dq; ++i) {
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(i));
      q.c[i] = Scalar(zfac[i] * pw);
    }
    q.trim();
    out.push_back(poly_monic(q));
  }
  return out;
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& a) {
  if (a.degree() < 1) fail(errc::invalid_argument, "factoring a constant polynomial");
  std::map<std::pair<int, std::string>, std::pair<Poly, int>> acc;
  for (const auto& [sqf, mult] : squarefree_decomposition(a)) {
    for (const auto& irr : factor_squarefree(sqf)) {
      auto key = std::make_pair(irr.degree(), irr.to_string());
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, std::make_pair(irr, mult));
      else
        it->second.second += mult;
    }
  }
  std::vector<std::pair<Poly, int>> out;
  out.reserve(acc.size());
  for (auto& [k, v] : acc) out.push_back(v);

  // sanity: factors multiply back to the monic input
  Poly check = Poly::constant(a.field, a.field.one());
  for (const auto& [q, m] : out)
    for (int i = 0; i < m; ++i) check = poly_mul(check, q);
  if (!(check == poly_monic(a))) fail(errc::internal_inconsistency, "factorization does not multiply back");
  return out;
}

bool is_irreducible(const Poly& a) {
  auto fs = factor(a);
  return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace xprod
