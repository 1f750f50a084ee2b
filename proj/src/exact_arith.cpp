#include "howe/exact_arith.hpp"

#include <sstream>

namespace howe {

Integer::Integer(std::string_view decimal) {
  if (v_.set_str(std::string(decimal), 10) != 0)
    throw std::invalid_argument("not an integer: " + std::string(decimal));
}

i64 Integer::to_i64() const {
  if (!fits_i64()) throw std::overflow_error("integer does not fit in 64 bits");
  return v_.get_si();
}

u64 Integer::mod(u64 m) const {
  mpz_class r;
  mpz_class mm;
  mpz_import(mm.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &m);
  mpz_fdiv_r(r.get_mpz_t(), v_.get_mpz_t(), mm.get_mpz_t());
  u64 out = 0;
  mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
  return out;
}

Integer Integer::pow(const Integer& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.v_.get_mpz_t(), e);
  return Integer(r);
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!mpz_divisible_p(a.raw().get_mpz_t(), b.raw().get_mpz_t()))
    throw std::domain_error("inexact integer division");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(q);
}

Rational::Rational(const Integer& n, const Integer& d) : v_(n.raw(), d.raw()) {
  if (d.is_zero()) throw std::domain_error("zero denominator");
  v_.canonicalize();
}

Rational::Rational(std::string_view text) {
  if (v_.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("not a rational: " + std::string(text));
  if (sgn(v_.get_den()) == 0) throw std::domain_error("zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

// ---------------------------------------------------------------------------

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; these bases cover all of u64.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(u64 p) : p_(p), nonresidue_(0) {
  if (p == 2 || p >= (u64{1} << 63) || !is_prime_u64(p))
    throw std::invalid_argument("modulus must be an odd prime below 2^63: " + std::to_string(p));
  for (u64 d = 2; d < p; ++d) {
    if (powmod(d, (p - 1) / 2, p) == p - 1) {
      nonresidue_ = d;
      break;
    }
  }
}

Fp PrimeField::operator()(i64 v) const { return reduce_mod(v, p_); }
Fp PrimeField::element(const Integer& v) const { return Fp(v.mod(p_), p_); }
Fp PrimeField::zero() const { return Fp(0, p_); }
Fp PrimeField::one() const { return Fp(1, p_); }
Fp PrimeField::smallest_nonresidue() const { return Fp(nonresidue_, p_); }

Fp Fp::pow(u64 e) const { return Fp(powmod(v_, e, p_), p_); }

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
  // Extended Euclid on signed 128-bit to stay exact for p < 2^63.
  __int128 t = 0, nt = 1, r = p_, nr = v_;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p_;
  return Fp(static_cast<u64>(t), p_);
}

int legendre_symbol(const Fp& a) {
  if (a.is_zero()) return 0;
  return a.pow((a.modulus() - 1) / 2).value() == 1 ? 1 : -1;
}

std::optional<Fp> sqrt_in_field(const Fp& a) {
  const u64 p = a.modulus();
  if (a.is_zero()) return a;
  if (legendre_symbol(a) != 1) return std::nullopt;
  if (p % 4 == 3) return a.pow((p + 1) / 4);

  // Tonelli-Shanks.
  u64 q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Fp z = PrimeField(p).smallest_nonresidue();
  Fp c = z.pow(q);
  Fp x = a.pow((q + 1) / 2);
  Fp t = a.pow(q);
  unsigned m = s;
  const Fp one(1, p);
  while (!(t == one)) {
    unsigned i = 0;
    Fp t2 = t;
    while (!(t2 == one)) {
      t2 *= t2;
      ++i;
    }
    Fp b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
    x *= b;
    c = b * b;
    t *= c;
    m = i;
  }
  return x;
}

// ---------------------------------------------------------------------------

Fp2 Fp2::inverse() const {
  Fp n = norm();
  if (n.is_zero()) throw std::domain_error("inverse of zero in F_p^2");
  Fp ni = n.inverse();
  return Fp2(a_ * ni, -(b_ * ni), d_);
}

Fp2 Fp2::pow(u64 e) const {
  Fp2 r = one_like(*this);
  Fp2 b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::optional<Fp2> sqrt_in_field(const Fp2& a) {
  const Fp zero = zero_like(a.re());
  const Fp& d = a.nonresidue();
  if (a.im().is_zero()) {
    if (auto r = sqrt_in_field(a.re())) return Fp2(*r, zero, d);
    // x / d is a square when x is not, and (s t)^2 = s^2 d.
    auto s = sqrt_in_field(a.re() / d);
    return Fp2(zero, *s, d);
  }
  auto n = sqrt_in_field(a.norm());
  if (!n) return std::nullopt;
  const Fp half = constant_like(zero, 2).inverse();
  for (Fp sign : {one_like(zero), -one_like(zero)}) {
    Fp cand = (a.re() + sign * *n) * half;
    if (auto r = sqrt_in_field(cand); r && !r->is_zero()) {
      Fp y = a.im() / (constant_like(zero, 2) * *r);
      Fp2 root(*r, y, d);
      if (root * root == a) return root;
    }
  }
  return std::nullopt;
}

std::string to_string(const Fp2& a) {
  if (a.im().is_zero()) return std::to_string(a.re().value());
  std::ostringstream os;
  if (!a.re().is_zero()) os << a.re().value() << "+";
  if (a.im().value() != 1) os << a.im().value() << "*";
  os << "t";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Fp2& x) { return os << to_string(x); }

}  // namespace howe
