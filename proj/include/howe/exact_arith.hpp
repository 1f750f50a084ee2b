#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace howe {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Arbitrary precision integers and rationals (thin wrappers over gmpxx so that
// generic code never sees expression templates).

class Integer {
 public:
  Integer() = default;
  Integer(i64 v) : v_(static_cast<long>(v)) {}  // NOLINT(implicit)
  explicit Integer(const mpz_class& v) : v_(v) {}
  explicit Integer(std::string_view decimal);

  const mpz_class& raw() const { return v_; }
  std::string to_string() const { return v_.get_str(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool fits_i64() const { return v_.fits_slong_p(); }
  i64 to_i64() const;
  // Residue in [0, m).
  u64 mod(u64 m) const;

  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.v_)); }
  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator<(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) < 0; }
  friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.v_; }

  static Integer pow(const Integer& base, unsigned long e);

 private:
  mpz_class v_;
};

// Throws std::domain_error unless b divides a.
Integer exact_div(const Integer& a, const Integer& b);

class Rational {
 public:
  Rational() = default;
  Rational(i64 v) : v_(static_cast<long>(v)) {}  // NOLINT(implicit)
  Rational(const Integer& n) : v_(n.raw()) {}     // NOLINT(implicit)
  Rational(const Integer& n, const Integer& d);
  explicit Rational(std::string_view text);  // "a" or "a/b"

  Integer numerator() const { return Integer(mpz_class(v_.get_num())); }
  Integer denominator() const { return Integer(mpz_class(v_.get_den())); }
  std::string to_string() const { return v_.get_str(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }
  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.v_; }

 private:
  mpq_class v_;
};

// ---------------------------------------------------------------------------
// Prime fields. Elements carry their modulus so that generic code can build
// constants from any element it already holds.

class Fp;

bool is_prime_u64(u64 n);

class PrimeField {
 public:
  // Requires an odd prime below 2^63.
  explicit PrimeField(u64 p);

  u64 modulus() const { return p_; }
  Fp operator()(i64 v) const;
  Fp element(const Integer& v) const;
  Fp zero() const;
  Fp one() const;
  Fp smallest_nonresidue() const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  u64 p_;
  u64 nonresidue_;
};

class Fp {
 public:
  Fp() = default;
  // `v` must already be reduced.
  Fp(u64 v, u64 p) : v_(v), p_(p) {}

  u64 value() const { return v_; }
  u64 modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp& operator+=(const Fp& o) {
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_);
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    if (p_ < (u64{1} << 32))
      v_ = (v_ * o.v_) % p_;
    else
      v_ = static_cast<u64>(static_cast<u128>(v_) * o.v_ % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend Fp operator-(const Fp& a) { return Fp(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

  Fp pow(u64 e) const;
  // Throws std::domain_error on zero.
  Fp inverse() const;

 private:
  u64 v_ = 0;
  u64 p_ = 0;
};

int legendre_symbol(const Fp& a);
std::optional<Fp> sqrt_in_field(const Fp& a);

// F_{p^2} = F_p[t]/(t^2 - d), d the smallest quadratic nonresidue.
class Fp2 {
 public:
  Fp2() = default;
  Fp2(const Fp& a, const Fp& b, const Fp& d) : a_(a), b_(b), d_(d) {}

  const Fp& re() const { return a_; }
  const Fp& im() const { return b_; }
  const Fp& nonresidue() const { return d_; }
  u64 modulus() const { return a_.modulus(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool in_base_field() const { return b_.is_zero(); }

  Fp2& operator+=(const Fp2& o) { a_ += o.a_; b_ += o.b_; return *this; }
  Fp2& operator-=(const Fp2& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  Fp2& operator*=(const Fp2& o) {
    Fp a = a_ * o.a_ + d_ * (b_ * o.b_);
    b_ = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    return *this;
  }
  Fp2& operator/=(const Fp2& o) { return *this *= o.inverse(); }

  friend Fp2 operator+(Fp2 a, const Fp2& b) { return a += b; }
  friend Fp2 operator-(Fp2 a, const Fp2& b) { return a -= b; }
  friend Fp2 operator*(Fp2 a, const Fp2& b) { return a *= b; }
  friend Fp2 operator/(Fp2 a, const Fp2& b) { return a /= b; }
  friend Fp2 operator-(const Fp2& a) { return Fp2(-a.a_, -a.b_, a.d_); }
  friend bool operator==(const Fp2& x, const Fp2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::ostream& operator<<(std::ostream& os, const Fp2& x);

  Fp norm() const { return a_ * a_ - d_ * (b_ * b_); }
  Fp2 conjugate() const { return Fp2(a_, -b_, d_); }
  Fp2 inverse() const;
  Fp2 pow(u64 e) const;

 private:
  Fp a_, b_, d_;
};

class QuadraticExtension {
 public:
  explicit QuadraticExtension(const PrimeField& base)
      : base_(base), d_(base.smallest_nonresidue()) {}

  const PrimeField& base() const { return base_; }
  const Fp& nonresidue() const { return d_; }
  Fp2 operator()(const Fp& a) const { return Fp2(a, base_.zero(), d_); }
  Fp2 operator()(const Fp& a, const Fp& b) const { return Fp2(a, b, d_); }
  Fp2 operator()(i64 a, i64 b = 0) const { return Fp2(base_(a), base_(b), d_); }

 private:
  PrimeField base_;
  Fp d_;
};

// Square root in F_{p^2}; elements of the prime field always have one.
std::optional<Fp2> sqrt_in_field(const Fp2& a);

// ---------------------------------------------------------------------------
// Uniform vocabulary used by the generic polynomial code.

inline bool is_zero(const Integer& a) { return a.is_zero(); }
inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline bool is_zero(const Fp2& a) { return a.is_zero(); }

inline Integer zero_like(const Integer&) { return Integer(0); }
inline Integer one_like(const Integer&) { return Integer(1); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Fp zero_like(const Fp& a) { return Fp(0, a.modulus()); }
inline Fp one_like(const Fp& a) { return Fp(1, a.modulus()); }
inline Fp2 zero_like(const Fp2& a) { return Fp2(zero_like(a.re()), zero_like(a.re()), a.nonresidue()); }
inline Fp2 one_like(const Fp2& a) { return Fp2(one_like(a.re()), zero_like(a.re()), a.nonresidue()); }

// An integer constant in the ring of `like`.
inline Integer constant_like(const Integer&, i64 c) { return Integer(c); }
inline Rational constant_like(const Rational&, i64 c) { return Rational(c); }
inline Fp reduce_mod(i64 c, u64 p) {
  i64 r = c % static_cast<i64>(p);
  return Fp(static_cast<u64>(r < 0 ? r + static_cast<i64>(p) : r), p);
}
inline Fp constant_like(const Fp& a, i64 c) { return reduce_mod(c, a.modulus()); }
inline Fp2 constant_like(const Fp2& a, i64 c) {
  return Fp2(reduce_mod(c, a.modulus()), zero_like(a.re()), a.nonresidue());
}

inline Rational inverse(const Rational& a) { return Rational(1) / a; }
inline Fp inverse(const Fp& a) { return a.inverse(); }
inline Fp2 inverse(const Fp2& a) { return a.inverse(); }

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Fp exact_div(const Fp& a, const Fp& b) { return a / b; }
inline Fp2 exact_div(const Fp2& a, const Fp2& b) { return a / b; }

// Characteristic, 0 for Q.
inline u64 characteristic(const Rational&) { return 0; }
inline u64 characteristic(const Fp& a) { return a.modulus(); }
inline u64 characteristic(const Fp2& a) { return a.modulus(); }

inline std::string to_string(const Integer& a) { return a.to_string(); }
inline std::string to_string(const Rational& a) { return a.to_string(); }
inline std::string to_string(const Fp& a) { return std::to_string(a.value()); }
std::string to_string(const Fp2& a);

}  // namespace howe
