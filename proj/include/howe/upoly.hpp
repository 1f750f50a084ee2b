#pragma once

#include "howe/exact_arith.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace howe {

// Dense polynomial over a commutative ring R. Coefficients are stored in
// ascending order with no trailing zeros; the zero polynomial is empty and has
// degree kDegreeOfZero.
template <class R>
class UnivariatePolynomial {
 public:
  using coefficient_type = R;
  static constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<R> ascending) : c_(std::move(ascending)) { trim(); }
  // Constant polynomial.
  explicit UnivariatePolynomial(const R& c) {
    if (!zero_(c)) c_.push_back(c);
  }
  static UnivariatePolynomial monomial(const R& c, std::size_t k) {
    std::vector<R> v(k + 1, zero_like(c));
    v[k] = c;
    return UnivariatePolynomial(std::move(v));
  }
  // From coefficients listed highest power first.
  static UnivariatePolynomial from_descending(std::vector<R> desc) {
    std::reverse(desc.begin(), desc.end());
    return UnivariatePolynomial(std::move(desc));
  }

  int degree() const { return c_.empty() ? kDegreeOfZero : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coefficients() const { return c_; }
  const R& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }
  // Coefficient of x^k, or `zero` past the degree.
  R coefficient(std::size_t k, const R& zero) const { return k < c_.size() ? c_[k] : zero; }
  const R& operator[](std::size_t k) const { return c_.at(k); }

  template <class S>
  S evaluate(const S& x) const {
    S acc = zero_like(x);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
    return acc;
  }
  // Horner with an explicit embedding R -> S.
  template <class S, class Embed>
  S evaluate(const S& x, Embed embed) const {
    S acc = zero_like(x);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + embed(*it);
    return acc;
  }

  UnivariatePolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      d.push_back(zero_(c_[i]) ? c_[i] : constant_like(c_[i], static_cast<i64>(i)) * c_[i]);
    return UnivariatePolynomial(std::move(d));
  }

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_like(o.c_.back()));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_like(o.c_.back()));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (zero_(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UnivariatePolynomial(std::move(r));
  }
  UnivariatePolynomial& operator*=(const UnivariatePolynomial& o) { return *this = *this * o; }
  friend UnivariatePolynomial operator*(const R& s, UnivariatePolynomial a) {
    for (auto& x : a.c_) x = s * x;
    a.trim();
    return a;
  }
  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      if (zero_(c_[k])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << str_(c_[k]) << ")";
      if (k >= 1) os << "*" << var;
      if (k >= 2) os << "^" << k;
    }
    return os.str();
  }

 private:
  static bool zero_(const R& x) {
    using howe::is_zero;
    return is_zero(x);
  }
  static std::string str_(const R& x) {
    using howe::to_string;
    return to_string(x);
  }
  void trim() {
    while (!c_.empty() && zero_(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
bool is_zero(const UnivariatePolynomial<R>& a) { return a.is_zero(); }
// Polynomials have no intrinsic context; zero_like is always the empty polynomial
// and one_like needs a nonzero witness.
template <class R>
UnivariatePolynomial<R> zero_like(const UnivariatePolynomial<R>&) { return {}; }
template <class R>
UnivariatePolynomial<R> one_like(const UnivariatePolynomial<R>& a) {
  return UnivariatePolynomial<R>(one_like(a.leading()));
}
template <class R>
UnivariatePolynomial<R> constant_like(const UnivariatePolynomial<R>& a, i64 c) {
  return UnivariatePolynomial<R>(constant_like(a.leading(), c));
}
template <class R>
std::string to_string(const UnivariatePolynomial<R>& a) { return a.to_string(); }

// Long division over a field: returns (q, r) with a = q b + r, deg r < deg b.
template <class F>
std::pair<UnivariatePolynomial<F>, UnivariatePolynomial<F>> divmod(const UnivariatePolynomial<F>& a,
                                                                    const UnivariatePolynomial<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {{}, a};
  const F lead_inv = inverse(b.leading());
  std::vector<F> rem = a.coefficients();
  std::vector<F> q(a.degree() - b.degree() + 1, zero_like(b.leading()));
  const auto& bc = b.coefficients();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    F t = rem[k + b.degree()] * lead_inv;
    q[k] = t;
    if (is_zero(t)) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= t * bc[j];
  }
  rem.resize(b.degree());
  return {UnivariatePolynomial<F>(std::move(q)), UnivariatePolynomial<F>(std::move(rem))};
}

// Division in R[x] for an integral domain R when b is known to divide a;
// throws std::domain_error otherwise. Each step is exact in R whenever b | a.
template <class R>
UnivariatePolynomial<R> exact_div(const UnivariatePolynomial<R>& a, const UnivariatePolynomial<R>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<R> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  std::vector<R> q(a.degree() - db + 1, zero_like(b.leading()));
  for (int k = a.degree() - db; k >= 0; --k) {
    if (is_zero(rem[k + db])) continue;
    R t = exact_div(rem[k + db], b.leading());
    for (int j = 0; j <= db; ++j) rem[k + j] -= t * bc[j];
    q[k] = std::move(t);
  }
  for (int j = 0; j < db; ++j)
    if (!is_zero(rem[j])) throw std::domain_error("inexact polynomial division");
  return UnivariatePolynomial<R>(std::move(q));
}

template <class F>
UnivariatePolynomial<F> monic(const UnivariatePolynomial<F>& a) {
  if (a.is_zero()) return a;
  return inverse(a.leading()) * a;
}

// Monic gcd over a field. gcd(0, 0) is rejected.
template <class F>
UnivariatePolynomial<F> gcd_over_field(UnivariatePolynomial<F> a, UnivariatePolynomial<F> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// ---------------------------------------------------------------------------
// Matrices and determinants.

template <class R>
using Matrix = std::vector<std::vector<R>>;

// Fraction-free Gaussian elimination with row pivoting. `one` is the unit of R,
// needed for the empty matrix and as the initial divisor.
template <class R>
R determinant_bareiss(Matrix<R> m, const R& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  R prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t swap = k + 1;
      while (swap < n && is_zero(m[swap][k])) ++swap;
      if (swap == n) return zero_like(one);
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_div(t, prev);
      }
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return negate ? -det : det;
}

// Rows: deg(g) shifted copies of f (descending powers), then deg(f) copies of g.
template <class R>
Matrix<R> sylvester_matrix(const UnivariatePolynomial<R>& f, const UnivariatePolynomial<R>& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("Sylvester matrix of a zero polynomial");
  const int m = f.degree(), n = g.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  const R zero = zero_like(f.leading());
  Matrix<R> s(size, std::vector<R>(size, zero));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = f.coefficients()[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = g.coefficients()[n - k];
  return s;
}

template <class R>
R resultant(const UnivariatePolynomial<R>& f, const UnivariatePolynomial<R>& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  return determinant_bareiss(sylvester_matrix(f, g), one_like(f.leading()));
}

// ---------------------------------------------------------------------------
// Root finding over prime fields (distinct roots, ascending).

std::vector<Fp> roots_in_prime_field(const UnivariatePolynomial<Fp>& f);

// x^e mod m over F_p.
UnivariatePolynomial<Fp> powmod_x(u64 e, const UnivariatePolynomial<Fp>& m, const Fp& shift);

}  // namespace howe
