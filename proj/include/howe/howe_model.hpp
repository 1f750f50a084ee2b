#pragma once

#include "howe/exact_arith.hpp"
#include "howe/upoly.hpp"

#include <array>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace howe {

class NotHoweType : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedCharacteristic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// (α₁, α₂, α₃, β₂, β₃). Roots of φ are 0, 1, α₁; of Q₁ are α₂, α₃; of Q₂ are β₂, β₃.
template <class F>
struct Quintuple {
  F a1, a2, a3, b2, b3;

  std::array<F, 5> values() const { return {a1, a2, a3, b2, b3}; }
  friend bool operator==(const Quintuple&, const Quintuple&) = default;
};

inline constexpr std::array<std::string_view, 5> kQuintupleNames = {"α₁", "α₂", "α₃", "β₂", "β₃"};

// Throws NotHoweType naming the first violated constraint.
template <class F>
void validate_howe(const Quintuple<F>& q) {
  const auto v = q.values();
  const F zero = zero_like(v[0]);
  const F one = one_like(v[0]);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == zero) throw NotHoweType("quintuple not of Howe type: " + std::string(kQuintupleNames[i]) + " = 0");
    if (v[i] == one) throw NotHoweType("quintuple not of Howe type: " + std::string(kQuintupleNames[i]) + " = 1");
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j])
        throw NotHoweType("quintuple not of Howe type: " + std::string(kQuintupleNames[i]) + " = " +
                          std::string(kQuintupleNames[j]));
}

template <class F>
void check_characteristic(const F& like) {
  const u64 p = characteristic(like);
  if (p != 0 && p < 7)
    throw UnsupportedCharacteristic("unsupported characteristic " + std::to_string(p) + " (need p >= 7)");
}

// Elementary symmetric functions of the roots of φ, Q₁, Q₂. For the Howe setup
// σ₃ = 0; it is carried explicitly so formulas read the same at every level.
template <class R>
struct SymmetricFunctions {
  R sigma1, sigma2, sigma3, tau1, tau2, rho1, rho2;
};

template <class R>
SymmetricFunctions<R> symmetric_functions(const R& a1, const R& a2, const R& a3, const R& b2, const R& b3) {
  const R one = one_like(a1);
  return {one + a1, a1, zero_like(a1), a2 + a3, a2 * a3, b2 + b3, b2 * b3};
}

template <class F>
SymmetricFunctions<F> symmetric_functions(const Quintuple<F>& q) {
  return symmetric_functions(q.a1, q.a2, q.a3, q.b2, q.b3);
}

// φ = x³ − σ₁x² + σ₂x − σ₃, Q₁ = x² − τ₁x + τ₂, Q₂ = x² − ρ₁x + ρ₂.
template <class R>
UnivariatePolynomial<R> phi_polynomial(const SymmetricFunctions<R>& s) {
  const R one = one_like(s.sigma1);
  return UnivariatePolynomial<R>::from_descending({one, -s.sigma1, s.sigma2, -s.sigma3});
}
template <class R>
UnivariatePolynomial<R> q1_polynomial(const SymmetricFunctions<R>& s) {
  return UnivariatePolynomial<R>::from_descending({one_like(s.sigma1), -s.tau1, s.tau2});
}
template <class R>
UnivariatePolynomial<R> q2_polynomial(const SymmetricFunctions<R>& s) {
  return UnivariatePolynomial<R>::from_descending({one_like(s.sigma1), -s.rho1, s.rho2});
}

// ---------------------------------------------------------------------------

enum class Coef : std::size_t { c60 = 0, c42, c40, c24, c22, c20, c06, c04, c02 };
inline constexpr std::size_t kNumCoefs = 9;
// (deg_Y, deg_Z) per coefficient, in the display order (Y-degree, then Z-degree, descending).
inline constexpr std::array<std::pair<unsigned, unsigned>, kNumCoefs> kCoefExponents = {
    {{6, 0}, {4, 2}, {4, 0}, {2, 4}, {2, 2}, {2, 0}, {0, 6}, {0, 4}, {0, 2}}};
inline constexpr std::array<std::string_view, kNumCoefs> kCoefNames = {"c60", "c42", "c40", "c24", "c22",
                                                                       "c20", "c06", "c04", "c02"};

// f(Y, Z) = Σ c_ij Y^i Z^j over the nine even monomials, constant term zero.
template <class F>
struct SexticModel {
  std::array<F, kNumCoefs> c;
  Quintuple<F> source;
  bool normalized = false;

  const F& operator[](Coef k) const { return c[static_cast<std::size_t>(k)]; }
  F& operator[](Coef k) { return c[static_cast<std::size_t>(k)]; }

  // f in terms of u = Y², v = Z².
  F evaluate_uv(const F& u, const F& v) const {
    const auto& k = c;
    return u * (u * (k[0] * u + k[1] * v + k[2]) + v * (k[3] * v + k[4]) + k[5]) +
           v * (v * (k[6] * v + k[7]) + k[8]);
  }
  F evaluate(const F& Y, const F& Z) const { return evaluate_uv(Y * Y, Z * Z); }

  friend bool operator==(const SexticModel&, const SexticModel&) = default;
};

namespace detail {

inline std::pair<bool, std::string> signed_repr(const Fp& a) { return {false, std::to_string(a.value())}; }
inline std::pair<bool, std::string> signed_repr(const Fp2& a) { return {false, "(" + to_string(a) + ")"}; }
inline std::pair<bool, std::string> signed_repr(const Rational& a) {
  return {a.sign() < 0, (a.sign() < 0 ? -a : a).to_string()};
}
inline bool is_unit_magnitude(const std::string& s) { return s == "1"; }

}  // namespace detail

// "27 Y^6 + 11 Y^4 Z^2 + ..." with zero terms omitted.
template <class F>
std::string to_string(const SexticModel<F>& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < kNumCoefs; ++k) {
    if (is_zero(m.c[k])) continue;
    auto [neg, mag] = detail::signed_repr(m.c[k]);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const auto [dy, dz] = kCoefExponents[k];
    bool wrote = false;
    if (!detail::is_unit_magnitude(mag)) {
      os << mag;
      wrote = true;
    }
    if (dy) {
      os << (wrote ? " " : "") << "Y^" << dy;
      wrote = true;
    }
    if (dz) os << (wrote ? " " : "") << "Z^" << dz;
  }
  return first ? "0" : os.str();
}

// Res_x(f₁, f₂) for f₁ = φY² − Q₁, f₂ = φZ² − Q₂, computed over F[u][v] with
// u = Y², v = Z². No Howe-type validation; callers that need it use build_sextic.
template <class F>
std::array<F, kNumCoefs> sextic_coefficients(const Quintuple<F>& q) {
  using U = UnivariatePolynomial<F>;  // in u
  using B = UnivariatePolynomial<U>;  // in v over F[u]
  const auto s = symmetric_functions(q);
  const auto phi = phi_polynomial(s), q1 = q1_polynomial(s), q2 = q2_polynomial(s);
  const F zero = zero_like(q.a1);

  std::vector<B> f1(4), f2(4);
  for (std::size_t k = 0; k <= 3; ++k) {
    const F pk = phi.coefficient(k, zero);
    f1[k] = B(U(std::vector<F>{-q1.coefficient(k, zero), pk}));
    f2[k] = B(std::vector<U>{U(-q2.coefficient(k, zero)), U(pk)});
  }
  const B res = resultant(UnivariatePolynomial<B>(f1), UnivariatePolynomial<B>(f2));

  std::array<F, kNumCoefs> out;
  std::size_t seen_terms = 0;
  for (std::size_t k = 0; k < kNumCoefs; ++k) {
    const auto [dy, dz] = kCoefExponents[k];
    const U col = res.coefficient(dz / 2, U());
    out[k] = col.coefficient(dy / 2, zero);
    if (!is_zero(out[k])) ++seen_terms;
  }
  std::size_t total_terms = 0;
  for (const auto& col : res.coefficients())
    for (const auto& x : col.coefficients())
      if (!is_zero(x)) ++total_terms;
  if (total_terms != seen_terms) throw std::logic_error("resultant has a monomial outside the expected support");
  return out;
}

// The four leading/trailing coefficient identities c60 = −Res(φ,Q₂),
// c06 = Res(φ,Q₁), c20 = −Res(Q₁,Q₂), c02 = Res(Q₁,Q₂).
template <class F>
bool boundary_coefficients_consistent(const std::array<F, kNumCoefs>& c, const Quintuple<F>& q) {
  const auto s = symmetric_functions(q);
  const auto phi = phi_polynomial(s), q1 = q1_polynomial(s), q2 = q2_polynomial(s);
  const F r12 = resultant(q1, q2);
  return c[0] == -resultant(phi, q2) && c[6] == resultant(phi, q1) && c[5] == -r12 && c[8] == r12;
}

template <class F>
SexticModel<F> build_sextic(const Quintuple<F>& q) {
  check_characteristic(q.a1);
  validate_howe(q);
  SexticModel<F> m{sextic_coefficients(q), q, false};
  if (!boundary_coefficients_consistent(m.c, q)) throw std::logic_error("resultant cross-check failed");
  return m;
}

// Scales so that c06 = 1. c06 = Res(φ, Q₁) is nonzero for Howe quintuples.
template <class F>
SexticModel<F> normalize(const SexticModel<F>& m) {
  const F& c06 = m[Coef::c06];
  if (is_zero(c06)) throw std::domain_error("c06 vanishes; model is not of Howe type");
  const F inv = inverse(c06);
  SexticModel<F> out = m;
  for (auto& x : out.c) x = x * inv;
  out.normalized = true;
  return out;
}

// λ = (α₃−β₂)(β₃−α₂) / ((α₃−α₂)(β₃−β₂)).
template <class F>
F legendre_lambda(const Quintuple<F>& q) {
  validate_howe(q);
  return ((q.a3 - q.b2) * (q.b3 - q.a2)) / ((q.a3 - q.a2) * (q.b3 - q.b2));
}

// ---------------------------------------------------------------------------

struct GenusInfo {
  unsigned genus = 0;
  bool hyperelliptic = false;
  unsigned g3 = 0;
};

// Fibre product of hyperelliptic curves of genus g1 ≤ g2 whose branch loci
// share r points. Requires 0 < g1 ≤ g2 and r ≤ g1 + g2 + 1.
GenusInfo generalized_howe_genus(unsigned g1, unsigned g2, unsigned r);
std::string to_string(const GenusInfo& g);

// (q−2)(q−3)(q−4)(q−5)(q−6)/8 for q ≥ 7.
Integer count_howe_triples(u64 q);

// Canonical key of an unordered Howe triple over F_p: α₁ and two unordered
// pairs, each pair sorted and the pairs sorted.
struct HoweTriple {
  u64 p = 0;
  u64 a1 = 0;
  std::array<u64, 2> first{}, second{};

  Quintuple<Fp> quintuple() const;
  friend bool operator==(const HoweTriple&, const HoweTriple&) = default;
  friend auto operator<=>(const HoweTriple&, const HoweTriple&) = default;
};

HoweTriple canonical_triple(const Quintuple<Fp>& q);
std::string to_string(const HoweTriple& t);

Quintuple<Fp> make_quintuple(const PrimeField& field, const std::array<i64, 5>& values);

}  // namespace howe
