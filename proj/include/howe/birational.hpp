#pragma once

#include "howe/exact_arith.hpp"
#include "howe/howe_model.hpp"

#include <cstddef>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace howe {

// Input outside the domain of definition of Φ or Ψ.
class OutsideDomain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// y₁² = φ(x)Q₁(x), y₂² = φ(x)Q₂(x).
template <class F>
struct FiberProductPoint {
  F x, y1, y2;
  friend bool operator==(const FiberProductPoint&, const FiberProductPoint&) = default;
};

template <class F>
struct CurvePoint {
  F Y, Z;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

// x-linear remainder r₃ = h₁x + h₂ of the sequence
//   r₁ = Y²f₂ − Z²f₁,  r₂ = (Y²−Z²)f₁ + Y²x·r₁,
//   r₃ = (Y²−Z²)r₂ − ((σ₁−ρ₁)Y⁴ − (σ₁−τ₁)Y²Z² + Y² − Z²)·r₁.
// h₂ is frozen from a symbolic run of the same sequence; the identity suite
// re-derives it.
template <class F>
std::pair<F, F> h1_h2(const SymmetricFunctions<F>& s, const F& Y, const F& Z) {
  auto k = [&](i64 v) { return constant_like(Y, v); };
  const F y2 = Y * Y, z2 = Z * Z;
  const F y4 = y2 * y2, z4 = z2 * z2;
  const F F1 = -s.sigma1 * s.rho1 + s.sigma2 + s.rho1 * s.rho1 - s.rho2;
  const F F2 = s.sigma1 * s.tau1 + s.sigma1 * s.rho1 - k(2) * s.sigma2 - k(2) * s.tau1 * s.rho1 + s.tau2 + s.rho2;
  const F F3 = s.tau1 - s.rho1;
  const F F4 = -s.sigma1 * s.tau1 + s.sigma2 + s.tau1 * s.tau1 - s.tau2;
  const F h1 = F1 * y4 * y2 + F2 * y4 * z2 + F3 * y4 + F4 * y2 * z4 - F3 * y2 * z2;

  const F e60 = s.sigma1 * s.rho2 - s.sigma3 - s.rho1 * s.rho2;
  const F e42 = -s.sigma1 * s.tau2 - s.sigma1 * s.rho2 + k(2) * s.sigma3 + s.tau1 * s.rho2 + s.tau2 * s.rho1;
  const F e40 = s.rho2 - s.tau2;
  const F e24 = s.sigma1 * s.tau2 - s.sigma3 - s.tau1 * s.tau2;
  const F h2 = e60 * y4 * y2 + e42 * y4 * z2 + e40 * y4 + e24 * y2 * z4 - e40 * y2 * z2;
  return {h1, h2};
}

template <class F>
std::pair<F, F> h1_h2(const Quintuple<F>& q, const F& Y, const F& Z) {
  return h1_h2(symmetric_functions(q), Y, Z);
}

template <class F>
F phi_at(const Quintuple<F>& q, const F& x) {
  return x * (x - one_like(x)) * (x - q.a1);
}
template <class F>
F q1_at(const Quintuple<F>& q, const F& x) { return (x - q.a2) * (x - q.a3); }
template <class F>
F q2_at(const Quintuple<F>& q, const F& x) { return (x - q.b2) * (x - q.b3); }

template <class F>
bool on_fiber_product(const Quintuple<F>& q, const FiberProductPoint<F>& P) {
  const F ph = phi_at(q, P.x);
  return P.y1 * P.y1 == ph * q1_at(q, P.x) && P.y2 * P.y2 == ph * q2_at(q, P.x);
}

// Φ(x, y₁, y₂) = (y₁/φ(x), y₂/φ(x)).
template <class F>
CurvePoint<F> phi(const SexticModel<F>& m, const FiberProductPoint<F>& P) {
  const auto& q = m.source;
  if (!on_fiber_product(q, P)) throw std::invalid_argument("point is not on the fibre product");
  const F ph = phi_at(q, P.x);
  if (is_zero(ph)) throw OutsideDomain("phi(x) = 0: fibre-product point is a branch point");
  const F inv = inverse(ph);
  CurvePoint<F> out{P.y1 * inv, P.y2 * inv};
  if (!is_zero(m.evaluate(out.Y, out.Z))) throw std::logic_error("image of phi is off the sextic");
  return out;
}

// Ψ(Y, Z) = (x, φ(x)Y, φ(x)Z) with x = −h₂/h₁.
template <class F>
FiberProductPoint<F> psi(const SexticModel<F>& m, const CurvePoint<F>& C) {
  const auto& q = m.source;
  if (!is_zero(m.evaluate(C.Y, C.Z))) throw std::invalid_argument("point is not on the sextic");
  const auto [h1, h2] = h1_h2(q, C.Y, C.Z);
  if (is_zero(h1)) throw OutsideDomain("h1 vanishes at the point");
  const F x = -h2 * inverse(h1);
  const F ph = phi_at(q, x);
  if (is_zero(ph)) throw OutsideDomain("phi(x) = 0 at the recovered abscissa");
  FiberProductPoint<F> out{x, ph * C.Y, ph * C.Z};
  if (!on_fiber_product(q, out)) throw std::logic_error("image of psi is off the fibre product");
  return out;
}

// ---------------------------------------------------------------------------
// Lifting to F_{p²} and samplers.

Quintuple<Fp2> lift(const Quintuple<Fp>& q, const QuadraticExtension& ext);
SexticModel<Fp2> lift(const SexticModel<Fp>& m, const QuadraticExtension& ext);

// Random x ∈ F_p with φ(x) ≠ 0, random square-root signs.
std::vector<FiberProductPoint<Fp2>> sample_fiber_points(const SexticModel<Fp>& m, const QuadraticExtension& ext,
                                                        std::size_t count, std::mt19937_64& rng);

// Y ∈ F_p, v = Z² a root in F_p of f(Y, ·), Z = ±√v ∈ F_{p²}; only points with
// h₁ ≠ 0 are returned.
std::vector<CurvePoint<Fp2>> sample_curve_points(const SexticModel<Fp>& m, const QuadraticExtension& ext,
                                                 std::size_t count, std::mt19937_64& rng);

struct RoundTripStats {
  std::size_t fiber_checked = 0, fiber_failed = 0;
  std::size_t curve_checked = 0, curve_failed = 0;
  std::size_t models = 0;
  bool ok() const { return fiber_failed == 0 && curve_failed == 0; }
};

// Ψ∘Φ and Φ∘Ψ on at least `samples` points each, over random Howe quintuples.
RoundTripStats roundtrip(u64 p, std::size_t samples, u64 seed);

Quintuple<Fp> random_howe_quintuple(const PrimeField& field, std::mt19937_64& rng);

}  // namespace howe
