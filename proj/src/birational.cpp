#include "howe/birational.hpp"

#include "howe/upoly.hpp"

namespace howe {

Quintuple<Fp2> lift(const Quintuple<Fp>& q, const QuadraticExtension& ext) {
  return {ext(q.a1), ext(q.a2), ext(q.a3), ext(q.b2), ext(q.b3)};
}

SexticModel<Fp2> lift(const SexticModel<Fp>& m, const QuadraticExtension& ext) {
  SexticModel<Fp2> out;
  for (std::size_t k = 0; k < kNumCoefs; ++k) out.c[k] = ext(m.c[k]);
  out.source = lift(m.source, ext);
  out.normalized = m.normalized;
  return out;
}

Quintuple<Fp> random_howe_quintuple(const PrimeField& field, std::mt19937_64& rng) {
  const u64 p = field.modulus();
  if (p < 7) throw UnsupportedCharacteristic("need p >= 7");
  std::uniform_int_distribution<u64> pick(2, p - 1);
  for (;;) {
    std::array<u64, 5> v;
    for (auto& x : v) x = pick(rng);
    bool distinct = true;
    for (std::size_t i = 0; i < 5 && distinct; ++i)
      for (std::size_t j = i + 1; j < 5; ++j)
        if (v[i] == v[j]) distinct = false;
    if (distinct) return {Fp(v[0], p), Fp(v[1], p), Fp(v[2], p), Fp(v[3], p), Fp(v[4], p)};
  }
}

std::vector<FiberProductPoint<Fp2>> sample_fiber_points(const SexticModel<Fp>& m, const QuadraticExtension& ext,
                                                        std::size_t count, std::mt19937_64& rng) {
  const u64 p = ext.base().modulus();
  const auto& q = m.source;
  std::uniform_int_distribution<u64> pick(0, p - 1);
  std::bernoulli_distribution coin;
  std::vector<FiberProductPoint<Fp2>> out;
  for (std::size_t tries = 0; out.size() < count && tries < 50 * count + 100; ++tries) {
    const Fp x(pick(rng), p);
    const Fp ph = phi_at(q, x);
    if (ph.is_zero()) continue;
    Fp2 y1 = *sqrt_in_field(ext(ph * q1_at(q, x)));
    Fp2 y2 = *sqrt_in_field(ext(ph * q2_at(q, x)));
    if (coin(rng)) y1 = -y1;
    if (coin(rng)) y2 = -y2;
    out.push_back({ext(x), y1, y2});
  }
  return out;
}

std::vector<CurvePoint<Fp2>> sample_curve_points(const SexticModel<Fp>& m, const QuadraticExtension& ext,
                                                 std::size_t count, std::mt19937_64& rng) {
  const u64 p = ext.base().modulus();
  const auto lifted = lift(m, ext);
  std::uniform_int_distribution<u64> pick(0, p - 1);
  std::bernoulli_distribution coin;
  std::vector<CurvePoint<Fp2>> out;
  for (std::size_t tries = 0; out.size() < count && tries < 50 * count + 100; ++tries) {
    const Fp Y(pick(rng), p);
    const Fp y2 = Y * Y, y4 = y2 * y2;
    // f(Y, Z) as a cubic in v = Z².
    UnivariatePolynomial<Fp> cubic(std::vector<Fp>{
        m[Coef::c60] * y4 * y2 + m[Coef::c40] * y4 + m[Coef::c20] * y2,
        m[Coef::c42] * y4 + m[Coef::c22] * y2 + m[Coef::c02], m[Coef::c24] * y2 + m[Coef::c04], m[Coef::c06]});
    const auto roots = roots_in_prime_field(cubic);
    if (roots.empty()) continue;
    std::uniform_int_distribution<std::size_t> which(0, roots.size() - 1);
    Fp2 Z = *sqrt_in_field(ext(roots[which(rng)]));
    if (coin(rng)) Z = -Z;
    CurvePoint<Fp2> C{ext(Y), Z};
    try {
      (void)psi(lifted, C);
    } catch (const OutsideDomain&) {
      continue;
    }
    out.push_back(C);
  }
  return out;
}

RoundTripStats roundtrip(u64 p, std::size_t samples, u64 seed) {
  const PrimeField field(p);
  const QuadraticExtension ext(field);
  std::mt19937_64 rng(seed);
  RoundTripStats st;
  constexpr std::size_t kPerModel = 64;
  while (st.fiber_checked < samples || st.curve_checked < samples) {
    const auto model = build_sextic(random_howe_quintuple(field, rng));
    const auto lifted = lift(model, ext);
    ++st.models;
    if (st.fiber_checked < samples) {
      for (const auto& P : sample_fiber_points(model, ext, kPerModel, rng)) {
        try {
          const auto back = psi(lifted, phi(lifted, P));
          ++st.fiber_checked;
          if (!(back == P)) ++st.fiber_failed;
        } catch (const OutsideDomain&) {
          // h₁ = 0 on the image: outside the isomorphism locus.
        }
      }
    }
    if (st.curve_checked < samples) {
      for (const auto& C : sample_curve_points(model, ext, kPerModel, rng)) {
        const auto back = phi(lifted, psi(lifted, C));
        ++st.curve_checked;
        if (!(back == C)) ++st.curve_failed;
      }
    }
  }
  return st;
}

}  // namespace howe
