#include "howe/upoly.hpp"

namespace howe {

UnivariatePolynomial<Fp> powmod_x(u64 e, const UnivariatePolynomial<Fp>& m, const Fp& shift) {
  const Fp one = one_like(shift);
  UnivariatePolynomial<Fp> base = divmod(UnivariatePolynomial<Fp>({shift, one}), m).second;
  UnivariatePolynomial<Fp> acc(one);
  acc = divmod(acc, m).second;
  while (e) {
    if (e & 1) acc = divmod(acc * base, m).second;
    base = divmod(base * base, m).second;
    e >>= 1;
  }
  return acc;
}

namespace {

// g is monic, squarefree and splits into distinct linear factors.
void split_linear(const UnivariatePolynomial<Fp>& g, std::vector<Fp>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g[0]);
    return;
  }
  const Fp zero = zero_like(g.leading());
  const u64 p = zero.modulus();
  for (u64 a = 0; a < p; ++a) {
    auto t = powmod_x((p - 1) / 2, g, Fp(a, p)) - UnivariatePolynomial<Fp>(one_like(zero));
    if (t.is_zero()) continue;
    auto h = gcd_over_field(g, t);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_linear(h, out);
      split_linear(divmod(g, h).first, out);
      return;
    }
  }
  throw std::logic_error("root splitting did not terminate");
}

}  // namespace

std::vector<Fp> roots_in_prime_field(const UnivariatePolynomial<Fp>& f) {
  if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
  std::vector<Fp> out;
  if (f.degree() == 0) return out;
  const Fp one = one_like(f.leading());
  const u64 p = one.modulus();
  // gcd(f, x^p - x) isolates the product of distinct linear factors.
  auto xp = powmod_x(p, monic(f), zero_like(one));
  auto linear = gcd_over_field(f, xp - UnivariatePolynomial<Fp>({zero_like(one), one}));
  split_linear(linear, out);
  std::sort(out.begin(), out.end(), [](const Fp& a, const Fp& b) { return a.value() < b.value(); });
  return out;
}

}  // namespace howe
