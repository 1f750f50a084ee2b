#include "howe/identities.hpp"

#include "howe/birational.hpp"
#include "howe/upoly.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace howe {

namespace {

// Transcribed from the printed statements. p1 carries the corrected sign on
// α₂α₃β₂²; see the README.
const std::vector<FixtureText> kFixtures = {
    {"p1",
     "a1*a2*a3*b2 + a1*a2*a3*b3 - a1*a2*a3 - a1*a2*b2*b3 - a1*a3*b2*b3 + a1*b2*b3 - a2*a3*b2^2 - a2*a3*b2*b3 + a2*a3*b2 - a2*a3*b3^2 + a2*a3*b3 + a2*b2^2*b3 + a2*b2*b3^2 - a2*b2*b3 + a3*b2^2*b3 + a3*b2*b3^2 - a3*b2*b3 - b2^2*b3^2"},
    {"p2",
     "a1*a2*a3*b2 + a1*a2*a3*b3 - a1*a2*a3 - a1*a2*b2*b3 - a1*a3*b2*b3 + a1*b2*b3 + a2^2*a3^2 - a2^2*a3*b2 - a2^2*a3*b3 + a2^2*b2*b3 - a2*a3^2*b2 - a2*a3^2*b3 + a2*a3*b2*b3 + a2*a3*b2 + a2*a3*b3 - a2*b2*b3 + a3^2*b2*b3 - a3*b2*b3"},
    {"I.eta1",
     "a1*a2*a3*b2 + a1*a2*a3*b3 - a1*a2*a3 - a1*a2*b2*b3 - a1*a3*b2*b3 + a1*b2*b3 - a2^2*a3*b3 + a2^2*b2*b3 - a2*a3*b2^2 + a2*a3*b2 + a2*a3*b3 - a2*b2*b3 + a3*b2^2*b3 - a3*b2*b3"},
    {"I.eta2",
     "a1*a2*a3*b2 + a1*a2*a3*b3 - a1*a2*a3 - a1*a2*b2*b3 - a1*a3*b2*b3 + a1*b2*b3 - a2^2*a3*b3 + a2^2*a3 + a2^2*b2*b3 - a2^2*b2 - a2*a3*b2^2 + a2*b2^2 + a3*b2^2*b3 - b2^2*b3"},
    {"I.eta3",
     "a1*a2^2*a3 - a1*a2^2*b2 - a1*a2*a3 + a1*a2*b2^2 - a1*b2^2*b3 + a1*b2*b3 - a2^2*a3*b3 + a2^2*b2*b3 - a2*a3*b2^2 + a2*a3*b2 + a2*a3*b3 - a2*b2*b3 + a3*b2^2*b3 - a3*b2*b3"},
    {"I.eta2'",
     "a1*a2*a3*b2 + a1*a2*a3*b3 - a1*a2*a3 - a1*a2*b2*b3 - a1*a3*b2*b3 + a1*b2*b3 + a2^2*a3*b2 - a2^2*a3*b3 - a2^2*b2^2 + a2^2*b2*b3 - 2*a2*a3*b2^2 - a2*a3*b2*b3 + a2*a3*b2 + a2*a3*b3 + a2*b2^3 + a2*b2^2*b3 - a2*b2*b3 + 2*a3*b2^2*b3 - a3*b2*b3 - b2^3*b3"},
    {"I.diff1",
     "-b3*(a3-b2)*(a2-b3)*(a2-b2)"},
    {"I.diff2",
     "-b2*(a3-b2)*(a2-b3)*(a2-b2)"},
    {"I.diff3",
     "-(b3-1)*(a3-b2)*(a2-b3)*(a2-b2)"},
    {"I.diff4",
     "-(b2-1)*(a3-b2)*(a2-b3)*(a2-b2)"},
    {"I.diff5",
     "(a1-b3)*(a3-b2)*(a2-b3)*(a2-b2)"},
    {"I.diff6",
     "(a1-b2)*(a3-b2)*(a2-b3)*(a2-b2)"},
    {"II.eta1",
     "a1*a2*a3*b2 + a1*a2*a3*b3 - a1*a2*a3 - a1*a2*b2*b3 - a1*a3*b2*b3 + a1*b2*b3 - a2^2*a3*b2 + a2^2*b2*b3 + a2*a3*b2 - a2*a3*b3^2 + a2*a3*b3 - a2*b2*b3 + a3*b2*b3^2 - a3*b2*b3"},
    {"II.eta2",
     "a1*a2*a3*b2 + a1*a2*a3*b3 - a1*a2*a3 - a1*a2*b2*b3 - a1*a3*b2*b3 + a1*b2*b3 - a2^2*a3*b2 + a2^2*a3 + a2^2*b2*b3 - a2^2*b3 - a2*a3*b3^2 + a2*b3^2 + a3*b2*b3^2 - b2*b3^2"},
    {"II.eta3",
     "a1*a2^2*a3 - a1*a2^2*b3 - a1*a2*a3 + a1*a2*b3^2 - a1*b2*b3^2 + a1*b2*b3 - a2^2*a3*b2 + a2^2*b2*b3 + a2*a3*b2 - a2*a3*b3^2 + a2*a3*b3 - a2*b2*b3 + a3*b2*b3^2 - a3*b2*b3"},
    {"II.eta2'",
     "a1*a2*a3*b2 + a1*a2*a3*b3 - a1*a2*a3 - a1*a2*b2*b3 - a1*a3*b2*b3 + a1*b2*b3 - a2^2*a3*b2 + a2^2*a3*b3 + a2^2*b2*b3 - a2^2*b3^2 - a2*a3*b2*b3 + a2*a3*b2 - 2*a2*a3*b3^2 + a2*a3*b3 + a2*b2*b3^2 - a2*b2*b3 + a2*b3^3 + 2*a3*b2*b3^2 - a3*b2*b3 - b2*b3^3"},
    {"II.diff1",
     "-b2*(a3-b3)*(a2-b3)*(a2-b2)"},
    {"II.diff2",
     "-b3*(a3-b3)*(a2-b3)*(a2-b2)"},
    {"II.diff3",
     "-(b2-1)*(a3-b3)*(a2-b3)*(a2-b2)"},
    {"II.diff4",
     "-(b3-1)*(a3-b3)*(a2-b3)*(a2-b2)"},
    {"II.diff5",
     "(a1-b2)*(a3-b3)*(a2-b3)*(a2-b2)"},
    {"II.diff6",
     "(a1-b3)*(a3-b3)*(a2-b3)*(a2-b2)"},
    {"III.eta1",
     "a1*a2*a3*b2 + a1*a2*a3*b3 - a1*a2*a3 - a1*a2*b2*b3 - a1*a3*b2*b3 + a1*b2*b3 - a2*a3^2*b3 - a2*a3*b2^2 + a2*a3*b2 + a2*a3*b3 + a2*b2^2*b3 - a2*b2*b3 + a3^2*b2*b3 - a3*b2*b3"},
    {"III.eta2",
     "a1*a2*a3*b2 + a1*a2*a3*b3 - a1*a2*a3 - a1*a2*b2*b3 - a1*a3*b2*b3 + a1*b2*b3 - a2*a3^2*b3 + a2*a3^2 - a2*a3*b2^2 + a2*b2^2*b3 + a3^2*b2*b3 - a3^2*b2 + a3*b2^2 - b2^2*b3"},
    {"III.eta3",
     "a1*a2*a3^2 - a1*a2*a3 - a1*a3^2*b2 + a1*a3*b2^2 - a1*b2^2*b3 + a1*b2*b3 - a2*a3^2*b3 - a2*a3*b2^2 + a2*a3*b2 + a2*a3*b3 + a2*b2^2*b3 - a2*b2*b3 + a3^2*b2*b3 - a3*b2*b3"},
    {"III.eta2'",
     "a1*a2*a3*b2 + a1*a2*a3*b3 - a1*a2*a3 - a1*a2*b2*b3 - a1*a3*b2*b3 + a1*b2*b3 + a2*a3^2*b2 - a2*a3^2*b3 - 2*a2*a3*b2^2 - a2*a3*b2*b3 + a2*a3*b2 + a2*a3*b3 + 2*a2*b2^2*b3 - a2*b2*b3 - a3^2*b2^2 + a3^2*b2*b3 + a3*b2^3 + a3*b2^2*b3 - a3*b2*b3 - b2^3*b3"},
    {"III.diff1",
     "-b3*(a3-b3)*(a3-b2)*(a2-b2)"},
    {"III.diff2",
     "-b2*(a3-b3)*(a3-b2)*(a2-b2)"},
    {"III.diff3",
     "-(b3-1)*(a3-b3)*(a3-b2)*(a2-b2)"},
    {"III.diff4",
     "-(b2-1)*(a3-b3)*(a3-b2)*(a2-b2)"},
    {"III.diff5",
     "(a1-b3)*(a3-b3)*(a3-b2)*(a2-b2)"},
    {"III.diff6",
     "(a1-b2)*(a3-b3)*(a3-b2)*(a2-b2)"},
    {"IV.eta1",
     "a1*a2*a3*b2 + a1*a2*a3*b3 - a1*a2*a3 - a1*a2*b2*b3 - a1*a3*b2*b3 + a1*b2*b3 - a2*a3^2*b2 + a2*a3*b2 - a2*a3*b3^2 + a2*a3*b3 + a2*b2*b3^2 - a2*b2*b3 + a3^2*b2*b3 - a3*b2*b3"},
    {"IV.eta2",
     "a1*a2*a3*b2 + a1*a2*a3*b3 - a1*a2*a3 - a1*a2*b2*b3 - a1*a3*b2*b3 + a1*b2*b3 - a2*a3^2*b2 + a2*a3^2 - a2*a3*b3^2 + a2*b2*b3^2 + a3^2*b2*b3 - a3^2*b3 + a3*b3^2 - b2*b3^2"},
    {"IV.eta3",
     "a1*a2*a3^2 - a1*a2*a3 - a1*a3^2*b3 + a1*a3*b3^2 - a1*b2*b3^2 + a1*b2*b3 - a2*a3^2*b2 + a2*a3*b2 - a2*a3*b3^2 + a2*a3*b3 + a2*b2*b3^2 - a2*b2*b3 + a3^2*b2*b3 - a3*b2*b3"},
    {"IV.eta2'",
     "a1*a2*a3*b2 + a1*a2*a3*b3 - a1*a2*a3 - a1*a2*b2*b3 - a1*a3*b2*b3 + a1*b2*b3 - a2*a3^2*b2 + a2*a3^2*b3 - a2*a3*b2*b3 + a2*a3*b2 - 2*a2*a3*b3^2 + a2*a3*b3 + 2*a2*b2*b3^2 - a2*b2*b3 + a3^2*b2*b3 - a3^2*b3^2 + a3*b2*b3^2 - a3*b2*b3 + a3*b3^3 - b2*b3^3"},
    {"IV.diff1",
     "-b2*(a3-b3)*(a3-b2)*(a2-b3)"},
    {"IV.diff2",
     "-b3*(a3-b3)*(a3-b2)*(a2-b3)"},
    {"IV.diff3",
     "-(b2-1)*(a3-b3)*(a3-b2)*(a2-b3)"},
    {"IV.diff4",
     "-(b3-1)*(a3-b3)*(a3-b2)*(a2-b3)"},
    {"IV.diff5",
     "(a1-b2)*(a3-b3)*(a3-b2)*(a2-b3)"},
    {"IV.diff6",
     "(a1-b3)*(a3-b3)*(a3-b2)*(a2-b3)"},
};

}  // namespace

const std::vector<FixtureText>& fixture_texts() { return kFixtures; }

u64 fnv1a64(std::string_view s) {
  u64 h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

Mpoly fixture(std::string_view name) {
  for (const auto& f : kFixtures)
    if (f.name == name) return parse_polynomial(f.text);
  throw std::out_of_range("no fixture named " + std::string(name));
}

}  // namespace

Fixtures default_fixtures() {
  Fixtures fx;
  fx.p1 = fixture("p1");
  fx.p2 = fixture("p2");
  for (std::string c : {"I", "II", "III", "IV"}) {
    EtaCase e;
    e.name = c;
    e.eta1 = fixture(c + ".eta1");
    e.eta2 = fixture(c + ".eta2");
    e.eta3 = fixture(c + ".eta3");
    e.eta2p = fixture(c + ".eta2'");
    for (std::size_t k = 0; k < 6; ++k) e.differences[k] = fixture(c + ".diff" + std::to_string(k + 1));
    fx.eta.push_back(std::move(e));
  }
  return fx;
}

// ---------------------------------------------------------------------------

namespace {

Mpoly var(Var v) { return Mpoly::variable(v); }

UnivariatePolynomial<Mpoly> f_polynomial(const UnivariatePolynomial<Mpoly>& phi, const UnivariatePolynomial<Mpoly>& q,
                                         const Mpoly& w2) {
  return w2 * phi - q;
}

SymbolicSextic compute_symbolic_sextic() {
  const auto s = symmetric_functions(var(Var::a1), var(Var::a2), var(Var::a3), var(Var::b2), var(Var::b3));
  const auto phi = phi_polynomial(s);
  const Mpoly y2 = Mpoly::variable(Var::Y, 2), z2 = Mpoly::variable(Var::Z, 2);
  SymbolicSextic out;
  out.f = resultant(f_polynomial(phi, q1_polynomial(s), y2), f_polynomial(phi, q2_polynomial(s), z2));
  Mpoly rebuilt;
  for (std::size_t k = 0; k < kNumCoefs; ++k) {
    const auto [dy, dz] = kCoefExponents[k];
    out.c[k] = out.f.coefficient(Var::Y, dy).coefficient(Var::Z, dz);
    rebuilt += out.c[k] * Mpoly::variable(Var::Y, dy) * Mpoly::variable(Var::Z, dz);
  }
  out.support_ok = rebuilt == out.f;
  return out;
}

}  // namespace

const SymbolicSextic& symbolic_sextic() {
  static const SymbolicSextic s = compute_symbolic_sextic();
  return s;
}

// ---------------------------------------------------------------------------
// Both sides of every record are written once, generically, and evaluated
// either over Z[α, β, Y, Z] or at a point of F_p⁷.

namespace {

template <class T>
struct Env;

template <>
struct Env<Mpoly> {
  Mpoly v(Var x) const { return Mpoly::variable(x); }
  Mpoly of(const Mpoly& m) const { return m; }
  Mpoly k(i64 c) const { return Mpoly(c); }
};

template <>
struct Env<Fp> {
  Point pt;
  Fp v(Var x) const { return pt[static_cast<std::size_t>(x)]; }
  Fp of(const Mpoly& m) const { return m.evaluate(pt); }
  Fp k(i64 c) const { return constant_like(pt[0], c); }
};

template <class T>
SymmetricFunctions<T> sym(const Env<T>& e) {
  return symmetric_functions(e.v(Var::a1), e.v(Var::a2), e.v(Var::a3), e.v(Var::b2), e.v(Var::b3));
}

template <class T>
std::array<T, 4> F_system(const Env<T>& e) {
  const auto s = sym(e);
  return {-s.sigma1 * s.rho1 + s.sigma2 + s.rho1 * s.rho1 - s.rho2,
          s.sigma1 * s.tau1 + s.sigma1 * s.rho1 - e.k(2) * s.sigma2 - e.k(2) * s.tau1 * s.rho1 + s.tau2 + s.rho2,
          s.tau1 - s.rho1, -s.sigma1 * s.tau1 + s.sigma2 + s.tau1 * s.tau1 - s.tau2};
}

template <class T>
T G2(const Env<T>& e) {
  const auto F = F_system(e);
  const T m = e.v(Var::a1) + e.v(Var::a3) - e.k(2) * e.v(Var::b2) - e.k(2) * e.v(Var::b3) + e.k(1);
  return -e.k(2) * F[0] + m * F[2] - F[1];
}

// The field route goes through the nested-ring resultant; the symbolic route
// through the 6×6 determinant over Z[α, β, Y, Z].
std::array<Mpoly, kNumCoefs> sextic(const Env<Mpoly>&) { return symbolic_sextic().c; }
std::array<Fp, kNumCoefs> sextic(const Env<Fp>& e) {
  return sextic_coefficients(Quintuple<Fp>{e.v(Var::a1), e.v(Var::a2), e.v(Var::a3), e.v(Var::b2), e.v(Var::b3)});
}

template <class T>
T c(const std::array<T, kNumCoefs>& cs, Coef k) {
  return cs[static_cast<std::size_t>(k)];
}

template <class T>
struct Resultants {
  T phi_q1, phi_q2, q1_q2;
};

template <class T>
Resultants<T> boundary_resultants(const Env<T>& e) {
  const auto s = sym(e);
  const auto phi = phi_polynomial(s), q1 = q1_polynomial(s), q2 = q2_polynomial(s);
  return {resultant(phi, q1), resultant(phi, q2), resultant(q1, q2)};
}

template <class T>
struct Remainders {
  UnivariatePolynomial<T> r1, r2, r3;
};

template <class T>
Remainders<T> remainder_sequence(const Env<T>& e) {
  using P = UnivariatePolynomial<T>;
  const auto s = sym(e);
  const T Y = e.v(Var::Y), Z = e.v(Var::Z);
  const T y2 = Y * Y, z2 = Z * Z;
  const P phi = phi_polynomial(s);
  const P f1 = y2 * phi - q1_polynomial(s);
  const P f2 = z2 * phi - q2_polynomial(s);
  const P x = P::monomial(e.k(1), 1);
  Remainders<T> r;
  r.r1 = y2 * f2 - z2 * f1;
  r.r2 = (y2 - z2) * f1 + y2 * (x * r.r1);
  const T m = (s.sigma1 - s.rho1) * y2 * y2 - (s.sigma1 - s.tau1) * y2 * z2 + y2 - z2;
  r.r3 = (y2 - z2) * r.r2 - m * r.r1;
  return r;
}

template <class T>
T x_coefficient(const UnivariatePolynomial<T>& p, std::size_t k, const Env<T>& e) {
  return p.coefficient(k, e.k(0));
}

// Polynomials in Y, Z over T, for reading off b_ij of a product.
template <class T>
using YZ = std::map<std::pair<unsigned, unsigned>, T>;

template <class T>
YZ<T> mul(const YZ<T>& a, const YZ<T>& b) {
  YZ<T> out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      const std::pair<unsigned, unsigned> k{ea.first + eb.first, ea.second + eb.second};
      auto it = out.find(k);
      if (it == out.end())
        out.emplace(k, ca * cb);
      else
        it->second = it->second + ca * cb;
    }
  return out;
}

template <class T>
T b(const YZ<T>& f, unsigned i, unsigned j, const Env<T>& e) {
  auto it = f.find({i, j});
  return it == f.end() ? e.k(0) : it->second;
}

template <class T>
T flatten(const YZ<T>& f, const Env<T>& e) {
  T out = e.k(0);
  const T Y = e.v(Var::Y), Z = e.v(Var::Z);
  for (const auto& [ex, cf] : f) {
    T t = cf;
    for (unsigned i = 0; i < ex.first; ++i) t = t * Y;
    for (unsigned j = 0; j < ex.second; ++j) t = t * Z;
    out = out + t;
  }
  return out;
}

// Parameters s, t, u, v, w of the factor shapes occupy the α₁..β₃ slots.
template <class T>
struct Params {
  T s, t, u, v, w;
};
template <class T>
Params<T> params(const Env<T>& e) {
  return {e.v(Var::a1), e.v(Var::a2), e.v(Var::a3), e.v(Var::b2), e.v(Var::b3)};
}

const VariableNames& shape_names() {
  static const VariableNames n{{"s", "t", "u", "v", "w", "Y", "Z"}};
  return n;
}

template <class T>
YZ<T> a1_product(const Env<T>& e) {
  const auto p = params(e);
  const YZ<T> H1{{{2, 0}, e.k(1)}, {{0, 2}, -e.k(1)}};
  const YZ<T> H2{{{4, 0}, e.k(1)}, {{2, 2}, p.s}, {{2, 0}, p.t}, {{0, 4}, p.u}, {{0, 2}, p.v}, {{0, 0}, p.w}};
  return mul(H1, H2);
}

template <class T>
YZ<T> a1_printed(const Env<T>& e) {
  const auto p = params(e);
  return {{{6, 0}, e.k(1)},       {{4, 2}, p.s - e.k(1)}, {{4, 0}, p.t},  {{2, 4}, -p.s + p.u}, {{2, 2}, -p.t + p.v},
          {{2, 0}, p.w},          {{0, 6}, -p.u},          {{0, 4}, -p.v}, {{0, 2}, -p.w}};
}

template <class T>
YZ<T> a2_product(const Env<T>& e) {
  const auto p = params(e);
  const YZ<T> H1{{{2, 0}, e.k(1)}, {{0, 2}, p.s}, {{0, 0}, p.t}};
  const YZ<T> H2{{{4, 0}, e.k(1)}, {{2, 2}, p.u}, {{2, 0}, p.v}, {{0, 4}, p.w}, {{0, 2}, -p.v}};
  return mul(H1, H2);
}

template <class T>
YZ<T> a2_printed(const Env<T>& e) {
  const auto p = params(e);
  return {{{6, 0}, e.k(1)},
          {{4, 2}, p.s + p.u},
          {{4, 0}, p.t + p.v},
          {{2, 4}, p.s * p.u + p.w},
          {{2, 2}, p.s * p.v + p.t * p.u - p.v},
          {{2, 0}, p.t * p.v},
          {{0, 6}, p.s * p.w},
          {{0, 4}, -p.s * p.v + p.t * p.w},
          {{0, 2}, -p.t * p.v}};
}

template <class T>
YZ<T> b6_product(const Env<T>& e, i64 eps) {
  const auto p = params(e);
  const T E = e.k(eps);
  const YZ<T> H1{{{3, 0}, e.k(1)}, {{2, 1}, p.s}, {{1, 2}, p.t}, {{1, 0}, p.u}, {{0, 3}, p.v}, {{0, 1}, E * p.u}};
  const YZ<T> H2{{{3, 0}, e.k(1)}, {{2, 1}, -p.s}, {{1, 2}, p.t}, {{1, 0}, p.u}, {{0, 3}, -p.v}, {{0, 1}, -E * p.u}};
  return mul(H1, H2);
}

template <class T>
YZ<T> b6_printed(const Env<T>& e, i64 eps) {
  const auto p = params(e);
  const T E = e.k(eps), two = e.k(2);
  return {{{6, 0}, e.k(1)},
          {{4, 2}, -p.s * p.s + two * p.t},
          {{4, 0}, two * p.u},
          {{2, 4}, -two * p.s * p.v + p.t * p.t},
          {{2, 2}, -two * E * p.s * p.u + two * p.t * p.u},
          {{2, 0}, p.u * p.u},
          {{0, 6}, -p.v * p.v},
          {{0, 4}, -two * E * p.u * p.v},
          {{0, 2}, -p.u * p.u}};
}

// ---------------------------------------------------------------------------

template <class L, class R>
IdentityRecord make(std::string id, int group, std::string anchor, std::string statement, L lhs, R rhs,
                    const VariableNames* names = &VariableNames::greek()) {
  IdentityRecord r;
  r.id = std::move(id);
  r.group = group;
  r.anchor = std::move(anchor);
  r.statement = std::move(statement);
  r.lhs = [lhs] { return Mpoly(lhs(Env<Mpoly>{})); };
  r.rhs = [rhs] { return Mpoly(rhs(Env<Mpoly>{})); };
  r.lhs_numeric = [lhs](const Point& p) { return lhs(Env<Fp>{p}); };
  r.rhs_numeric = [rhs](const Point& p) { return rhs(Env<Fp>{p}); };
  r.names = names;
  return r;
}

const auto kZero = [](const auto& e) { return e.k(0); };

// ⟨F₁, F₂, F₃, F₄⟩ against {−F₁, G₂, F₃}.
const std::vector<Mpoly>& groebner_basis() {
  static const std::vector<Mpoly> basis = [] {
    const Env<Mpoly> e;
    const auto F = F_system(e);
    return std::vector<Mpoly>{-F[0], G2(e), F[2]};
  }();
  return basis;
}

// Σ qᵢgᵢ from dividing F_k by the basis; equals F_k iff the remainder is 0.
Mpoly groebner_certificate(std::size_t k) {
  static const std::array<Mpoly, 4> cert = [] {
    const auto F = F_system(Env<Mpoly>{});
    std::array<Mpoly, 4> out;
    for (std::size_t i = 0; i < 4; ++i) {
      const auto d = divide(F[i], groebner_basis(), MonomialOrder::Lex);
      for (std::size_t j = 0; j < d.quotients.size(); ++j) out[i] += d.quotients[j] * groebner_basis()[j];
    }
    return out;
  }();
  return cert.at(k);
}

std::string check_groebner_basis() {
  const auto& basis = groebner_basis();
  const std::array<Monomial, 3> expected = {Monomial::of(Var::a1) * Monomial::of(Var::b2), Monomial::of(Var::a3, 2),
                                            Monomial::of(Var::a2)};
  const std::array<std::string_view, 3> label = {"-F1", "G2", "F3"};
  std::vector<Monomial> leads;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& [lm, lc] = basis[i].leading_term(MonomialOrder::Lex);
    if (!(lm == expected[i]) || !(lc == Integer(1)))
      return "unexpected leading term of " + std::string(label[i]) + ": " +
             Mpoly::term(lc, lm).to_string();
    leads.push_back(lm);
  }
  for (std::size_t i = 0; i < leads.size(); ++i)
    for (std::size_t j = i + 1; j < leads.size(); ++j)
      for (std::size_t v = 0; v < kNumVars; ++v)
        if (leads[i].e[v] && leads[j].e[v]) return "leading monomials share a variable";
  // Reduced: no term of a basis element is divisible by another leading monomial.
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (const auto& [m, cf] : basis[i].terms())
      for (std::size_t j = 0; j < leads.size(); ++j)
        if (j != i && leads[j].divides(m)) return std::string(label[i]) + " is not reduced";
  const auto F = F_system(Env<Mpoly>{});
  for (std::size_t k : {1u, 3u}) {
    const Mpoly r = reduce(F[k], basis, MonomialOrder::Lex);
    if (!r.is_zero()) return "F" + std::to_string(k + 1) + " has remainder " + r.to_string();
  }
  return {};
}

}  // namespace

std::vector<IdentityRecord> identity_catalogue(const Fixtures& fx) {
  std::vector<IdentityRecord> out;
  const std::string h1_anchor = "nonvanishing of h1";

  out.push_back(make("1", 1, h1_anchor, "F4 = F3^2 - F1 - F2", [](const auto& e) { return F_system(e)[3]; },
                     [](const auto& e) {
                       const auto F = F_system(e);
                       return F[2] * F[2] - F[0] - F[1];
                     }));
  out.push_back(make("2", 2, h1_anchor, "-2F1 + (a1 + a3 - 2b2 - 2b3 + 1)F3 - F2 = (a3 - b2)(a3 - b3)",
                     [](const auto& e) { return G2(e); },
                     [](const auto& e) { return (e.v(Var::a3) - e.v(Var::b2)) * (e.v(Var::a3) - e.v(Var::b3)); }));

  const std::string gb_anchor = "Groebner basis of the h1 ideal";
  {
    IdentityRecord r;
    r.id = "3.basis";
    r.group = 3;
    r.anchor = gb_anchor;
    r.statement = "{-F1, G2, F3}: lex leading monomials a1*b2, a3^2, a2, pairwise disjoint, reduced";
    r.custom = check_groebner_basis;
    out.push_back(std::move(r));
  }
  for (std::size_t k : {1u, 3u}) {
    auto rec = make(
        "3.F" + std::to_string(k + 1), 3, gb_anchor, "F" + std::to_string(k + 1) + " reduces to 0 modulo {-F1, G2, F3}",
        [k](const auto& e) { return F_system(e)[k]; },
        [k](const auto& e) { return e.of(groebner_certificate(k)); });
    out.push_back(std::move(rec));
  }

  const std::string res_anchor = "leading and trailing coefficients of f";
  out.push_back(make("4.support", 4, res_anchor, "Res_x(f1, f2) is supported on the nine even monomials",
                     [](const auto& e) { return e.k(symbolic_sextic().support_ok ? 0 : 1); }, kZero));
  out.push_back(make("4.c60", 4, res_anchor, "c60 = -Res(phi, Q2)",
                     [](const auto& e) { return c(sextic(e), Coef::c60); },
                     [](const auto& e) { return -boundary_resultants(e).phi_q2; }));
  out.push_back(make("4.c06", 4, res_anchor, "c06 = Res(phi, Q1)", [](const auto& e) { return c(sextic(e), Coef::c06); },
                     [](const auto& e) { return boundary_resultants(e).phi_q1; }));
  out.push_back(make("4.c20", 4, res_anchor, "c20 = -Res(Q1, Q2)",
                     [](const auto& e) { return c(sextic(e), Coef::c20); },
                     [](const auto& e) { return -boundary_resultants(e).q1_q2; }));
  out.push_back(make("4.c02", 4, res_anchor, "c02 = Res(Q1, Q2)", [](const auto& e) { return c(sextic(e), Coef::c02); },
                     [](const auto& e) { return boundary_resultants(e).q1_q2; }));

  const std::string disc_anchor = "axis discriminants";
  const Mpoly p1 = fx.p1, p2 = fx.p2;
  out.push_back(make("5.y", 5, disc_anchor, "c40^2 - 4 c60 c20 = (b2 - b3)^2 p1^2",
                     [](const auto& e) {
                       const auto cs = sextic(e);
                       return c(cs, Coef::c40) * c(cs, Coef::c40) - e.k(4) * c(cs, Coef::c60) * c(cs, Coef::c20);
                     },
                     [p1](const auto& e) {
                       const auto d = e.v(Var::b2) - e.v(Var::b3);
                       const auto q = e.of(p1);
                       return d * d * q * q;
                     }));
  out.push_back(make("5.z", 5, disc_anchor, "c04^2 + 4 c20 c06 = (a2 - a3)^2 p2^2",
                     [](const auto& e) {
                       const auto cs = sextic(e);
                       return c(cs, Coef::c04) * c(cs, Coef::c04) + e.k(4) * c(cs, Coef::c20) * c(cs, Coef::c06);
                     },
                     [p2](const auto& e) {
                       const auto d = e.v(Var::a2) - e.v(Var::a3);
                       const auto q = e.of(p2);
                       return d * d * q * q;
                     }));
  // The classifier tests c04² − 4c06c02; equal to the above since c20 = −c02.
  out.push_back(make("5.z-classifier", 5, disc_anchor, "c04^2 - 4 c06 c02 = (a2 - a3)^2 p2^2",
                     [](const auto& e) {
                       const auto cs = sextic(e);
                       return c(cs, Coef::c04) * c(cs, Coef::c04) - e.k(4) * c(cs, Coef::c06) * c(cs, Coef::c02);
                     },
                     [p2](const auto& e) {
                       const auto d = e.v(Var::a2) - e.v(Var::a3);
                       const auto q = e.of(p2);
                       return d * d * q * q;
                     }));
  out.push_back(make("6", 6, disc_anchor, "p2 - p1 = (a2 - b2)(a2 - b3)(a3 - b2)(a3 - b3)",
                     [p1, p2](const auto& e) { return e.of(p2) - e.of(p1); },
                     [](const auto& e) {
                       const auto a2 = e.v(Var::a2), a3 = e.v(Var::a3), b2 = e.v(Var::b2), b3 = e.v(Var::b3);
                       return (a2 - b2) * (a2 - b3) * (a3 - b2) * (a3 - b3);
                     }));

  const std::string d_anchor = "coefficient sums d1, d2";
  out.push_back(make(
      "7.d1", 7, d_anchor, "c60 + c42 + c24 + c06 = -(a2a3 - b2b3)(a2a3 - a2 - a3 - b2b3 + b2 + b3)(a1(a2 + a3 - b2 - b3) - a2a3 + b2b3)",
      [](const auto& e) {
        const auto cs = sextic(e);
        return c(cs, Coef::c60) + c(cs, Coef::c42) + c(cs, Coef::c24) + c(cs, Coef::c06);
      },
      [](const auto& e) {
        const auto a1 = e.v(Var::a1), a2 = e.v(Var::a2), a3 = e.v(Var::a3), b2 = e.v(Var::b2), b3 = e.v(Var::b3);
        return -(a2 * a3 - b2 * b3) * (a2 * a3 - a2 - a3 - b2 * b3 + b2 + b3) *
               (a1 * (a2 + a3 - b2 - b3) - a2 * a3 + b2 * b3);
      }));
  out.push_back(make("7.d2", 7, d_anchor, "c40 + c22 + c04 = -(a2 - b2)(a2 - b3)(a3 - b2)(a3 - b3)(a2 + a3 - b2 - b3)",
                     [](const auto& e) {
                       const auto cs = sextic(e);
                       return c(cs, Coef::c40) + c(cs, Coef::c22) + c(cs, Coef::c04);
                     },
                     [](const auto& e) {
                       const auto a2 = e.v(Var::a2), a3 = e.v(Var::a3), b2 = e.v(Var::b2), b3 = e.v(Var::b3);
                       return -(a2 - b2) * (a2 - b3) * (a3 - b2) * (a3 - b3) * (a2 + a3 - b2 - b3);
                     }));

  const std::string h_anchor = "gcd of f1 and f2 in x";
  out.push_back(make("8.h1", 8, h_anchor, "h1 closed form = x-coefficient of r3",
                     [](const auto& e) { return h1_h2(sym(e), e.v(Var::Y), e.v(Var::Z)).first; },
                     [](const auto& e) { return x_coefficient(remainder_sequence(e).r3, 1, e); }));
  out.push_back(make("8.h1-unexpanded", 8, h_anchor, "h1 closed form = its unexpanded product form",
                     [](const auto& e) { return h1_h2(sym(e), e.v(Var::Y), e.v(Var::Z)).first; },
                     [](const auto& e) {
                       const auto s = sym(e);
                       const auto y2 = e.v(Var::Y) * e.v(Var::Y), z2 = e.v(Var::Z) * e.v(Var::Z);
                       const auto m = (s.sigma1 - s.rho1) * y2 * y2 - (s.sigma1 - s.tau1) * y2 * z2 + y2 - z2;
                       return (y2 - z2) * ((s.sigma2 - s.rho2) * y2 * y2 - (s.sigma2 - s.tau2) * y2 * z2 +
                                           s.tau1 * y2 - s.tau1 * z2) -
                              m * (s.rho1 * y2 - s.tau1 * z2);
                     }));
  out.push_back(make("8.h2", 8, h_anchor, "frozen h2 = constant term of r3",
                     [](const auto& e) { return h1_h2(sym(e), e.v(Var::Y), e.v(Var::Z)).second; },
                     [](const auto& e) { return x_coefficient(remainder_sequence(e).r3, 0, e); }));
  out.push_back(make("8.r3-linear", 8, h_anchor, "r3 has no x^2 or x^3 term",
                     [](const auto& e) {
                       const auto r3 = remainder_sequence(e).r3;
                       // A sum of squares over Z vanishes only if each summand does.
                       const auto q2 = x_coefficient(r3, 2, e), q3 = x_coefficient(r3, 3, e);
                       return q2 * q2 + q3 * q3 + e.k(r3.degree() > 3 ? 1 : 0);
                     },
                     kZero));
  out.push_back(make("8.r1", 8, h_anchor, "Y^2 f2 - Z^2 f1 = Z^2 Q1 - Y^2 Q2 (x-coefficients)",
                     [](const auto& e) {
                       const auto r1 = remainder_sequence(e).r1;
                       // The x-coefficients do not involve a1 by degree; weighting them by
                       // powers of a1 packs all three into one comparison.
                       const auto a1 = e.v(Var::a1);
                       return x_coefficient(r1, 0, e) + a1 * a1 * x_coefficient(r1, 1, e) +
                              a1 * a1 * a1 * a1 * x_coefficient(r1, 2, e) + e.k(r1.degree() > 2 ? 1 : 0);
                     },
                     [](const auto& e) {
                       const auto s = sym(e);
                       const auto y2 = e.v(Var::Y) * e.v(Var::Y), z2 = e.v(Var::Z) * e.v(Var::Z);
                       const auto a1 = e.v(Var::a1);
                       return -(s.rho2 * y2 - s.tau2 * z2) + a1 * a1 * (s.rho1 * y2 - s.tau1 * z2) -
                              a1 * a1 * a1 * a1 * (y2 - z2);
                     }));

  for (const auto& ec : fx.eta) {
    const std::array<std::pair<Mpoly, std::string>, 3> etas = {
        {{ec.eta1, "eta1"}, {ec.eta2, "eta2"}, {ec.eta3, "eta3"}}};
    const std::array<std::pair<Mpoly, std::string>, 2> primes = {{{p1, "eta1'"}, {ec.eta2p, "eta2'"}}};
    std::size_t k = 0;
    for (const auto& [eta, en] : etas)
      for (const auto& [etap, pn] : primes) {
        const Mpoly lhs = eta - etap, rhs = ec.differences[k];
        ++k;
        out.push_back(make("9." + ec.name + "." + std::to_string(k), 9, "case (" + ec.name + ") eta differences",
                           en + " - " + pn + " = " + rhs.to_string(VariableNames::ascii()),
                           [lhs](const auto& e) { return e.of(lhs); }, [rhs](const auto& e) { return e.of(rhs); }));
      }
  }

  const std::string lin_anchor = "sextics divisible by Y^2 - Z^2";
  const VariableNames* sn = &shape_names();
  out.push_back(make("10.expansion", 10, lin_anchor, "(Y^2 - Z^2)(Y^4 + (sZ^2 + t)Y^2 + uZ^4 + vZ^2 + w) as printed",
                     [](const auto& e) { return flatten(a1_product(e), e); },
                     [](const auto& e) { return flatten(a1_printed(e), e); }, sn));
  out.push_back(make("10.deg6", 10, lin_anchor, "b60 + b42 + b24 + b06 = 0",
                     [](const auto& e) {
                       const auto f = a1_product(e);
                       return b(f, 6, 0, e) + b(f, 4, 2, e) + b(f, 2, 4, e) + b(f, 0, 6, e);
                     },
                     kZero, sn));
  out.push_back(make("10.deg4", 10, lin_anchor, "b40 + b22 + b04 = 0",
                     [](const auto& e) {
                       const auto f = a1_product(e);
                       return b(f, 4, 0, e) + b(f, 2, 2, e) + b(f, 0, 4, e);
                     },
                     kZero, sn));

  const std::string cubic_anchor = "splitting into two cubics";
  for (i64 eps : {1, -1}) {
    const std::string tag = eps > 0 ? "eps=+1" : "eps=-1";
    out.push_back(make("11." + tag + ".expansion", 11, cubic_anchor, "H1 H2 as printed, " + tag,
                       [eps](const auto& e) { return flatten(b6_product(e, eps), e); },
                       [eps](const auto& e) { return flatten(b6_printed(e, eps), e); }, sn));
    out.push_back(make("11." + tag + ".y", 11, cubic_anchor, "b40^2 - 4 b60 b20 = 0, " + tag,
                       [eps](const auto& e) {
                         const auto f = b6_product(e, eps);
                         return b(f, 4, 0, e) * b(f, 4, 0, e) - e.k(4) * b(f, 6, 0, e) * b(f, 2, 0, e);
                       },
                       kZero, sn));
    out.push_back(make("11." + tag + ".z", 11, cubic_anchor, "b04^2 + 4 b06 b20 = 0, " + tag,
                       [eps](const auto& e) {
                         const auto f = b6_product(e, eps);
                         return b(f, 0, 4, e) * b(f, 0, 4, e) + e.k(4) * b(f, 0, 6, e) * b(f, 2, 0, e);
                       },
                       kZero, sn));
  }

  out.push_back(make("12", 12, "quadratic times quartic shape",
                     "(Y^2 + sZ^2 + t)(Y^4 + (uZ^2 + v)Y^2 + wZ^4 - vZ^2) as printed",
                     [](const auto& e) { return flatten(a2_product(e), e); },
                     [](const auto& e) { return flatten(a2_printed(e), e); }, sn));
  return out;
}

bool in_suite(const IdentityRecord& r, Suite s) {
  switch (s) {
    case Suite::All: return true;
    case Suite::Core: return r.group >= 1 && r.group <= 8;
    case Suite::Appendix: return r.group >= 9 && r.group <= 12;
    case Suite::Groebner: return r.group == 3;
  }
  return false;
}

std::optional<Suite> parse_suite(std::string_view s) {
  if (s == "all") return Suite::All;
  if (s == "core") return Suite::Core;
  if (s == "appendix") return Suite::Appendix;
  if (s == "groebner") return Suite::Groebner;
  return std::nullopt;
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::All: return "all";
    case Suite::Core: return "core";
    case Suite::Appendix: return "appendix";
    case Suite::Groebner: return "groebner";
  }
  return "?";
}

std::string_view to_string(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::Unverified: return "unverified";
    case IdentityStatus::VerifiedSymbolic: return "verified-symbolic";
    case IdentityStatus::VerifiedRandomized: return "verified-randomized";
    case IdentityStatus::Failed: return "FAILED";
  }
  return "?";
}

std::string term_diff(const Mpoly& lhs, const Mpoly& rhs, const VariableNames& names, std::size_t limit) {
  const Mpoly d = lhs - rhs;
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& [m, cf] : d.terms()) {
    if (shown == limit) break;
    os << "  " << Mpoly::term(cf, m).to_string(names) << "\n";
    ++shown;
  }
  if (d.size() > shown) os << "  ... " << d.size() - shown << " more terms\n";
  return os.str();
}

std::size_t IdentityReport::failures() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const IdentityResult& r) {
    return r.status == IdentityStatus::Failed || r.status == IdentityStatus::Unverified;
  }));
}

IdentityResult run_identity(const IdentityRecord& r, VerifyMode mode) {
  const auto start = std::chrono::steady_clock::now();
  IdentityResult out;
  out.id = r.id;
  out.group = r.group;
  out.anchor = r.anchor;
  try {
    if (r.custom) {
      const std::string why = r.custom();
      out.status = why.empty() ? IdentityStatus::VerifiedSymbolic : IdentityStatus::Failed;
      out.diff = why;
    } else {
      bool symbolic_ok = true;
      if (mode != VerifyMode::Randomized) {
        const Mpoly lhs = r.lhs(), rhs = r.rhs();
        symbolic_ok = lhs == rhs;
        if (!symbolic_ok) out.diff = "lhs - rhs:\n" + term_diff(lhs, rhs, *r.names);
      }
      if (mode != VerifyMode::Symbolic)
        out.randomized = schwartz_zippel_equal(r.lhs_numeric, r.rhs_numeric, r.degree_bound);
      const bool random_ok = !out.randomized || out.randomized->equal;
      if (!symbolic_ok) {
        out.status = IdentityStatus::Failed;
      } else if (!random_ok) {
        out.status = IdentityStatus::Failed;
        std::ostringstream os;
        os << "sides differ at (";
        for (std::size_t i = 0; i < kNumVars; ++i) os << (i ? ", " : "") << (*out.randomized->witness)[i];
        os << ") mod " << kZippelPrime;
        out.diff = os.str();
      } else {
        out.status = mode == VerifyMode::Randomized ? IdentityStatus::VerifiedRandomized
                                                    : IdentityStatus::VerifiedSymbolic;
      }
    }
  } catch (const std::exception& ex) {
    out.status = IdentityStatus::Failed;
    out.diff = std::string("exception: ") + ex.what();
  }
  out.wall = std::chrono::steady_clock::now() - start;
  return out;
}

IdentityReport run_suite(const std::vector<IdentityRecord>& catalogue, Suite s, VerifyMode mode, unsigned workers) {
  std::vector<const IdentityRecord*> chosen;
  for (const auto& r : catalogue)
    if (in_suite(r, s)) chosen.push_back(&r);
  IdentityReport report;
  report.suite = s;
  report.results.resize(chosen.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(chosen.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < chosen.size();) report.results[i] = run_identity(*chosen[i], mode);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return report;
}

IdentityReport run_suite(Suite s, VerifyMode mode, unsigned workers) {
  return run_suite(identity_catalogue(default_fixtures()), s, mode, workers);
}

std::string report_table(const IdentityReport& r) {
  std::size_t wid = 2, wan = 6;
  for (const auto& x : r.results) {
    wid = std::max(wid, x.id.size());
    wan = std::max(wan, x.anchor.size());
  }
  std::ostringstream os;
  auto pad = [](std::string s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  os << pad("id", wid) << "  " << pad("anchor", wan) << "  " << pad("status", 19) << "  time\n";
  for (const auto& x : r.results) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f ms", x.wall.count() * 1e3);
    os << pad(x.id, wid) << "  " << pad(x.anchor, wan) << "  " << pad(std::string(to_string(x.status)), 19) << "  "
       << ms << "\n";
    if (!x.diff.empty()) os << x.diff << (x.diff.back() == '\n' ? "" : "\n");
  }
  os << r.results.size() - r.failures() << "/" << r.results.size() << " verified";
  os << " (over Z; holds in every characteristic p >= 7)\n";
  return os.str();
}

}  // namespace howe
