#include "howe/singularities.hpp"

#include <algorithm>
#include <tuple>

namespace howe {

std::string_view to_string(SingularityType t) {
  switch (t) {
    case SingularityType::TypeI: return "I";
    case SingularityType::TypeII: return "II";
    case SingularityType::TypeIII: return "III";
  }
  return "?";
}

SingularityType parse_singularity_type(std::string_view s) {
  if (s == "I") return SingularityType::TypeI;
  if (s == "II") return SingularityType::TypeII;
  if (s == "III") return SingularityType::TypeIII;
  throw std::invalid_argument("unknown singularity type: " + std::string(s));
}

ProjectivePoint ProjectivePoint::normalized(const Fp2& Y, const Fp2& Z, const Fp2& X) {
  const Fp2* pivot = !X.is_zero() ? &X : !Z.is_zero() ? &Z : !Y.is_zero() ? &Y : nullptr;
  if (!pivot) throw std::invalid_argument("(0:0:0) is not a projective point");
  const Fp2 inv = pivot->inverse();
  return {Y * inv, Z * inv, X * inv};
}

namespace {

auto key(const ProjectivePoint& p) {
  return std::make_tuple(p.X.re().value(), p.X.im().value(), p.Z.re().value(), p.Z.im().value(), p.Y.re().value(),
                         p.Y.im().value());
}

}  // namespace

bool point_less(const ProjectivePoint& a, const ProjectivePoint& b) { return key(a) < key(b); }

std::string to_string(const ProjectivePoint& pt) {
  return "(" + to_string(pt.Y) + ":" + to_string(pt.Z) + ":" + to_string(pt.X) + ")";
}

// ---------------------------------------------------------------------------

TernaryForm TernaryForm::homogenize(const SexticModel<Fp>& m) {
  TernaryForm f;
  for (std::size_t k = 0; k < kNumCoefs; ++k) {
    if (m.c[k].is_zero()) continue;
    const auto [dy, dz] = kCoefExponents[k];
    f.terms.push_back({{dy, dz, 6 - dy - dz}, m.c[k]});
  }
  return f;
}

TernaryForm TernaryForm::derivative(std::size_t var) const {
  TernaryForm d;
  for (const auto& t : terms) {
    if (t.e[var] == 0) continue;
    Term n = t;
    n.c = t.c * constant_like(t.c, t.e[var]);
    --n.e[var];
    if (!n.c.is_zero()) d.terms.push_back(n);
  }
  return d;
}

Fp2 TernaryForm::evaluate(const ProjectivePoint& pt) const {
  Fp2 acc = zero_like(pt.Y);
  for (const auto& t : terms) {
    Fp2 v(t.c, zero_like(t.c), pt.Y.nonresidue());
    v *= pt.Y.pow(t.e[0]) * pt.Z.pow(t.e[1]) * pt.X.pow(t.e[2]);
    acc += v;
  }
  return acc;
}

namespace {

bool is_singular(const TernaryForm& F, const std::array<TernaryForm, 3>& dF, const ProjectivePoint& pt) {
  if (!F.evaluate(pt).is_zero()) return false;
  for (const auto& g : dF)
    if (!g.evaluate(pt).is_zero()) return false;
  return true;
}

using U = UnivariatePolynomial<Fp>;
using Biv = UnivariatePolynomial<U>;  // in v over F_p[u]

struct UvSystem {
  Biv f, fu, fv;
};

UvSystem uv_system(const SexticModel<Fp>& m) {
  const Fp& c60 = m[Coef::c60];
  const Fp& c42 = m[Coef::c42];
  const Fp& c40 = m[Coef::c40];
  const Fp& c24 = m[Coef::c24];
  const Fp& c22 = m[Coef::c22];
  const Fp& c20 = m[Coef::c20];
  const Fp& c06 = m[Coef::c06];
  const Fp& c04 = m[Coef::c04];
  const Fp& c02 = m[Coef::c02];
  const Fp z = zero_like(c60);
  auto k = [&](i64 v) { return constant_like(c60, v); };
  UvSystem s;
  s.f = Biv(std::vector<U>{U(std::vector<Fp>{z, c20, c40, c60}), U(std::vector<Fp>{c02, c22, c42}),
                           U(std::vector<Fp>{c04, c24}), U(c06)});
  s.fu = Biv(std::vector<U>{U(std::vector<Fp>{c20, k(2) * c40, k(3) * c60}), U(std::vector<Fp>{c22, k(2) * c42}),
                            U(c24)});
  s.fv = Biv(std::vector<U>{U(std::vector<Fp>{c02, c22, c42}), U(std::vector<Fp>{k(2) * c04, k(2) * c24}),
                            U(k(3) * c06)});
  return s;
}

U at_u(const Biv& b, const Fp& u0) {
  std::vector<Fp> out;
  for (const auto& c : b.coefficients()) out.push_back(c.evaluate(u0));
  return U(std::move(out));
}

U gcd_all(const std::vector<U>& polys) {
  U g;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? monic(p) : gcd_over_field(g, p);
  }
  return g;
}

// Removes the factor x^k.
U strip_zero_roots(U g) {
  while (!g.is_zero() && g.degree() > 0 && g[0].is_zero()) g = U(std::vector<Fp>(g.coefficients().begin() + 1, g.coefficients().end()));
  return g;
}

struct UvSolution {
  std::vector<std::pair<Fp, Fp>> points;
  std::vector<ExtensionMarker> unresolved;
  bool degenerate = false;
};

UvSolution solve_uv(const SexticModel<Fp>& m) {
  const auto s = uv_system(m);
  std::vector<U> elim;
  for (auto [a, b] : {std::pair{&s.fu, &s.fv}, {&s.f, &s.fu}, {&s.f, &s.fv}}) elim.push_back(resultant(*a, *b));
  UvSolution out;
  U g = gcd_all(elim);
  if (g.is_zero()) {
    out.degenerate = true;
    return out;
  }
  g = strip_zero_roots(g);
  if (g.degree() <= 0) return out;
  for (const Fp& u0 : roots_in_prime_field(g)) {
    U h = gcd_all({at_u(s.f, u0), at_u(s.fu, u0), at_u(s.fv, u0)});
    if (h.is_zero()) {
      out.degenerate = true;
      return out;
    }
    h = strip_zero_roots(h);
    for (const Fp& v0 : roots_in_prime_field(h)) out.points.emplace_back(u0, v0);
  }
  if (out.points.empty()) out.unresolved.push_back({"u", monic(g)});
  return out;
}

}  // namespace

SingularityReport singular_points(const SexticModel<Fp>& m) {
  const u64 p = m.c[0].modulus();
  const PrimeField field(p);
  const QuadraticExtension ext(field);
  const auto cls = classify(m);

  SingularityReport r;
  r.kind = cls.kind;
  r.witness = cls.witness;
  r.nonresidue = ext.nonresidue();
  const Fp2 zero = ext(0), one = ext(1);
  auto root = [&](const Fp& a) { return *sqrt_in_field(ext(a)); };
  const Fp two = field(2);

  std::vector<ProjectivePoint> found;
  switch (cls.kind) {
    case SingularityType::TypeII: {
      const Fp y2 = cls.witness.infinity_generic ? -cls.witness.B / (two * cls.witness.A)
                                                 : -m[Coef::c24] / m[Coef::c42];
      const Fp2 y = root(y2);
      found.push_back(ProjectivePoint::normalized(y, one, zero));
      found.push_back(ProjectivePoint::normalized(-y, one, zero));
      break;
    }
    case SingularityType::TypeIII: {
      if (cls.witness.axis_y) {
        const Fp2 y = root(-two * m[Coef::c20] / m[Coef::c40]);
        found.push_back(ProjectivePoint::normalized(y, zero, one));
        found.push_back(ProjectivePoint::normalized(-y, zero, one));
      }
      if (cls.witness.axis_z) {
        const Fp2 z = root(-two * m[Coef::c02] / m[Coef::c04]);
        found.push_back(ProjectivePoint::normalized(zero, z, one));
        found.push_back(ProjectivePoint::normalized(zero, -z, one));
      }
      break;
    }
    case SingularityType::TypeI: {
      auto sol = solve_uv(m);
      if (sol.degenerate) {
        if (p > 13) throw std::runtime_error("elimination degenerated; no small-field fallback for p > 13");
        for (const auto& pt : scan_singular_points(m))
          if (!(pt.Y.is_zero() && pt.Z.is_zero())) found.push_back(pt);
        break;
      }
      r.unresolved = std::move(sol.unresolved);
      for (const auto& [u0, v0] : sol.points) {
        const Fp2 y = root(u0), z = root(v0);
        for (const Fp2& ys : {y, -y})
          for (const Fp2& zs : {z, -z}) found.push_back(ProjectivePoint::normalized(ys, zs, one));
      }
      break;
    }
  }

  std::sort(found.begin(), found.end(), point_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());

  const TernaryForm F = TernaryForm::homogenize(m);
  const std::array<TernaryForm, 3> dF = {F.derivative(0), F.derivative(1), F.derivative(2)};
  r.points.push_back(ProjectivePoint::normalized(zero, zero, one));
  for (const auto& pt : found) r.points.push_back(pt);
  for (const auto& pt : r.points) {
    if (!is_singular(F, dF, pt)) throw std::logic_error("reported point is not singular: " + to_string(pt));
    if (!has_multiplicity_two(m, pt)) throw std::logic_error("singular point of multiplicity > 2: " + to_string(pt));
  }
  return r;
}

bool has_multiplicity_two(const SexticModel<Fp>& m, const ProjectivePoint& pt) {
  const TernaryForm F = TernaryForm::homogenize(m);
  for (std::size_t i = 0; i < 3; ++i) {
    const TernaryForm d = F.derivative(i);
    for (std::size_t j = i; j < 3; ++j)
      if (!d.derivative(j).evaluate(pt).is_zero()) return true;
  }
  return false;
}

std::vector<ProjectivePoint> scan_singular_points(const SexticModel<Fp>& m) {
  const u64 p = m.c[0].modulus();
  const QuadraticExtension ext{PrimeField(p)};
  const TernaryForm F = TernaryForm::homogenize(m);
  const std::array<TernaryForm, 3> dF = {F.derivative(0), F.derivative(1), F.derivative(2)};

  std::vector<Fp2> elems;
  elems.reserve(p * p);
  for (u64 a = 0; a < p; ++a)
    for (u64 b = 0; b < p; ++b) elems.push_back(ext(Fp(a, p), Fp(b, p)));
  std::vector<Fp2> squares;
  squares.reserve(elems.size());
  for (const auto& e : elems) squares.push_back(e * e);

  std::array<Fp2, kNumCoefs> c;
  for (std::size_t k = 0; k < kNumCoefs; ++k) c[k] = ext(m.c[k]);
  const Fp2 one = ext(1), zero = ext(0);

  std::vector<ProjectivePoint> out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Fp2& u = squares[i];
    const Fp2 a0 = u * (c[5] + u * (c[2] + u * c[0]));
    const Fp2 a1 = c[8] + u * (c[4] + u * c[1]);
    const Fp2 a2 = c[7] + u * c[3];
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const Fp2& v = squares[j];
      if (!(a0 + v * (a1 + v * (a2 + v * c[6]))).is_zero()) continue;
      ProjectivePoint pt{elems[i], elems[j], one};
      if (is_singular(F, dF, pt)) out.push_back(pt);
    }
  }
  for (const auto& y : elems) {
    ProjectivePoint pt{y, one, zero};
    if (is_singular(F, dF, pt)) out.push_back(pt);
  }
  ProjectivePoint corner{one, zero, zero};
  if (is_singular(F, dF, corner)) out.push_back(corner);
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

std::optional<SingularityType> kind_from_locus(const std::vector<ProjectivePoint>& locus) {
  std::size_t inf = 0, axis = 0, generic = 0;
  for (const auto& pt : locus) {
    if (pt.X.is_zero())
      ++inf;
    else if (pt.Y.is_zero() && pt.Z.is_zero())
      continue;
    else if (pt.Y.is_zero() || pt.Z.is_zero())
      ++axis;
    else
      ++generic;
  }
  if (inf > 0 && axis == 0 && generic == 0) return SingularityType::TypeII;
  if (axis > 0 && inf == 0 && generic == 0) return SingularityType::TypeIII;
  if (generic == 4 && inf == 0 && axis == 0) return SingularityType::TypeI;
  return std::nullopt;
}

}  // namespace howe
