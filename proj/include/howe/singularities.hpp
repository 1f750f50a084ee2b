#pragma once

#include "howe/exact_arith.hpp"
#include "howe/howe_model.hpp"
#include "howe/upoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace howe {

enum class SingularityType { TypeI = 1, TypeII = 2, TypeIII = 3 };

std::string_view to_string(SingularityType t);  // "I", "II", "III"
SingularityType parse_singularity_type(std::string_view s);

// Values behind the classification, kept for reporting.
template <class F>
struct ClassificationWitness {
  // Points at infinity: A = c42² − 3c60c24, B = c42c24 − 9c60c06 and
  // Q = 4(c42c06·A + c60c24(c24² − 3c42c06)) − B(c42c24 + 3c60c06).
  F A, B, Q;
  bool infinity_generic = false;     // A ≠ 0, B ≠ 0, Q = 0
  bool infinity_degenerate = false;  // A = B = 0
  // Points on Z = 0 and on Y = 0.
  F disc_y, disc_z;  // c40² − 4c60c20, c04² − 4c06c02
  bool axis_y = false;  // c40 ≠ 0 and disc_y = 0
  bool axis_z = false;  // c04 ≠ 0 and disc_z = 0
};

template <class F>
struct Classification {
  SingularityType kind;
  ClassificationWitness<F> witness;
};

// Constant number of field operations; no points are computed.
template <class F>
Classification<F> classify(const SexticModel<F>& m) {
  check_characteristic(m.c[0]);
  const F& c60 = m[Coef::c60];
  const F& c42 = m[Coef::c42];
  const F& c40 = m[Coef::c40];
  const F& c24 = m[Coef::c24];
  const F& c20 = m[Coef::c20];
  const F& c06 = m[Coef::c06];
  const F& c04 = m[Coef::c04];
  const F& c02 = m[Coef::c02];
  auto k = [&](i64 v) { return constant_like(c60, v); };

  ClassificationWitness<F> w;
  w.A = c42 * c42 - k(3) * c60 * c24;
  w.B = c42 * c24 - k(9) * c60 * c06;
  w.Q = k(4) * (c42 * c06 * w.A + c60 * c24 * (c24 * c24 - k(3) * c42 * c06)) - w.B * (c42 * c24 + k(3) * c60 * c06);
  w.infinity_generic = !is_zero(w.A) && !is_zero(w.B) && is_zero(w.Q);
  w.infinity_degenerate = is_zero(w.A) && is_zero(w.B);
  w.disc_y = c40 * c40 - k(4) * c60 * c20;
  w.disc_z = c04 * c04 - k(4) * c06 * c02;
  w.axis_y = !is_zero(c40) && is_zero(w.disc_y);
  w.axis_z = !is_zero(c04) && is_zero(w.disc_z);

  const bool two = w.infinity_generic || w.infinity_degenerate;
  const bool three = w.axis_y || w.axis_z;
  if (two && three) throw std::logic_error("type II and type III conditions both hold");
  return {two ? SingularityType::TypeII : three ? SingularityType::TypeIII : SingularityType::TypeI, w};
}

// ---------------------------------------------------------------------------
// Points of P²(F_{p²}) in coordinates (Y : Z : X), normalized so that the last
// nonzero coordinate is 1.

struct ProjectivePoint {
  Fp2 Y, Z, X;

  static ProjectivePoint normalized(const Fp2& Y, const Fp2& Z, const Fp2& X);
  bool in_base_field() const { return Y.in_base_field() && Z.in_base_field() && X.in_base_field(); }
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

bool point_less(const ProjectivePoint& a, const ProjectivePoint& b);
std::string to_string(const ProjectivePoint& pt);

// Homogeneous form Σ c Y^i Z^j X^k.
struct TernaryForm {
  struct Term {
    std::array<unsigned, 3> e;
    Fp c;
  };
  std::vector<Term> terms;

  // F(Y, Z, X) = X⁶ f(Y/X, Z/X).
  static TernaryForm homogenize(const SexticModel<Fp>& m);
  TernaryForm derivative(std::size_t var) const;  // 0 = Y, 1 = Z, 2 = X
  Fp2 evaluate(const ProjectivePoint& pt) const;
  bool is_zero() const { return terms.empty(); }
};

// Singular points whose coordinates need more than F_{p²}. Never produced
// for Howe models in practice; carried so the report stays total.
struct ExtensionMarker {
  std::string variable;                     // "u" = Y², "v" = Z²
  UnivariatePolynomial<Fp> defining_polynomial;  // monic, over F_p
};

struct SingularityReport {
  SingularityType kind;
  std::vector<ProjectivePoint> points;  // (0:0:1) first
  std::vector<ExtensionMarker> unresolved;
  ClassificationWitness<Fp> witness;
  Fp nonresidue;  // d with F_{p²} = F_p[t]/(t² − d)
};

// Exact singular locus for models over F_p.
SingularityReport singular_points(const SexticModel<Fp>& m);

// Requires pt to be singular; true iff some second partial is nonzero there.
bool has_multiplicity_two(const SexticModel<Fp>& m, const ProjectivePoint& pt);

// Brute force: every point of P²(F_{p²}) where F and its three partials vanish.
std::vector<ProjectivePoint> scan_singular_points(const SexticModel<Fp>& m);

// Classification read off a singular locus (excluding the origin): points at
// infinity give II, points on a coordinate axis give III, others give I.
// Empty when the locus matches none of these patterns.
std::optional<SingularityType> kind_from_locus(const std::vector<ProjectivePoint>& locus);

}  // namespace howe
