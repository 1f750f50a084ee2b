#pragma once

#include "howe/exact_arith.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace howe {

// The seven variables of the symbolic layer, in the lex order used by the
// Groebner check (a1 > a2 > a3 > b2 > b3 > Y > Z).
enum class Var : std::uint8_t { a1 = 0, a2, a3, b2, b3, Y, Z };
inline constexpr std::size_t kNumVars = 7;

struct Monomial {
  std::array<std::uint16_t, kNumVars> e{};

  static Monomial of(Var v, unsigned k = 1);
  unsigned degree() const;
  unsigned operator[](Var v) const { return e[static_cast<std::size_t>(v)]; }
  bool divides(const Monomial& o) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires divides(); no check.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

enum class MonomialOrder { GradedLex, Lex };

// Strict "a comes before b" under the given order (larger first).
bool monomial_greater(const Monomial& a, const Monomial& b, MonomialOrder order);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

struct VariableNames {
  std::array<std::string, kNumVars> names;
  static const VariableNames& ascii();  // a1 a2 a3 b2 b3 Y Z
  static const VariableNames& greek();  // α₁ … β₃ Y Z
};

class IntegerMultivariatePolynomial {
 public:
  using Term = std::pair<Monomial, Integer>;

  IntegerMultivariatePolynomial() = default;
  IntegerMultivariatePolynomial(i64 c);             // NOLINT(implicit)
  IntegerMultivariatePolynomial(const Integer& c);  // NOLINT(implicit)
  static IntegerMultivariatePolynomial variable(Var v, unsigned power = 1);
  static IntegerMultivariatePolynomial term(const Integer& c, const Monomial& m);
  // Merges duplicates and drops zeros.
  static IntegerMultivariatePolynomial from_terms(std::vector<Term> terms);

  // Graded-lex descending.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;
  unsigned degree_in(Var v) const;
  const Term& leading_term(MonomialOrder order = MonomialOrder::GradedLex) const;
  Integer coefficient_of(const Monomial& m) const;
  // Coefficient of v^k, a polynomial in the remaining variables.
  IntegerMultivariatePolynomial coefficient(Var v, unsigned k) const;

  IntegerMultivariatePolynomial& operator+=(const IntegerMultivariatePolynomial& o);
  IntegerMultivariatePolynomial& operator-=(const IntegerMultivariatePolynomial& o);
  IntegerMultivariatePolynomial& operator*=(const IntegerMultivariatePolynomial& o);
  friend IntegerMultivariatePolynomial operator+(IntegerMultivariatePolynomial a,
                                                 const IntegerMultivariatePolynomial& b) { return a += b; }
  friend IntegerMultivariatePolynomial operator-(IntegerMultivariatePolynomial a,
                                                 const IntegerMultivariatePolynomial& b) { return a -= b; }
  friend IntegerMultivariatePolynomial operator*(const IntegerMultivariatePolynomial& a,
                                                 const IntegerMultivariatePolynomial& b);
  friend IntegerMultivariatePolynomial operator-(IntegerMultivariatePolynomial a);
  friend bool operator==(const IntegerMultivariatePolynomial& a, const IntegerMultivariatePolynomial& b) {
    return a.terms_ == b.terms_;
  }

  IntegerMultivariatePolynomial pow(unsigned k) const;
  IntegerMultivariatePolynomial substitute(Var v, const IntegerMultivariatePolynomial& by) const;

  Integer evaluate(const std::array<Integer, kNumVars>& point) const;
  Fp evaluate(const std::array<Fp, kNumVars>& point) const;

  std::string to_string(const VariableNames& names = VariableNames::greek()) const;

 private:
  std::vector<Term> terms_;
};

using Mpoly = IntegerMultivariatePolynomial;

inline bool is_zero(const Mpoly& a) { return a.is_zero(); }
inline Mpoly zero_like(const Mpoly&) { return Mpoly(); }
inline Mpoly one_like(const Mpoly&) { return Mpoly(1); }
inline Mpoly constant_like(const Mpoly&, i64 c) { return Mpoly(c); }
inline std::string to_string(const Mpoly& a) { return a.to_string(); }

// Throws std::domain_error unless b divides a over Z.
Mpoly exact_div(const Mpoly& a, const Mpoly& b);

// Multivariate division remainder of f by `basis` in the given order. A term is
// reduced only when some leading term divides it over Z.
Mpoly reduce(const Mpoly& f, const std::vector<Mpoly>& basis, MonomialOrder order);

// Same, keeping the quotients: f = Σ quotients[i]·basis[i] + remainder.
struct Division {
  std::vector<Mpoly> quotients;
  Mpoly remainder;
};
Division divide(const Mpoly& f, const std::vector<Mpoly>& basis, MonomialOrder order);

// Accepts integers, the variable names of `names` (ASCII and Greek spellings
// are always accepted for the default names), + - * ^ and parentheses;
// juxtaposition multiplies. Throws std::invalid_argument on malformed input.
Mpoly parse_polynomial(std::string_view text, const VariableNames& names = VariableNames::ascii());

// ---------------------------------------------------------------------------
// Randomized identity testing.

using Point = std::array<Fp, kNumVars>;
using NumericExpr = std::function<Fp(const Point&)>;

struct ZippelVerdict {
  bool equal = true;
  std::size_t trials = 0;
  std::size_t skipped = 0;  // points where an evaluator raised domain_error
  std::optional<std::array<u64, kNumVars>> witness;
};

inline constexpr u64 kZippelPrime = 2147483647;  // 2^31 - 1
inline constexpr std::size_t kZippelTrials = 64;

// Requires prime > degree_bound. A point on which either side throws
// std::domain_error is redrawn.
ZippelVerdict schwartz_zippel_equal(const NumericExpr& lhs, const NumericExpr& rhs, unsigned degree_bound,
                                    std::size_t trials = kZippelTrials, u64 prime = kZippelPrime,
                                    u64 seed = 0x5eed);
ZippelVerdict schwartz_zippel_equal(const Mpoly& lhs, const Mpoly& rhs, std::size_t trials = kZippelTrials,
                                    u64 prime = kZippelPrime, u64 seed = 0x5eed);

}  // namespace howe
