#pragma once

#include "howe/exact_arith.hpp"
#include "howe/howe_model.hpp"
#include "howe/mpoly.hpp"

#include <array>
#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace howe {

// Hand transcriptions of printed polynomials. Keyed by name; the text is
// parsed with the ASCII variable names a1 a2 a3 b2 b3.
struct FixtureText {
  std::string_view name;
  std::string_view text;
};
const std::vector<FixtureText>& fixture_texts();
u64 fnv1a64(std::string_view s);

// The η polynomials of one of the four cases; η₁′ is p₁.
struct EtaCase {
  std::string name;  // "I" .. "IV"
  Mpoly eta1, eta2, eta3, eta2p;
  std::array<Mpoly, 6> differences;  // η₁−η₁′, η₁−η₂′, η₂−η₁′, η₂−η₂′, η₃−η₁′, η₃−η₂′
};

struct Fixtures {
  Mpoly p1, p2;
  std::vector<EtaCase> eta;
};
Fixtures default_fixtures();

// The symbolic 6×6 resultant and what is read off it. Computed once per
// process on first use.
struct SymbolicSextic {
  Mpoly f;                         // Res_x(f₁, f₂) in α, β, Y, Z
  std::array<Mpoly, kNumCoefs> c;  // c_ij in α, β
  bool support_ok = false;         // f has no monomial outside the nine
};
const SymbolicSextic& symbolic_sextic();

enum class Suite { All, Core, Appendix, Groebner };
std::optional<Suite> parse_suite(std::string_view s);
std::string_view to_string(Suite s);

enum class IdentityStatus { Unverified, VerifiedSymbolic, VerifiedRandomized, Failed };
std::string_view to_string(IdentityStatus s);

struct IdentityRecord {
  std::string id;        // "5.y", "9.III.4", ...
  int group = 0;         // 1..12
  std::string anchor;
  std::string statement;
  std::function<Mpoly()> lhs, rhs;
  NumericExpr lhs_numeric, rhs_numeric;
  unsigned degree_bound = 48;
  // Replaces lhs == rhs when set (the basis check); returns an empty string on
  // success and a reason otherwise.
  std::function<std::string()> custom;
  // Printing names for the diff; the factor-shape parameters s..w reuse the
  // α/β slots.
  const VariableNames* names = &VariableNames::greek();
};

std::vector<IdentityRecord> identity_catalogue(const Fixtures& fx);
bool in_suite(const IdentityRecord& r, Suite s);

enum class VerifyMode { Symbolic, Randomized, Both };

struct IdentityResult {
  std::string id;
  int group = 0;
  std::string anchor;
  IdentityStatus status = IdentityStatus::Unverified;
  std::optional<ZippelVerdict> randomized;
  std::string diff;  // nonempty iff Failed
  std::chrono::duration<double> wall{};
};

struct IdentityReport {
  Suite suite = Suite::All;
  std::vector<IdentityResult> results;  // catalogue order
  std::size_t failures() const;
  bool ok() const { return failures() == 0 && !results.empty(); }
};

IdentityResult run_identity(const IdentityRecord& r, VerifyMode mode = VerifyMode::Both);
IdentityReport run_suite(Suite s, VerifyMode mode = VerifyMode::Both, unsigned workers = 0);
IdentityReport run_suite(const std::vector<IdentityRecord>& catalogue, Suite s, VerifyMode mode = VerifyMode::Both,
                         unsigned workers = 0);

// Terms of lhs − rhs, at most `limit` of them, one per line.
std::string term_diff(const Mpoly& lhs, const Mpoly& rhs, const VariableNames& names, std::size_t limit = 12);

std::string report_table(const IdentityReport& r);

}  // namespace howe
