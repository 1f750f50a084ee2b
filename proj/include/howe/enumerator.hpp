#pragma once

#include "howe/howe_model.hpp"
#include "howe/singularities.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace howe {

// Visits every canonical Howe triple over F_p exactly once: α₁ ∉ {0, 1}, a
// 4-subset of the remaining values outside {0, 1}, then one of its three
// pairings. Worker w of n handles α₁ = 2 + w, 2 + w + n, ...
void for_each_canonical_triple(u64 p, const std::function<void(const HoweTriple&)>& visit, unsigned worker = 0,
                               unsigned workers = 1);

struct EnumerationRow {
  u64 p = 0;
  u64 type_i = 0, type_ii = 0, type_iii = 0;

  u64 total() const { return type_i + type_ii + type_iii; }
  // Percentages rounded half up to integers.
  unsigned pct(u64 n) const;
};

EnumerationRow enumerate(u64 p, unsigned workers = 1);

std::string csv_header();
std::string to_csv(const EnumerationRow& row);

struct SpotCheckMismatch {
  HoweTriple triple;
  SingularityType classified;
  std::optional<SingularityType> scanned;
};

struct SpotCheckReport {
  u64 p = 0;
  std::size_t checked = 0;
  std::vector<HoweTriple> triples;  // in the order checked
  std::vector<SpotCheckMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Compares classify against the brute-force projective scan over F_{p²} on
// `samples` random canonical triples, or on all of them when samples is empty.
SpotCheckReport spot_check(u64 p, std::optional<std::size_t> samples, u64 seed);

}  // namespace howe
