#include "howe/enumerator.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace howe {

namespace {

// The three ways to split {w < x < y < z} into two unordered pairs.
constexpr std::array<std::array<int, 4>, 3> kPairings = {{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};

HoweTriple make_triple(u64 p, u64 a1, const std::array<u64, 4>& s, const std::array<int, 4>& pairing) {
  HoweTriple t;
  t.p = p;
  t.a1 = a1;
  t.first = {s[pairing[0]], s[pairing[1]]};
  t.second = {s[pairing[2]], s[pairing[3]]};
  return t;
}

}  // namespace

void for_each_canonical_triple(u64 p, const std::function<void(const HoweTriple&)>& visit, unsigned worker,
                               unsigned workers) {
  if (p < 7) throw UnsupportedCharacteristic("enumeration needs p >= 7");
  if (workers == 0 || worker >= workers) throw std::invalid_argument("bad worker partition");
  for (u64 a1 = 2 + worker; a1 < p; a1 += workers) {
    std::vector<u64> pool;
    for (u64 v = 2; v < p; ++v)
      if (v != a1) pool.push_back(v);
    const std::size_t n = pool.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          for (std::size_t l = k + 1; l < n; ++l) {
            const std::array<u64, 4> s = {pool[i], pool[j], pool[k], pool[l]};
            for (const auto& pairing : kPairings) visit(make_triple(p, a1, s, pairing));
          }
  }
}

unsigned EnumerationRow::pct(u64 n) const {
  const u64 t = total();
  if (t == 0) return 0;
  return static_cast<unsigned>((200 * n + t) / (2 * t));
}

EnumerationRow enumerate(u64 p, unsigned workers) {
  if (workers == 0) workers = 1;
  std::vector<EnumerationRow> partial(workers);
  auto run = [p, workers, &partial](unsigned w) {
    EnumerationRow& row = partial[w];
    for_each_canonical_triple(
        p,
        [&row](const HoweTriple& t) {
          switch (classify(build_sextic(t.quintuple())).kind) {
            case SingularityType::TypeI: ++row.type_i; break;
            case SingularityType::TypeII: ++row.type_ii; break;
            case SingularityType::TypeIII: ++row.type_iii; break;
          }
        },
        w, workers);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  EnumerationRow out;
  out.p = p;
  for (const auto& r : partial) {
    out.type_i += r.type_i;
    out.type_ii += r.type_ii;
    out.type_iii += r.type_iii;
  }
  return out;
}

std::string csv_header() { return "p,nI,nII,nIII,total,pctI,pctII,pctIII"; }

std::string to_csv(const EnumerationRow& r) {
  return std::to_string(r.p) + "," + std::to_string(r.type_i) + "," + std::to_string(r.type_ii) + "," +
         std::to_string(r.type_iii) + "," + std::to_string(r.total()) + "," + std::to_string(r.pct(r.type_i)) + "," +
         std::to_string(r.pct(r.type_ii)) + "," + std::to_string(r.pct(r.type_iii));
}

SpotCheckReport spot_check(u64 p, std::optional<std::size_t> samples, u64 seed) {
  std::vector<HoweTriple> all;
  for_each_canonical_triple(p, [&all](const HoweTriple& t) { all.push_back(t); });
  if (samples && *samples < all.size()) {
    std::mt19937_64 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(*samples);
  }
  SpotCheckReport rep;
  rep.p = p;
  for (const auto& t : all) {
    const auto model = build_sextic(t.quintuple());
    const auto kind = classify(model).kind;
    const auto scanned = kind_from_locus(scan_singular_points(model));
    ++rep.checked;
    rep.triples.push_back(t);
    if (!scanned || *scanned != kind) rep.mismatches.push_back({t, kind, scanned});
  }
  return rep;
}

}  // namespace howe
