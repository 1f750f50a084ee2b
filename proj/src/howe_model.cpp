#include "howe/howe_model.hpp"

#include <algorithm>

namespace howe {

GenusInfo generalized_howe_genus(unsigned g1, unsigned g2, unsigned r) {
  if (g1 == 0 || g1 > g2) throw std::invalid_argument("genus data needs 0 < g1 <= g2");
  if (r > g1 + g2 + 1) throw std::invalid_argument("r exceeds g1 + g2 + 1");
  GenusInfo g;
  g.genus = 2 * (g1 + g2) + 1 - r;
  g.g3 = g1 + g2 + 1 - r;
  g.hyperelliptic = g.g3 == 0;
  return g;
}

std::string to_string(const GenusInfo& g) {
  return "genus " + std::to_string(g.genus) + ", " + (g.hyperelliptic ? "hyperelliptic" : "non-hyperelliptic") +
         ", g3=" + std::to_string(g.g3);
}

Integer count_howe_triples(u64 q) {
  if (q < 7) throw std::invalid_argument("count_howe_triples needs q >= 7");
  Integer prod(1);
  for (u64 k = 2; k <= 6; ++k) prod *= Integer(Integer(std::to_string(q)) - Integer(static_cast<i64>(k)));
  return exact_div(prod, Integer(8));
}

Quintuple<Fp> HoweTriple::quintuple() const {
  return {Fp(a1, p), Fp(first[0], p), Fp(first[1], p), Fp(second[0], p), Fp(second[1], p)};
}

HoweTriple canonical_triple(const Quintuple<Fp>& q) {
  HoweTriple t;
  t.p = q.a1.modulus();
  t.a1 = q.a1.value();
  t.first = {q.a2.value(), q.a3.value()};
  t.second = {q.b2.value(), q.b3.value()};
  std::sort(t.first.begin(), t.first.end());
  std::sort(t.second.begin(), t.second.end());
  if (t.second < t.first) std::swap(t.first, t.second);
  return t;
}

std::string to_string(const HoweTriple& t) {
  return "(" + std::to_string(t.a1) + ", {" + std::to_string(t.first[0]) + "," + std::to_string(t.first[1]) +
         "}, {" + std::to_string(t.second[0]) + "," + std::to_string(t.second[1]) + "})";
}

Quintuple<Fp> make_quintuple(const PrimeField& field, const std::array<i64, 5>& v) {
  return {field(v[0]), field(v[1]), field(v[2]), field(v[3]), field(v[4])};
}

}  // namespace howe
