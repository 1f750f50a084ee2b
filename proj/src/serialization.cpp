#include "howe/serialization.hpp"

#include <stdexcept>
#include <string>

namespace howe {

namespace {

Json number(const Fp& a) { return a.value(); }
Json number(const Rational& a) { return a.to_string(); }
Json number(const Fp2& a) { return Json::array({a.re().value(), a.im().value()}); }

template <class F>
Json model_json(const SexticModel<F>& m, u64 p) {
  Json j;
  j["p"] = p;
  Json q = Json::array();
  for (const auto& v : m.source.values()) q.push_back(number(v));
  j["quintuple"] = q;
  Json c = Json::object();
  for (std::size_t k = 0; k < kNumCoefs; ++k) c[std::string(kCoefNames[k])] = number(m.c[k]);
  j["coefficients"] = c;
  j["normalized"] = m.normalized;
  return j;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("model JSON lacks \"") + key + "\"");
  return j.at(key);
}

Rational rational_of(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<i64>());
  if (v.is_string()) return Rational(std::string_view(v.get_ref<const std::string&>()));
  throw std::invalid_argument("expected an integer or \"a/b\" string");
}

template <class F, class Read>
SexticModel<F> model_from(const Json& j, Read read) {
  const Json& q = field(j, "quintuple");
  if (!q.is_array() || q.size() != 5) throw std::invalid_argument("\"quintuple\" must hold five values");
  Quintuple<F> quint{read(q[0]), read(q[1]), read(q[2]), read(q[3]), read(q[4])};
  const bool normalized = field(j, "normalized").template get<bool>();
  SexticModel<F> m = build_sextic(quint);
  if (normalized) m = normalize(m);
  const Json& cs = field(j, "coefficients");
  for (std::size_t k = 0; k < kNumCoefs; ++k) {
    const std::string name(kCoefNames[k]);
    if (!cs.contains(name)) throw std::invalid_argument("coefficients lack " + name);
    if (!(read(cs.at(name)) == m.c[k])) throw std::invalid_argument("coefficient " + name + " disagrees with the quintuple");
  }
  return m;
}

}  // namespace

Json to_json(const SexticModel<Fp>& m) { return model_json(m, m.c[0].modulus()); }
Json to_json(const SexticModel<Rational>& m) { return model_json(m, 0); }

SexticModel<Fp> model_from_json_fp(const Json& j) {
  const u64 p = field(j, "p").get<u64>();
  if (p == 0) throw std::invalid_argument("p = 0 denotes a rational model");
  const PrimeField F(p);
  return model_from<Fp>(j, [&](const Json& v) {
    if (!v.is_number_integer()) throw std::invalid_argument("expected an integer");
    return F(v.get<i64>());
  });
}

SexticModel<Rational> model_from_json_rational(const Json& j) {
  if (field(j, "p").get<u64>() != 0) throw std::invalid_argument("rational models carry p = 0");
  return model_from<Rational>(j, rational_of);
}

Json to_json(const SingularityReport& r) {
  Json j;
  j["kind"] = std::string(to_string(r.kind));
  Json pts = Json::array();
  for (const auto& pt : r.points) {
    Json coords = Json::array();
    const bool base = pt.in_base_field();
    for (const Fp2* x : {&pt.Y, &pt.Z, &pt.X}) coords.push_back(base ? Json(x->re().value()) : number(*x));
    pts.push_back({{"coords", coords}, {"field", base ? "Fp" : "Fp2"}});
  }
  for (const auto& u : r.unresolved)
    pts.push_back({{"coords", Json::array({u.variable})},
                   {"field", "symbolic"},
                   {"defining_polynomial", u.defining_polynomial.to_string(u.variable)}});
  j["points"] = pts;
  const auto& w = r.witness;
  j["witnesses"] = {{"A", w.A.value()},
                    {"B", w.B.value()},
                    {"Q", w.Q.value()},
                    {"infinity_generic", w.infinity_generic},
                    {"infinity_degenerate", w.infinity_degenerate},
                    {"disc_y", w.disc_y.value()},
                    {"disc_z", w.disc_z.value()},
                    {"axis_y", w.axis_y},
                    {"axis_z", w.axis_z}};
  j["nonresidue"] = r.nonresidue.value();
  return j;
}

Json to_json(const IdentityReport& r) {
  Json j;
  j["suite"] = std::string(to_string(r.suite));
  j["characteristic"] = "verified over Z; valid in every characteristic p >= 7";
  Json rows = Json::array();
  for (const auto& x : r.results) {
    Json row = {{"id", x.id},
                {"group", x.group},
                {"anchor", x.anchor},
                {"status", std::string(to_string(x.status))},
                {"wall_ms", x.wall.count() * 1e3}};
    if (x.randomized) row["randomized"] = {{"equal", x.randomized->equal}, {"trials", x.randomized->trials}};
    if (!x.diff.empty()) row["diff"] = x.diff;
    rows.push_back(std::move(row));
  }
  j["results"] = rows;
  j["failures"] = r.failures();
  return j;
}

Json to_json(const EnumerationRow& row) {
  return {{"p", row.p},
          {"nI", row.type_i},
          {"nII", row.type_ii},
          {"nIII", row.type_iii},
          {"total", row.total()},
          {"pctI", row.pct(row.type_i)},
          {"pctII", row.pct(row.type_ii)},
          {"pctIII", row.pct(row.type_iii)}};
}

}  // namespace howe
