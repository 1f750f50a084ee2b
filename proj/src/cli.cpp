#include "howe/cli.hpp"

#include "howe/birational.hpp"
#include "howe/enumerator.hpp"
#include "howe/howe_model.hpp"
#include "howe/identities.hpp"
#include "howe/serialization.hpp"
#include "howe/singularities.hpp"

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace howe {

namespace {

struct Options {
  std::optional<u64> p;
  std::string quintuple;
  bool normalize = false;
  std::string format = "text";
  unsigned workers = 1;
  std::string csv;
  std::string suite = "all";
  std::string mode = "both";
  std::size_t samples = 1000;
  std::optional<std::size_t> spot_samples;
  u64 seed = 1;
  unsigned g1 = 0, g2 = 0, r = 0;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::array<i64, 5> parse_quintuple(const std::string& s) {
  std::array<i64, 5> v{};
  std::stringstream in(s);
  std::string item;
  std::size_t n = 0;
  while (std::getline(in, item, ',')) {
    if (n == 5) throw ValidationError("quintuple must have exactly five entries");
    std::size_t used = 0;
    try {
      v[n] = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ValidationError("malformed quintuple entry '" + item + "'");
    }
    if (used != item.size()) throw ValidationError("malformed quintuple entry '" + item + "'");
    ++n;
  }
  if (n != 5) throw ValidationError("quintuple must have exactly five entries");
  return v;
}

PrimeField field_of(u64 p) {
  try {
    return PrimeField(p);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

Quintuple<Fp> fp_quintuple(const Options& o) {
  const PrimeField F = field_of(*o.p);
  return make_quintuple(F, parse_quintuple(o.quintuple));
}

Quintuple<Rational> q_quintuple(const Options& o) {
  const auto v = parse_quintuple(o.quintuple);
  return {Rational(v[0]), Rational(v[1]), Rational(v[2]), Rational(v[3]), Rational(v[4])};
}

bool json(const Options& o) { return o.format == "json"; }

int cmd_model(const Options& o, std::ostream& out) {
  if (o.p) {
    auto m = build_sextic(fp_quintuple(o));
    if (o.normalize) m = normalize(m);
    out << (json(o) ? to_json(m).dump() : to_string(m)) << "\n";
  } else {
    auto m = build_sextic(q_quintuple(o));
    if (o.normalize) m = normalize(m);
    out << (json(o) ? to_json(m).dump() : to_string(m)) << "\n";
  }
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto m = build_sextic(fp_quintuple(o));
  const auto rep = singular_points(m);
  if (json(o)) {
    out << to_json(rep).dump() << "\n";
    return kExitOk;
  }
  const auto& w = rep.witness;
  out << "type " << to_string(rep.kind) << "\n";
  out << "singular points (Y:Z:X), t^2 = " << rep.nonresidue.value() << ":\n";
  for (const auto& pt : rep.points) out << "  " << to_string(pt) << "\n";
  for (const auto& u : rep.unresolved)
    out << "  beyond F_p^2: " << u.variable << " root of " << u.defining_polynomial.to_string(u.variable) << "\n";
  out << "A = " << w.A.value() << ", B = " << w.B.value() << ", Q = " << w.Q.value()
      << ", c40^2 - 4c60c20 = " << w.disc_y.value() << ", c04^2 - 4c06c02 = " << w.disc_z.value() << "\n";
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  field_of(*o.p);
  if (*o.p < 7) throw ValidationError("enumeration needs p >= 7");
  const auto row = enumerate(*o.p, std::max(1u, o.workers));
  if (!o.csv.empty()) {
    std::ofstream f(o.csv);
    if (!f) throw ValidationError("cannot write " + o.csv);
    f << csv_header() << "\n" << to_csv(row) << "\n";
  }
  if (json(o))
    out << to_json(row).dump() << "\n";
  else
    out << csv_header() << "\n" << to_csv(row) << "\n";
  return kExitOk;
}

int cmd_identities(const Options& o, std::ostream& out) {
  const auto suite = parse_suite(o.suite);
  if (!suite) throw ValidationError("unknown suite '" + o.suite + "'");
  VerifyMode mode = VerifyMode::Both;
  if (o.mode == "symbolic")
    mode = VerifyMode::Symbolic;
  else if (o.mode == "randomized")
    mode = VerifyMode::Randomized;
  else if (o.mode != "both")
    throw ValidationError("unknown mode '" + o.mode + "'");
  const auto rep = run_suite(*suite, mode, o.workers);
  out << (json(o) ? to_json(rep).dump(2) + "\n" : report_table(rep));
  return rep.ok() ? kExitOk : kExitFailure;
}

int cmd_roundtrip(const Options& o, std::ostream& out) {
  field_of(*o.p);
  const auto st = roundtrip(*o.p, o.samples, o.seed);
  if (json(o)) {
    out << Json{{"p", *o.p},
                {"models", st.models},
                {"fiber_checked", st.fiber_checked},
                {"fiber_failed", st.fiber_failed},
                {"curve_checked", st.curve_checked},
                {"curve_failed", st.curve_failed}}
               .dump()
        << "\n";
  } else {
    out << "p = " << *o.p << ", " << st.models << " models\n"
        << "psi(phi(P)) = P: " << st.fiber_checked - st.fiber_failed << "/" << st.fiber_checked << "\n"
        << "phi(psi(C)) = C: " << st.curve_checked - st.curve_failed << "/" << st.curve_checked << "\n";
  }
  return st.ok() ? kExitOk : kExitFailure;
}

int cmd_spot_check(const Options& o, std::ostream& out) {
  field_of(*o.p);
  const auto rep = spot_check(*o.p, o.spot_samples, o.seed);
  out << "p = " << rep.p << ": " << rep.checked - rep.mismatches.size() << "/" << rep.checked
      << " agree with the projective scan\n";
  for (const auto& m : rep.mismatches)
    out << "  " << to_string(m.triple) << ": classify " << to_string(m.classified) << ", scan "
        << (m.scanned ? std::string(to_string(*m.scanned)) : std::string("unrecognized")) << "\n";
  return rep.ok() ? kExitOk : kExitFailure;
}

int cmd_genus(const Options& o, std::ostream& out) {
  try {
    out << to_string(generalized_howe_genus(o.g1, o.g2, o.r)) << "\n";
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  return kExitOk;
}

int cmd_lambda(const Options& o, std::ostream& out) {
  if (o.p)
    out << legendre_lambda(fp_quintuple(o)).value() << "\n";
  else
    out << legendre_lambda(q_quintuple(o)).to_string() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plane sextic models of Howe curves"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto with_quintuple = [&](CLI::App* s, bool need_p) {
    auto* p = s->add_option("--p", o.p, "Prime p >= 7; omit for the rational model");
    if (need_p) p->required();
    s->add_option("--quintuple", o.quintuple, "a1,a2,a3,b2,b3")->required();
  };

  auto* model = app.add_subcommand("model", "Print the sextic model");
  with_quintuple(model, false);
  model->add_flag("--normalize", o.normalize, "Scale so that c06 = 1");

  auto* classify = app.add_subcommand("classify", "Classify the singular locus");
  with_quintuple(classify, true);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count triples by singularity type");
  enumerate_cmd->add_option("--p", o.p)->required();
  enumerate_cmd->add_option("--workers", o.workers);
  enumerate_cmd->add_option("--csv", o.csv, "Also write the row to this CSV file");

  auto* verify = app.add_subcommand("verify-identities", "Run the polynomial identity suite");
  verify->add_option("--suite", o.suite)->check(CLI::IsMember({"all", "core", "appendix", "groebner"}));
  verify->add_option("--mode", o.mode)->check(CLI::IsMember({"symbolic", "randomized", "both"}));
  verify->add_option("--workers", o.workers);

  auto* rt = app.add_subcommand("roundtrip", "Check that Phi and Psi are mutually inverse");
  rt->add_option("--p", o.p)->required();
  rt->add_option("--samples", o.samples);
  rt->add_option("--seed", o.seed);

  auto* spot = app.add_subcommand("spot-check", "Compare classify with the brute-force scan");
  spot->add_option("--p", o.p)->required();
  spot->add_option("--samples", o.spot_samples, "Omit to check every triple");
  spot->add_option("--seed", o.seed);

  auto* genus = app.add_subcommand("genus", "Genus of a generalized Howe curve");
  genus->add_option("--g1", o.g1)->required();
  genus->add_option("--g2", o.g2)->required();
  genus->add_option("--r", o.r)->required();

  auto* lambda = app.add_subcommand("lambda", "Legendre parameter of the quotient elliptic curve");
  with_quintuple(lambda, false);

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*model) return cmd_model(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*enumerate_cmd) return cmd_enumerate(o, out);
    if (*verify) return cmd_identities(o, out);
    if (*rt) return cmd_roundtrip(o, out);
    if (*spot) return cmd_spot_check(o, out);
    if (*genus) return cmd_genus(o, out);
    if (*lambda) return cmd_lambda(o, out);
  } catch (const NotHoweType& e) {
    err << e.what() << "\n";
    return kExitValidation;
  } catch (const UnsupportedCharacteristic& e) {
    err << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitValidation;
}

}  // namespace howe
