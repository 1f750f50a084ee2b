#include "howe/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace howe {

Monomial Monomial::of(Var v, unsigned k) {
  Monomial m;
  m.e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(k);
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    unsigned s = unsigned{a.e[i]} + b.e[i];
    if (s > 0xffff) throw std::overflow_error("monomial exponent exceeds 16 bits");
    m.e[i] = static_cast<std::uint16_t>(s);
  }
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  return m;
}

bool monomial_greater(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::GradedLex) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
  }
  return a.e > b.e;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : m.e) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

const VariableNames& VariableNames::ascii() {
  static const VariableNames n{{"a1", "a2", "a3", "b2", "b3", "Y", "Z"}};
  return n;
}

const VariableNames& VariableNames::greek() {
  static const VariableNames n{{"α₁", "α₂", "α₃", "β₂", "β₃", "Y", "Z"}};
  return n;
}

// ---------------------------------------------------------------------------

namespace {

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_greater(a, b, MonomialOrder::GradedLex);
  }
};

}  // namespace

Mpoly::IntegerMultivariatePolynomial(i64 c) {
  if (c != 0) terms_.emplace_back(Monomial{}, Integer(c));
}

Mpoly::IntegerMultivariatePolynomial(const Integer& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

Mpoly Mpoly::variable(Var v, unsigned power) { return term(Integer(1), Monomial::of(v, power)); }

Mpoly Mpoly::term(const Integer& c, const Monomial& m) {
  Mpoly r;
  if (!c.is_zero()) r.terms_.emplace_back(m, c);
  return r;
}

Mpoly Mpoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return GrlexGreater{}(a.first, b.first); });
  Mpoly r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first)
      r.terms_.back().second += t.second;
    else
      r.terms_.push_back(std::move(t));
    if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
  }
  return r;
}

unsigned Mpoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().first.degree();
}

unsigned Mpoly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first[v]);
  return d;
}

const Mpoly::Term& Mpoly::leading_term(MonomialOrder order) const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  if (order == MonomialOrder::GradedLex) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (monomial_greater(t.first, best->first, order)) best = &t;
  return *best;
}

Integer Mpoly::coefficient_of(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.first == m) return t.second;
  return Integer(0);
}

Mpoly Mpoly::coefficient(Var v, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.first[v] != k) continue;
    Monomial m = t.first;
    m.e[static_cast<std::size_t>(v)] = 0;
    out.emplace_back(m, t.second);
  }
  return from_terms(std::move(out));
}

Mpoly& Mpoly::operator+=(const Mpoly& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && GrlexGreater{}(terms_[i].first, o.terms_[j].first))) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || GrlexGreater{}(o.terms_[j].first, terms_[i].first)) {
      merged.push_back(o.terms_[j++]);
    } else {
      Integer c = terms_[i].second + o.terms_[j].second;
      if (!c.is_zero()) merged.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Mpoly& Mpoly::operator-=(const Mpoly& o) { return *this += -o; }

Mpoly operator-(Mpoly a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

Mpoly operator*(const Mpoly& a, const Mpoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 || b.size() == 1) {
    const Mpoly& single = a.size() == 1 ? a : b;
    const Mpoly& other = a.size() == 1 ? b : a;
    Mpoly r;
    r.terms_.reserve(other.size());
    // Multiplying by a monomial preserves the order.
    for (const auto& t : other.terms_)
      r.terms_.emplace_back(t.first * single.terms_[0].first, t.second * single.terms_[0].second);
    return r;
  }
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.first * t.first] += s.second * t.second;
  std::vector<Mpoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.emplace_back(m, std::move(c));
  std::sort(terms.begin(), terms.end(),
            [](const Mpoly::Term& x, const Mpoly::Term& y) { return GrlexGreater{}(x.first, y.first); });
  Mpoly r;
  r.terms_ = std::move(terms);
  return r;
}

Mpoly& Mpoly::operator*=(const Mpoly& o) { return *this = *this * o; }

Mpoly Mpoly::pow(unsigned k) const {
  Mpoly r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

Mpoly Mpoly::substitute(Var v, const Mpoly& by) const {
  const unsigned d = degree_in(v);
  std::vector<Mpoly> powers{Mpoly(1)};
  for (unsigned k = 1; k <= d; ++k) powers.push_back(powers.back() * by);
  Mpoly r;
  for (unsigned k = 0; k <= d; ++k) {
    Mpoly c = coefficient(v, k);
    if (!c.is_zero()) r += c * powers[k];
  }
  return r;
}

namespace {

template <class T>
T eval_terms(const std::vector<Mpoly::Term>& terms, const std::array<T, kNumVars>& point,
             T (*lift)(const Integer&, const T&)) {
  T zero = point[0] - point[0];
  T acc = zero;
  // Small power cache per variable.
  std::array<std::vector<T>, kNumVars> pw;
  for (std::size_t i = 0; i < kNumVars; ++i) pw[i].push_back(lift(Integer(1), zero));
  for (const auto& [m, c] : terms) {
    T v = lift(c, zero);
    for (std::size_t i = 0; i < kNumVars; ++i) {
      while (pw[i].size() <= m.e[i]) pw[i].push_back(pw[i].back() * point[i]);
      if (m.e[i]) v = v * pw[i][m.e[i]];
    }
    acc = acc + v;
  }
  return acc;
}

Integer lift_integer(const Integer& c, const Integer&) { return c; }
Fp lift_fp(const Integer& c, const Fp& like) { return Fp(c.mod(like.modulus()), like.modulus()); }

}  // namespace

Integer Mpoly::evaluate(const std::array<Integer, kNumVars>& point) const {
  return eval_terms<Integer>(terms_, point, lift_integer);
}

Fp Mpoly::evaluate(const std::array<Fp, kNumVars>& point) const {
  return eval_terms<Fp>(terms_, point, lift_fp);
}

std::string Mpoly::to_string(const VariableNames& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    Integer mag = negative ? -c : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const bool unit = mag == Integer(1);
    bool wrote = false;
    if (!unit || m.degree() == 0) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (m.e[i] == 0) continue;
      if (wrote) os << "*";
      os << names.names[i];
      if (m.e[i] > 1) os << "^" << m.e[i];
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Mpoly exact_div(const Mpoly& a, const Mpoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (b.size() == 1 && b.terms()[0].first == Monomial{}) {
    std::vector<Mpoly::Term> q;
    q.reserve(a.size());
    for (const auto& [m, c] : a.terms()) q.emplace_back(m, exact_div(c, b.terms()[0].second));
    return Mpoly::from_terms(std::move(q));
  }
  std::map<Monomial, Integer, GrlexGreater> rem;
  for (const auto& t : a.terms()) rem.emplace(t.first, t.second);
  const auto& [lm, lc] = b.leading_term();
  std::vector<Mpoly::Term> q;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lm.divides(top->first)) throw std::domain_error("inexact polynomial division");
    Monomial qm = top->first / lm;
    Integer qc = exact_div(top->second, lc);
    for (const auto& [m, c] : b.terms()) {
      Monomial pm = m * qm;
      auto it = rem.find(pm);
      Integer delta = c * qc;
      if (it == rem.end()) {
        rem.emplace(pm, -delta);
      } else {
        it->second -= delta;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
    q.emplace_back(qm, std::move(qc));
  }
  return Mpoly::from_terms(std::move(q));
}

Division divide(const Mpoly& f, const std::vector<Mpoly>& basis, MonomialOrder order) {
  auto cmp = [order](const Monomial& a, const Monomial& b) { return monomial_greater(a, b, order); };
  std::map<Monomial, Integer, decltype(cmp)> p(cmp);
  for (const auto& t : f.terms()) p.emplace(t.first, t.second);
  std::vector<Mpoly::Term> leads;
  for (const auto& g : basis) leads.push_back(g.leading_term(order));
  std::vector<Mpoly::Term> remainder;
  std::vector<std::vector<Mpoly::Term>> quotients(basis.size());
  while (!p.empty()) {
    auto top = p.begin();
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto& [lm, lc] = leads[k];
      if (!lm.divides(top->first)) continue;
      if (!mpz_divisible_p(top->second.raw().get_mpz_t(), lc.raw().get_mpz_t())) continue;
      Monomial qm = top->first / lm;
      Integer qc = exact_div(top->second, lc);
      for (const auto& [m, c] : basis[k].terms()) {
        Monomial pm = m * qm;
        Integer delta = c * qc;
        auto it = p.find(pm);
        if (it == p.end()) {
          p.emplace(pm, -delta);
        } else {
          it->second -= delta;
          if (it->second.is_zero()) p.erase(it);
        }
      }
      quotients[k].emplace_back(qm, qc);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.emplace_back(top->first, top->second);
      p.erase(top);
    }
  }
  Division out;
  for (auto& q : quotients) out.quotients.push_back(Mpoly::from_terms(std::move(q)));
  out.remainder = Mpoly::from_terms(std::move(remainder));
  return out;
}

Mpoly reduce(const Mpoly& f, const std::vector<Mpoly>& basis, MonomialOrder order) {
  return divide(f, basis, order).remainder;
}

// ---------------------------------------------------------------------------
// Parser.

namespace {

class Parser {
 public:
  Parser(std::string_view s, const VariableNames& names) : s_(s), names_(names) {}

  Mpoly parse() {
    Mpoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  // Unicode minus sign is accepted as well.
  bool eat_minus() { return eat("-") || eat("−"); }

  Mpoly expr() {
    Mpoly r;
    bool negate = eat_minus();
    if (!negate) eat("+");
    Mpoly t = term();
    r = negate ? -t : t;
    for (;;) {
      if (eat("+")) {
        r += term();
      } else if (eat_minus()) {
        r -= term();
      } else {
        break;
      }
    }
    return r;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') return true;
    return match_variable(false).has_value();
  }

  Mpoly term() {
    Mpoly r = power();
    for (;;) {
      if (eat("*") || eat("·")) {
        r *= power();
      } else if (starts_factor()) {
        r *= power();
      } else {
        break;
      }
    }
    return r;
  }

  Mpoly power() {
    Mpoly base = atom();
    if (eat("^")) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  std::optional<Var> match_variable(bool consume) {
    skip_ws();
    std::size_t best_len = 0;
    std::optional<Var> best;
    auto consider = [&](const VariableNames& n) {
      for (std::size_t i = 0; i < kNumVars; ++i) {
        const std::string& name = n.names[i];
        if (name.size() > best_len && s_.substr(pos_, name.size()) == name) {
          best_len = name.size();
          best = static_cast<Var>(i);
        }
      }
    };
    consider(names_);
    if (&names_ == &VariableNames::ascii() || &names_ == &VariableNames::greek()) {
      consider(VariableNames::ascii());
      consider(VariableNames::greek());
    }
    if (best && consume) pos_ += best_len;
    return best;
  }

  Mpoly atom() {
    skip_ws();
    if (eat("(")) {
      Mpoly r = expr();
      if (!eat(")")) fail("expected ')'");
      return r;
    }
    if (eat_minus()) return -power();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Mpoly(Integer(s_.substr(start, pos_ - start)));
    }
    if (auto v = match_variable(true)) return Mpoly::variable(*v);
    fail("expected a number, variable or '('");
  }

  std::string_view s_;
  const VariableNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Mpoly parse_polynomial(std::string_view text, const VariableNames& names) { return Parser(text, names).parse(); }

// ---------------------------------------------------------------------------

ZippelVerdict schwartz_zippel_equal(const NumericExpr& lhs, const NumericExpr& rhs, unsigned degree_bound,
                                    std::size_t trials, u64 prime, u64 seed) {
  if (prime <= degree_bound) throw std::invalid_argument("Schwartz-Zippel prime must exceed the degree bound");
  PrimeField field(prime);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> coord(0, prime - 1);
  ZippelVerdict v;
  const std::size_t max_skips = trials * 4 + 16;
  while (v.trials < trials) {
    Point pt;
    std::array<u64, kNumVars> raw{};
    for (std::size_t i = 0; i < kNumVars; ++i) {
      raw[i] = coord(rng);
      pt[i] = Fp(raw[i], prime);
    }
    Fp a, b;
    try {
      a = lhs(pt);
      b = rhs(pt);
    } catch (const std::domain_error&) {
      if (++v.skipped > max_skips) throw std::runtime_error("too many degenerate sample points");
      continue;
    }
    ++v.trials;
    if (!(a == b)) {
      v.equal = false;
      v.witness = raw;
      return v;
    }
  }
  return v;
}

ZippelVerdict schwartz_zippel_equal(const Mpoly& lhs, const Mpoly& rhs, std::size_t trials, u64 prime, u64 seed) {
  const unsigned bound = std::max(lhs.total_degree(), rhs.total_degree());
  return schwartz_zippel_equal([&](const Point& p) { return lhs.evaluate(p); },
                               [&](const Point& p) { return rhs.evaluate(p); }, bound, trials, prime, seed);
}

}  // namespace howe
