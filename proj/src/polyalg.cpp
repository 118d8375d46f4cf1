#include "polyalg.hpp"

#include <algorithm>
#include <cassert>

namespace ucp {

namespace {

constexpr const char* kVarNames[] = {"x", "y", "z", "t"};

unsigned long long degree_of(const Poly::Exponents& e) {
  unsigned long long d = 0;
  for (unsigned v : e) d += v;
  return d;
}

void trim(Poly::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Poly::Exponents add_exps(const Poly::Exponents& a, const Poly::Exponents& b) {
  Poly::Exponents r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

// a - b, defined only when b divides a componentwise.
bool sub_exps(const Poly::Exponents& a, const Poly::Exponents& b,
              Poly::Exponents* out) {
  if (b.size() > a.size()) return false;
  Poly::Exponents r = a;
  for (size_t i = 0; i < b.size(); ++i) {
    if (b[i] > r[i]) return false;
    r[i] -= b[i];
  }
  trim(r);
  *out = r;
  return true;
}

}  // namespace

bool Poly::GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  const size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    const unsigned ea = i < a.size() ? a[i] : 0;
    const unsigned eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea < eb;
  }
  return false;
}

Poly Poly::constant(Rational c) {
  Poly p;
  if (c != 0) p.terms_.emplace(Exponents{}, std::move(c));
  return p;
}

Poly Poly::variable(unsigned var, unsigned exp) {
  if (exp == 0) return constant(1);
  Poly p;
  Exponents e(var + 1, 0);
  e[var] = exp;
  p.terms_.emplace(std::move(e), 1);
  return p;
}

Poly Poly::xy_term(Rational c, unsigned ex, unsigned ey) {
  Poly p;
  if (c == 0) return p;
  Exponents e{ex, ey};
  trim(e);
  p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

long long Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long long>(degree_of(terms_.rbegin()->first));
}

Rational Poly::coefficient(const Exponents& e) const {
  Exponents k = e;
  trim(k);
  const auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(Exponents e, Rational c) {
  if (c == 0) return;
  trim(e);
  const auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.add_term(add_exps(ea, eb), ca * cb);
  return r;
}

Poly pow(const Poly& base, unsigned long long n) {
  Poly result = Poly::constant(1);
  Poly b = base;
  while (n > 0) {
    if (n & 1) result = result * b;
    n >>= 1;
    if (n > 0) b = b * b;
  }
  return result;
}

Poly substitute(const Poly& p, unsigned var, const Poly& value) {
  Poly result;
  std::map<unsigned, Poly> powers;  // cache of value^k
  for (const auto& [e, c] : p.terms_) {
    Poly::Exponents rest = e;
    unsigned k = 0;
    if (var < rest.size()) {
      k = rest[var];
      rest[var] = 0;
      trim(rest);
    }
    Poly term;
    term.add_term(std::move(rest), c);
    if (k > 0) {
      auto it = powers.find(k);
      if (it == powers.end()) it = powers.emplace(k, pow(value, k)).first;
      term = term * it->second;
    }
    result = result + term;
  }
  return result;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    const bool neg = c < 0;
    const Rational ac = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    for (size_t v = 0; v < it->first.size(); ++v) {
      if (it->first[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += v < 4 ? kVarNames[v] : "v" + std::to_string(v);
      if (it->first[v] > 1) mono += "^" + std::to_string(it->first[v]);
    }
    if (mono.empty()) {
      out += ac.str();
    } else {
      if (ac != 1) out += ac.str() + "*";
      out += mono;
    }
  }
  return out;
}

namespace {

Poly monomial(Rational c, const Poly::Exponents& e) {
  Poly m = Poly::constant(std::move(c));
  for (size_t v = 0; v < e.size(); ++v)
    if (e[v] > 0) m = m * Poly::variable(static_cast<unsigned>(v), e[v]);
  return m;
}

}  // namespace

DivisionResult divide(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::invalid_argument("divide: zero divisor");
  DivisionResult res;
  Poly r = num;
  const auto& dlead = *den.terms().rbegin();
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().rbegin();
    Poly::Exponents q;
    if (sub_exps(rlead.first, dlead.first, &q)) {
      const Poly step = monomial(rlead.second / dlead.second, q);
      res.quotient = res.quotient + step;
      r = r - step * den;
    } else {
      // The leading term cannot be cancelled; park it in the remainder.
      const Poly moved = monomial(rlead.second, rlead.first);
      res.remainder = res.remainder + moved;
      r = r - moved;
    }
  }
  res.exact = res.remainder.is_zero();
  return res;
}

Poly exact_divide(const Poly& num, const Poly& den) {
  DivisionResult res = divide(num, den);
  if (!res.exact) throw NotDivisibleError(std::move(res.remainder));
  if (!(res.quotient * den == num))
    throw std::logic_error("exact_divide: re-multiplication check failed");
  return res.quotient;
}

Poly kashiwara_g() {
  // x y - x^3 - y^3
  return Poly::xy_term(1, 1, 1) - Poly::xy_term(1, 3, 0) - Poly::xy_term(1, 0, 3);
}

Poly kashiwara_seed_q(int s) {
  if (s == -1) return Poly::xy_term(1, 0, 1);                       // y
  if (s == 0) return Poly::xy_term(1, 0, 1) - Poly::xy_term(1, 2, 0);  // y - x^2
  throw std::invalid_argument("kashiwara_seed_q: s must be -1 or 0");
}

Poly kashiwara_seed_p(int s) {
  if (s == -1) return kashiwara_seed_q(0);  // y - x^2
  if (s == 0) {
    const Poly u = kashiwara_seed_q(0);  // y - x^2
    const Poly xy2 = Poly::xy_term(2, 1, 2);
    return u * u - xy2 * u + Poly::xy_term(1, 0, 5);
  }
  throw std::invalid_argument("kashiwara_seed_p: s must be -1 or 0");
}

std::vector<KashiwaraPair> kashiwara_sequence(int smax) {
  if (smax < 1) throw std::invalid_argument("kashiwara_sequence: smax must be >= 1");
  std::vector<KashiwaraPair> out;
  for (int s = -1; s <= 0; ++s) {
    KashiwaraPair kp;
    kp.s = s;
    kp.p = kashiwara_seed_p(s);
    kp.q = kashiwara_seed_q(s);
    kp.degree = kp.p.total_degree();
    out.push_back(std::move(kp));
  }
  const Poly g = kashiwara_g();
  for (int s = 1; s <= smax; ++s) {
    KashiwaraPair kp;
    kp.s = s;
    kp.q = out.back().p;  // Q(s) = P(s-1)
    const Poly& qprev = out[out.size() - 1].q;  // Q(s-1)
    const Poly qcubed = kp.q * kp.q * kp.q;
    kp.exponent_default = fib(2 * s + 1);

    std::vector<std::pair<BigInt, Poly>> exact_hits;
    for (int idx = 2 * s + 1; idx <= 2 * s + 5; ++idx) {
      const BigInt e = fib(idx);
      const Poly num = pow(g, e.convert_to<unsigned long long>()) + qcubed;
      DivisionResult dr = divide(num, qprev);
      if (dr.exact) exact_hits.emplace_back(e, std::move(dr.quotient));
    }
    if (exact_hits.empty())
      throw std::runtime_error(
          "kashiwara_sequence: no Fibonacci exponent in the search window "
          "gives an exact division at s = " + std::to_string(s));
    if (exact_hits.size() > 1)
      throw std::logic_error(
          "kashiwara_sequence: exact exponent not unique at s = " +
          std::to_string(s));
    kp.exponent_used = exact_hits.front().first;
    kp.default_exact = kp.exponent_used == kp.exponent_default;
    kp.p = std::move(exact_hits.front().second);
    kp.degree = kp.p.total_degree();
    out.push_back(std::move(kp));
  }
  return out;
}

bool verify_family_b_parametrization(long long d) {
  if (d < 4 || d % 2 != 0)
    throw std::invalid_argument("verify_family_b_parametrization: d must be even, >= 4");
  const unsigned ud = static_cast<unsigned>(d);
  const Poly z = Poly::constant(1) + Poly::variable(3, ud - 1);
  const Poly x = Poly::variable(3, ud / 2);
  const Poly y = Poly::variable(3, ud);
  const Poly lhs = pow(z * y - x * x, ud / 2) - x * pow(y, ud - 1);
  return lhs.is_zero();
}

PencilCheck pencil_degree_check(int s, const std::vector<KashiwaraPair>* seq) {
  if (s < 0) throw std::invalid_argument("pencil_degree_check: s must be >= 0");
  PencilCheck pc;
  const unsigned u = static_cast<unsigned>(s);
  pc.index_identity =
      fib(2 * u + 3) * fib(2 * u + 1) == fib(2 * u + 2) * fib(2 * u + 2) + 1;
  pc.measured_identity =
      fib(2 * u + 5) * fib(2 * u + 3) == fib(2 * u + 4) * fib(2 * u + 4) + 1;
  pc.fiber_degree = fib(2 * u + 5) * fib(2 * u + 3);
  if (seq) {
    pc.measured_degrees_ok = false;
    for (const KashiwaraPair& kp : *seq) {
      if (kp.s != s) continue;
      const BigInt dp = kp.p.total_degree();
      const BigInt dq = kp.q.total_degree();
      pc.measured_degrees_ok = dp == fib(2 * u + 5) && dq == fib(2 * u + 3) &&
                               dp * dq == fib(2 * u + 4) * fib(2 * u + 4) + 1;
    }
  }
  return pc;
}

}  // namespace ucp
