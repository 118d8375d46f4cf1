#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactmath.hpp"

namespace ucp {

// Sparse multivariate polynomial with exact rational coefficients.
// Variables are fixed ids: 0 = x, 1 = y, 2 = z, 3 = t. Exponent vectors
// are stored with trailing zeros trimmed; zero coefficients are never
// stored. Terms are kept in graded-lex order so display and iteration
// are canonical.
class Poly {
 public:
  using Exponents = std::vector<unsigned>;

  struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using Terms = std::map<Exponents, Rational, GrlexLess>;

  Poly() = default;
  static Poly constant(Rational c);
  static Poly variable(unsigned var, unsigned exp = 1);
  // coefficient * x^ex * y^ey (convenience for the two-variable seeds)
  static Poly xy_term(Rational c, unsigned ex, unsigned ey);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  // -1 for the zero polynomial.
  long long total_degree() const;

  Rational coefficient(const Exponents& e) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  friend Poly pow(const Poly& base, unsigned long long n);
  friend Poly substitute(const Poly& p, unsigned var, const Poly& value);

  // Canonical text: terms in descending graded-lex order with explicit
  // exponents, e.g. "2*x^3*y^2 + y^5 - 2*x*y^3".
  std::string str() const;

 private:
  void add_term(Exponents e, Rational c);
  Terms terms_;
};

Poly pow(const Poly& base, unsigned long long n);
Poly substitute(const Poly& p, unsigned var, const Poly& value);

struct DivisionResult {
  bool exact = false;
  Poly quotient;
  Poly remainder;
};

// Multivariate division by a single divisor under the graded-lex order.
// num = quotient * den + remainder, with no remainder term divisible by
// the leading monomial of den; exact iff the remainder is zero.
DivisionResult divide(const Poly& num, const Poly& den);

class NotDivisibleError : public std::runtime_error {
 public:
  explicit NotDivisibleError(Poly remainder)
      : std::runtime_error("polynomial division is not exact"),
        remainder(std::move(remainder)) {}
  Poly remainder;
};

// Exact quotient, verified by re-multiplication; throws NotDivisibleError
// (carrying the remainder) when division is inexact.
Poly exact_divide(const Poly& num, const Poly& den);

// Kashiwara-style recursion producing the curve equations of the two
// Fibonacci families:
//   P(-1) = y - x^2, Q(-1) = y, Q(0) = y - x^2,
//   P(0)  = (y - x^2)^2 - 2 x y^2 (y - x^2) + y^5,
//   G     = x y - x^3 - y^3,
//   Q(s)  = P(s-1),   P(s) = (G^e + Q(s)^3) / Q(s-1).
// The exponent e = fib(2s+1) is tried first; when that division is
// inexact, the Fibonacci values fib(2s+1) .. fib(2s+5) are searched and
// the unique exact one is used (uniqueness is asserted). The measured
// degrees come out as fib(2s+5).
struct KashiwaraPair {
  int s = 0;
  Poly p, q;
  BigInt exponent_default = 0;  // fib(2s+1), the exponent tried first
  BigInt exponent_used = 0;
  bool default_exact = true;
  long long degree = 0;  // total degree of p
};

Poly kashiwara_g();
Poly kashiwara_seed_p(int s);  // s = -1 or 0
Poly kashiwara_seed_q(int s);  // s = -1 or 0

// Pairs for s = -1 .. smax; requires smax >= 1.
std::vector<KashiwaraPair> kashiwara_sequence(int smax);

// Substitutes z = 1 + t^(d-1), x = t^(d/2), y = t^d into
// (z y - x^2)^(d/2) - x y^(d-1) and checks that the result vanishes.
// Requires d even, d >= 4.
bool verify_family_b_parametrization(long long d);

// Degree bookkeeping of the pencil P(s)^e / Q(s)^f: the Fibonacci
// identities fib(2s+3) fib(2s+1) = fib(2s+2)^2 + 1 (the quoted index
// form) and fib(2s+5) fib(2s+3) = fib(2s+4)^2 + 1 (the measured-degree
// form), plus the check that measured degrees realize the latter.
struct PencilCheck {
  bool index_identity = false;
  bool measured_identity = false;
  BigInt fiber_degree = 0;  // fib(2s+5) * fib(2s+3)
  bool measured_degrees_ok = true;  // only meaningful with a sequence
};

PencilCheck pencil_degree_check(int s,
                                const std::vector<KashiwaraPair>* seq = nullptr);

}  // namespace ucp
