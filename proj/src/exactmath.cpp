#include "exactmath.hpp"

namespace ucp {

BigInt gcd(const BigInt& u, const BigInt& v) {
  return boost::multiprecision::gcd(u, v);
}

BigInt fib(unsigned j) {
  BigInt a = 0, b = 1;
  for (unsigned i = 0; i < j; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return a;
}

BigInt lucas(unsigned j) {
  if (j == 0) throw std::invalid_argument("lucas: index must be >= 1");
  return fib(j - 1) + fib(j + 1);
}

BigInt floor_ratio(const BigInt& n, const BigInt& d) {
  if (d == 0) throw std::invalid_argument("floor_ratio: division by zero");
  if (d < 0) throw std::invalid_argument("floor_ratio: denominator must be positive");
  BigInt q = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) --q;
  return q;
}

BigInt ceil_ratio(const BigInt& n, const BigInt& d) {
  if (d == 0) throw std::invalid_argument("ceil_ratio: division by zero");
  if (d < 0) throw std::invalid_argument("ceil_ratio: denominator must be positive");
  BigInt q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return q;
}

bool is_perfect_square(const BigInt& n, BigInt* root) {
  if (n < 0) return false;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

Surd Surd::divided_exactly_by(const BigInt& k) const {
  if (k == 0) throw std::invalid_argument("Surd: division by zero");
  if (p % k != 0 || q % k != 0)
    throw std::invalid_argument("Surd: inexact division by " + k.str());
  return {p / k, q / k};
}

int surd_sign(const Surd& s) {
  const int sp = s.p.sign();
  const int sq = s.q.sign();
  if (sp == 0 && sq == 0) return 0;
  if (sp >= 0 && sq >= 0) return +1;
  if (sp <= 0 && sq <= 0) return -1;
  // Mixed signs: compare p^2 with 5 q^2. sqrt(5) is irrational, so the
  // two squares can never be equal here.
  const BigInt p2 = s.p * s.p;
  const BigInt q25 = 5 * s.q * s.q;
  if (sp > 0) return p2 > q25 ? +1 : -1;  // q < 0
  return q25 > p2 ? +1 : -1;              // p < 0, q > 0
}

Semigroup::Semigroup(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ < 1 || b_ < 1)
    throw std::invalid_argument("Semigroup: generators must be positive");
  if (gcd(a_, b_) != 1)
    throw std::invalid_argument("Semigroup: generators must be coprime");
  if (a_ > 50'000'000)
    throw std::invalid_argument("Semigroup: generator a too large for Apery table");
  const size_t n = a_.convert_to<size_t>();
  apery_.assign(n, 0);
  const size_t bm = (b_ % a_).convert_to<size_t>();
  size_t r = 0;
  BigInt w = 0;
  for (size_t t = 0; t < n; ++t) {
    apery_[r] = w;
    w += b_;
    r += bm;
    if (r >= n) r -= n;
  }
}

bool Semigroup::contains(const BigInt& n) const {
  if (n < 0) return false;
  const size_t r = (n % a_).convert_to<size_t>();
  return n >= apery_[r];
}

BigInt Semigroup::count_upto(const BigInt& N) const {
  if (N < 0) return 0;
  BigInt total = 0;
  for (const BigInt& w : apery_)
    if (w <= N) total += (N - w) / a_ + 1;
  return total;
}

}  // namespace ucp
