#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace ucp {

// All arithmetic in this project is arbitrary precision and exact.
// No floating point is used anywhere outside of test-only oracles.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// gcd of |u| and |v|; gcd(0,0) = 0.
BigInt gcd(const BigInt& u, const BigInt& v);

// Fibonacci numbers: fib(0)=0, fib(1)=1, fib(j+2)=fib(j+1)+fib(j).
BigInt fib(unsigned j);

// fib(j-1) + fib(j+1), the Lucas companion; requires j >= 1.
BigInt lucas(unsigned j);

// Mathematical floor/ceiling of n/d. Requires d > 0; correct for negative n.
BigInt floor_ratio(const BigInt& n, const BigInt& d);
BigInt ceil_ratio(const BigInt& n, const BigInt& d);

// If n is a perfect square, returns true and stores the root (when asked).
bool is_perfect_square(const BigInt& n, BigInt* root = nullptr);

// p + q*sqrt(5). The sign is always decided exactly, by comparing p^2
// against 5 q^2 together with the signs of p and q.
struct Surd {
  BigInt p;
  BigInt q;

  Surd() : p(0), q(0) {}
  Surd(BigInt p_, BigInt q_) : p(std::move(p_)), q(std::move(q_)) {}

  Surd operator+(const Surd& o) const { return {p + o.p, q + o.q}; }
  Surd operator-(const Surd& o) const { return {p - o.p, q - o.q}; }
  Surd operator-() const { return {-p, -q}; }
  // (p1 + q1 s)(p2 + q2 s) with s^2 = 5
  Surd operator*(const Surd& o) const {
    return {p * o.p + 5 * q * o.q, p * o.q + q * o.p};
  }
  bool operator==(const Surd& o) const { return p == o.p && q == o.q; }

  // Divide both components by k, throwing unless the division is exact.
  Surd divided_exactly_by(const BigInt& k) const;
};

// Sign of p + q*sqrt(5) in {-1, 0, +1}; zero only for p = q = 0.
int surd_sign(const Surd& s);

// Numerical semigroup <a, b> with gcd(a, b) = 1. Membership uses the
// Apery set of a: n is in the semigroup iff n >= 0 and n is at least the
// smallest element in its residue class mod a.
class Semigroup {
 public:
  Semigroup(BigInt a, BigInt b);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }

  bool contains(const BigInt& n) const;

  // #(semigroup ∩ [0, N]), a closed interval containing 0.
  BigInt count_upto(const BigInt& N) const;

  // Largest integer not in the semigroup: ab - a - b (for a, b > 1).
  BigInt frobenius() const { return a_ * b_ - a_ - b_; }

 private:
  BigInt a_, b_;
  std::vector<BigInt> apery_;  // apery_[r] = min element congruent to r mod a
};

}  // namespace ucp
