#include "pell.hpp"

#include <cassert>

namespace ucp {

bool is_pell_solution(const PellSolution& s) {
  return s.x * s.x - 5 * s.y * s.y == -4;
}

std::vector<PellSolution> pell_enumerate(const BigInt& ymax) {
  if (ymax < 1) throw std::invalid_argument("pell_enumerate: ymax must be >= 1");
  std::vector<PellSolution> out;
  BigInt x = 1, y = 1;
  while (y <= ymax) {
    out.push_back({x, y});
    BigInt nx = 3 * x + 5 * y;
    BigInt ny = x + 3 * y;
    assert(nx % 2 == 0 && ny % 2 == 0);
    x = nx / 2;
    y = ny / 2;
  }
  return out;
}

std::vector<PellSolution> pell_enumerate_bruteforce(const BigInt& ymax) {
  if (ymax < 1) throw std::invalid_argument("pell_enumerate_bruteforce: ymax must be >= 1");
  std::vector<PellSolution> out;
  for (BigInt y = 1; y <= ymax; ++y) {
    BigInt x;
    if (is_perfect_square(5 * y * y - 4, &x)) out.push_back({x, y});
  }
  return out;
}

FamilyDecomposition decompose(const PellSolution& s) {
  if (!is_pell_solution(s))
    throw std::invalid_argument("decompose: not a solution of x^2 - 5y^2 = -4");
  FamilyDecomposition dec;
  const BigInt ax = boost::multiprecision::abs(s.x);
  const BigInt ay = boost::multiprecision::abs(s.y);
  unsigned J = 1;
  while (fib(J) < ay) J += 2;
  assert(fib(J) == ay && lucas(J) == ax);
  dec.fib_index = J;
  dec.sign = s.x < 0 ? -1 : +1;
  const bool conjugate = (s.x < 0) != (s.y < 0);  // opposite signs
  switch (J % 6) {
    case 1:
      dec.family = conjugate ? PellFamily::C : PellFamily::A;
      dec.j = (J - 1) / 6;
      break;
    case 5:
      dec.family = conjugate ? PellFamily::D : PellFamily::B;
      dec.j = (J + 1) / 6;
      break;
    default:
      dec.family = PellFamily::None;
      dec.note = "Fibonacci index " + std::to_string(J) +
                 " is 3 mod 6: matched by none of the four closed families";
      break;
  }
  return dec;
}

QuadraticPair pell_to_quadratic_pair(const PellSolution& s) {
  if (!is_pell_solution(s))
    throw std::invalid_argument("pell_to_quadratic_pair: invalid solution");
  const BigInt num = s.x + 3 * s.y;
  assert(num % 2 == 0);
  QuadraticPair p{num / 2, s.y};
  assert(p.omega * p.omega + p.v * p.v == 3 * p.omega * p.v - 1);
  return p;
}

std::vector<std::pair<BigInt, BigInt>> fibonacci_pair_solutions_bruteforce(
    const BigInt& bound) {
  if (bound < 1)
    throw std::invalid_argument("fibonacci_pair_solutions_bruteforce: bound must be >= 1");
  std::vector<std::pair<BigInt, BigInt>> out;
  for (BigInt n = 1; n <= bound; ++n) {
    BigInt s;
    if (!is_perfect_square(5 * n * n - 4, &s)) continue;
    const BigInt num = 3 * n - s;
    assert(num % 2 == 0);
    const BigInt m = num / 2;
    if (m > 0 && m < n) out.emplace_back(m, n);
  }
  return out;
}

std::vector<Triple> family_generate(FamilyKind kind, const BigInt& dmax) {
  std::vector<Triple> out;
  switch (kind) {
    case FamilyKind::A:
      for (BigInt d = 3; d <= dmax; ++d) out.push_back({d, d - 1, d});
      break;
    case FamilyKind::B:
      for (BigInt d = 4; d <= dmax; d += 2) out.push_back({d, d / 2, 2 * d - 1});
      break;
    case FamilyKind::C:
      for (unsigned j = 5;; j += 2) {
        const BigInt d = fib(j - 1) * fib(j - 1) + 1;
        if (d > dmax) break;
        out.push_back({d, fib(j - 2) * fib(j - 2), fib(j) * fib(j)});
      }
      break;
    case FamilyKind::D:
      for (unsigned j = 5; fib(j) <= dmax; j += 2)
        out.push_back({fib(j), fib(j - 2), fib(j + 2)});
      break;
    case FamilyKind::E:
      if (dmax >= 8) out.push_back({8, 3, 22});
      break;
    case FamilyKind::F:
      if (dmax >= 16) out.push_back({16, 6, 43});
      break;
  }
  for (const Triple& t : out)
    if (!genus_valid(t))
      throw std::logic_error("family_generate: produced invalid triple " + t.str());
  return out;
}

}  // namespace ucp
