#pragma once

#include <string>
#include <utility>
#include <vector>

#include "candidates.hpp"
#include "exactmath.hpp"

namespace ucp {

// Integer solution of x^2 - 5 y^2 = -4. Always x = y (mod 2).
struct PellSolution {
  BigInt x, y;
  bool operator==(const PellSolution& o) const { return x == o.x && y == o.y; }
};

bool is_pell_solution(const PellSolution& s);

// Canonical-quadrant solutions (x > 0, 0 < y <= ymax), generated by the
// norm-one recurrence (x, y) -> ((3x+5y)/2, (x+3y)/2) from the seed (1, 1).
// Both components stay even-summed, so the halving is always exact.
std::vector<PellSolution> pell_enumerate(const BigInt& ymax);

// Oracle: direct scan over y, testing 5y^2 - 4 for squareness.
std::vector<PellSolution> pell_enumerate_bruteforce(const BigInt& ymax);

// The four closed families of solutions, indexed by j >= 0:
//   (A) +/- (F(6j+2)+F(6j),   F(6j+1))
//   (B) +/- (F(6j)+F(6j-2),   F(6j-1))
//   (C) +/- (F(6j+2)+F(6j),  -F(6j+1))
//   (D) +/- (F(6j)+F(6j-2),  -F(6j-1))
// Solutions whose Fibonacci index is 3 mod 6 (e.g. (4, 2)) match none of
// the four forms; decompose reports these as None rather than forcing a
// match.
enum class PellFamily { A, B, C, D, None };

struct FamilyDecomposition {
  PellFamily family = PellFamily::None;
  BigInt j = 0;          // family parameter, when matched
  int sign = +1;         // overall sign of the matched form
  BigInt fib_index = 0;  // odd index J with (|x|, |y|) = (lucas(J), fib(J))
  std::string note;
};

FamilyDecomposition decompose(const PellSolution& s);

// omega^2 + v^2 = 3 omega v - 1; the solutions of the quadratic systems
// behind cbar2 = 0 (as (m, n) with a = m^2, b = n^2) and cbar2 = -1
// (as (a, d)).
struct QuadraticPair {
  BigInt omega, v;
};

// (x, y) -> (omega, v) = ((x+3y)/2, y); exact by the parity invariant.
QuadraticPair pell_to_quadratic_pair(const PellSolution& s);

// All 0 < m < n <= bound with m^2 + n^2 = 3mn - 1, by direct scan over n
// (solving the quadratic in m per n). Oracle for the statement that the
// solutions are exactly the consecutive odd-index Fibonacci pairs.
std::vector<std::pair<BigInt, BigInt>> fibonacci_pair_solutions_bruteforce(
    const BigInt& bound);

// Members of one family with degree <= dmax; every output is genus-valid.
std::vector<Triple> family_generate(FamilyKind kind, const BigInt& dmax);

}  // namespace ucp
