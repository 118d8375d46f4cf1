#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exactmath.hpp"

namespace ucp {

// Candidate numerical data of a rational unicuspidal plane curve of
// degree d whose cusp has the single Puiseux pair (a, b), 1 < a < b.
struct Triple {
  BigInt d, a, b;

  bool operator==(const Triple& o) const {
    return d == o.d && a == o.a && b == o.b;
  }
  bool operator<(const Triple& o) const {
    if (d != o.d) return d < o.d;
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
  std::string str() const {
    return "(" + d.str() + "," + a.str() + "," + b.str() + ")";
  }
};

// Logarithmic Kodaira dimension of the complement, assigned from cbar2
// alone: -infinity iff cbar2 > -2, otherwise 2.
enum class Kappa { NegInfinity, Two };

struct DerivedInvariants {
  BigInt cbar2;  // self-intersection of the strict transform: d^2 - ab
  BigInt x;      // 3d - 8a
  Kappa kappa;
};

// Genus formula: (a-1)(b-1) = (d-1)(d-2), with d >= 3, 1 < a < b and
// gcd(a, b) = 1.
bool genus_valid(const Triple& t);

// Requires genus_valid(t); throws if the two derived equations
// a+b = 3d-1-cbar2 and ab = d^2-cbar2 disagree (a genus violation).
DerivedInvariants derive(const Triple& t);

// Same numbers without the consistency requirement (for evaluating
// individual filters on synthetic inputs).
DerivedInvariants derive_unchecked(const Triple& t);

// All (a, b) with 1 < a < b, gcd(a, b) = 1 and (a-1)(b-1) = (d-1)(d-2),
// from the divisor pairs of (d-1)(d-2); sorted by a ascending.
std::vector<Triple> enumerate_candidates(const BigInt& d);

// The six families of realizable triples:
//   (a) (d, d-1, d)                          d >= 3
//   (b) (d, d/2, 2d-1)                       d even >= 4
//   (c) (F(j-1)^2+1, F(j-2)^2, F(j)^2)       j odd >= 5
//   (d) (F(j), F(j-2), F(j+2))               j odd >= 5
//   (e) (8, 3, 22)
//   (f) (16, 6, 43)
enum class FamilyKind { A, B, C, D, E, F };

struct FamilyTag {
  FamilyKind kind;
  BigInt param;  // d for kinds a/b/e/f, the Fibonacci index j for c/d

  bool operator==(const FamilyTag& o) const {
    return kind == o.kind && param == o.param;
  }
};

char family_letter(FamilyKind k);
std::optional<FamilyKind> family_from_letter(char c);

// The unique family tag of a genus-valid triple, or nullopt.
std::optional<FamilyTag> family_match(const Triple& t);

}  // namespace ucp
