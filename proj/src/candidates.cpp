#include "candidates.hpp"

namespace ucp {

bool genus_valid(const Triple& t) {
  if (t.d < 3 || t.a <= 1 || t.a >= t.b) return false;
  if ((t.a - 1) * (t.b - 1) != (t.d - 1) * (t.d - 2)) return false;
  return gcd(t.a, t.b) == 1;
}

DerivedInvariants derive_unchecked(const Triple& t) {
  DerivedInvariants inv;
  inv.cbar2 = t.d * t.d - t.a * t.b;
  inv.x = 3 * t.d - 8 * t.a;
  inv.kappa = inv.cbar2 > -2 ? Kappa::NegInfinity : Kappa::Two;
  return inv;
}

DerivedInvariants derive(const Triple& t) {
  DerivedInvariants inv = derive_unchecked(t);
  // Both lines of the derived system must hold with the same cbar2.
  if (t.a + t.b != 3 * t.d - 1 - inv.cbar2)
    throw std::invalid_argument("derive: genus formula violated for " + t.str());
  return inv;
}

std::vector<Triple> enumerate_candidates(const BigInt& d) {
  if (d < 3) throw std::invalid_argument("enumerate_candidates: d must be >= 3");
  const BigInt m = (d - 1) * (d - 2);
  std::vector<Triple> out;
  for (BigInt e = 1; e * e < m; ++e) {
    if (m % e != 0) continue;
    const BigInt a = e + 1;
    const BigInt b = m / e + 1;
    if (gcd(a, b) == 1) out.push_back({d, a, b});
  }
  return out;  // e ascending, hence a ascending
}

char family_letter(FamilyKind k) {
  switch (k) {
    case FamilyKind::A: return 'a';
    case FamilyKind::B: return 'b';
    case FamilyKind::C: return 'c';
    case FamilyKind::D: return 'd';
    case FamilyKind::E: return 'e';
    case FamilyKind::F: return 'f';
  }
  return '?';
}

std::optional<FamilyKind> family_from_letter(char c) {
  switch (c) {
    case 'a': return FamilyKind::A;
    case 'b': return FamilyKind::B;
    case 'c': return FamilyKind::C;
    case 'd': return FamilyKind::D;
    case 'e': return FamilyKind::E;
    case 'f': return FamilyKind::F;
  }
  return std::nullopt;
}

std::optional<FamilyTag> family_match(const Triple& t) {
  std::vector<FamilyTag> hits;
  if (t.a == t.d - 1 && t.b == t.d && t.d >= 3)
    hits.push_back({FamilyKind::A, t.d});
  if (t.d >= 4 && t.d % 2 == 0 && t.a == t.d / 2 && t.b == 2 * t.d - 1)
    hits.push_back({FamilyKind::B, t.d});
  for (unsigned j = 5; fib(j) * fib(j) <= t.b; j += 2) {
    if (fib(j - 2) * fib(j - 2) == t.a && fib(j) * fib(j) == t.b &&
        t.d == fib(j - 1) * fib(j - 1) + 1)
      hits.push_back({FamilyKind::C, j});
  }
  for (unsigned j = 5; fib(j) <= t.d; j += 2) {
    if (fib(j) == t.d && fib(j - 2) == t.a && fib(j + 2) == t.b)
      hits.push_back({FamilyKind::D, j});
  }
  if (t == Triple{8, 3, 22}) hits.push_back({FamilyKind::E, 8});
  if (t == Triple{16, 6, 43}) hits.push_back({FamilyKind::F, 16});

  if (hits.empty()) return std::nullopt;
  if (hits.size() > 1)
    throw std::logic_error("family_match: ambiguous tag for " + t.str());
  return hits.front();
}

}  // namespace ucp
