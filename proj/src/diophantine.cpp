#include "diophantine.hpp"

#include <algorithm>
#include <cassert>

namespace ucp {

bool excess_identity_holds(const Triple& t) {
  const DerivedInvariants inv = derive(t);
  const BigInt lhs = -9 * inv.cbar2 * (t.a - 1);
  const BigInt rhs =
      inv.x * inv.x + 7 * t.a * inv.x + t.a * t.a + 9 * t.a;
  return lhs == rhs;
}

const char* excess_status_name(ExcessEntry::Status s) {
  switch (s) {
    case ExcessEntry::Status::Solution: return "solution";
    case ExcessEntry::Status::DNotIntegral: return "rejected-d-not-integral";
    case ExcessEntry::Status::ARejected: return "rejected-a";
  }
  return "?";
}

std::vector<Triple> ExcessCase::solutions() const {
  std::vector<Triple> out;
  for (const ExcessEntry& e : entries)
    if (e.status == ExcessEntry::Status::Solution) out.push_back(*e.triple);
  return out;
}

std::vector<Triple> ExcessCase::coprime_solutions() const {
  std::vector<Triple> out;
  for (const ExcessEntry& e : entries)
    if (e.status == ExcessEntry::Status::Solution && e.coprime)
      out.push_back(*e.triple);
  return out;
}

ExcessCase solve_excess_case(const BigInt& x) {
  if (x < 0 || x > 5)
    throw std::invalid_argument("solve_excess_case: x must lie in [0, 5]");
  ExcessCase out;
  out.x = x;
  // For fixed k = -cbar2 the identity 9k(a-1) = x^2 + 7ax + a^2 + 9a is a
  // quadratic in a:  a^2 + (7x + 9 - 9k) a + (x^2 + 9k) = 0.
  for (BigInt k = 2; k <= 7; ++k) {
    const BigInt bq = 7 * x + 9 - 9 * k;
    const BigInt cq = x * x + 9 * k;
    const BigInt disc = bq * bq - 4 * cq;
    BigInt s;
    if (disc < 0) {
      out.k_notes.push_back("k=" + k.str() + ": no real root");
      continue;
    }
    if (!is_perfect_square(disc, &s)) {
      out.k_notes.push_back("k=" + k.str() + ": discriminant " + disc.str() +
                            " is not a perfect square");
      continue;
    }
    std::vector<BigInt> roots = {(-bq + s) / 2};
    if (s != 0) roots.push_back((-bq - s) / 2);
    // b^2 - 4c = s^2 forces s = b (mod 2), so the roots are integers.
    assert((bq + s) % 2 == 0);
    for (const BigInt& a : roots) {
      ExcessEntry e;
      e.k = k;
      e.a = a;
      if (a <= 1) {
        e.status = ExcessEntry::Status::ARejected;
        e.note = "a <= 1: not a Puiseux exponent";
        out.entries.push_back(e);
        continue;
      }
      if ((x + 8 * a) % 3 != 0) {
        e.status = ExcessEntry::Status::DNotIntegral;
        e.note = "3 does not divide x + 8a";
        out.entries.push_back(e);
        continue;
      }
      e.d = (x + 8 * a) / 3;
      e.b = 3 * e.d - 1 + k - a;
      const Triple t{e.d, a, e.b};
      if ((a - 1) * (e.b - 1) != (e.d - 1) * (e.d - 2))
        throw std::logic_error("solve_excess_case: root violates the genus product");
      e.status = ExcessEntry::Status::Solution;
      e.coprime = gcd(a, e.b) == 1;
      if (!e.coprime)
        e.note = "gcd(a, b) = " + gcd(a, e.b).str() + ": not a Puiseux pair";
      e.triple = t;
      out.entries.push_back(e);
    }
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const ExcessEntry& l, const ExcessEntry& r) {
              if (l.a != r.a) return l.a < r.a;
              return l.k < r.k;
            });
  return out;
}

CremonaImage cremona_image(const Triple& t) {
  if (!genus_valid(t))
    throw std::invalid_argument("cremona_image: triple not genus-valid");
  const DerivedInvariants inv = derive(t);
  if (inv.cbar2 > -2)
    throw std::invalid_argument("cremona_image: requires cbar2 <= -2");
  if (t.d >= 3 * t.a)
    throw std::invalid_argument("cremona_image: requires d < 3a");
  CremonaImage img;
  img.x = inv.x;
  img.d_prime = 8 * t.d - 21 * t.a;
  assert(3 * img.d_prime == 8 * img.x + t.a);
  const BigInt p = t.b - 7 * t.a;
  img.pair_small = p < t.a ? p : t.a;
  img.pair_large = p < t.a ? t.a : p;
  img.image_smooth_germ = p == 1;
  return img;
}

CremonaReduction cremona_reduce_and_test(const Triple& t) {
  const CremonaImage img = cremona_image(t);
  CremonaReduction red;
  if (img.x == 0) {
    red.outcome = CremonaOutcome::DegenerateImage;
    red.note = img.d_prime == 1 ? "image is a line"
                                : "no second intersection point and smooth germ";
    return red;
  }
  if (img.x >= 2) {
    red.outcome = CremonaOutcome::MultibranchImage;
    red.note = "second image point has unknown branch count; not conclusive";
    return red;
  }
  if (img.x < 0 || img.image_smooth_germ || img.pair_small < 2) {
    red.outcome = CremonaOutcome::DegenerateImage;
    red.note = "image germ is not a genuine Puiseux pair";
    return red;
  }
  const Triple image{img.d_prime, img.pair_small, img.pair_large};
  red.image = image;
  if (!genus_valid(image)) {
    red.outcome = CremonaOutcome::DegenerateImage;
    red.note = "image triple fails the genus formula";
    return red;
  }
  const ClassificationVerdict v = run_pipeline(image, FilterSet::image_check());
  red.image_verdict = v;
  switch (v.kind) {
    case VerdictKind::Eliminated:
    case VerdictKind::EliminatedByRecordedFact:
      red.outcome = CremonaOutcome::EliminatedViaImage;
      break;
    case VerdictKind::RealizableKnown:
      red.outcome = CremonaOutcome::ImageRealizable;
      red.note = "image is a realizable catalog member";
      break;
    default:
      red.outcome = CremonaOutcome::ImageSurvivor;
      red.note = "image not excluded by computation";
      break;
  }
  return red;
}

}  // namespace ucp
