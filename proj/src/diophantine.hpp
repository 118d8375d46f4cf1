#pragma once

#include <optional>
#include <string>
#include <vector>

#include "candidates.hpp"
#include "exactmath.hpp"
#include "obstructions.hpp"

namespace ucp {

// Writing x = 3d - 8a and k = -cbar2, every genus-valid triple satisfies
//   9 k (a - 1) = x^2 + 7ax + a^2 + 9a.
bool excess_identity_holds(const Triple& t);

// One candidate a produced while solving the identity for a fixed x.
// A Solution entry has integral d and b and satisfies the genus product
// (a-1)(b-1) = (d-1)(d-2); it is a genuine Puiseux-pair candidate only
// when coprime is also set (solutions with gcd(a, b) > 1 exist, e.g.
// (14,5,40) at x = 2 and (31,11,88) at x = 5, both with b = 8a).
struct ExcessEntry {
  enum class Status { Solution, DNotIntegral, ARejected };

  BigInt k;  // -cbar2 in the searched range [2, 7]
  BigInt a;
  Status status = Status::Solution;
  bool coprime = false;
  std::optional<Triple> triple;  // set for Status::Solution
  BigInt d, b;
  std::string note;
};

const char* excess_status_name(ExcessEntry::Status s);

struct ExcessCase {
  BigInt x;
  std::vector<ExcessEntry> entries;   // sorted by a ascending
  std::vector<std::string> k_notes;   // per-k outcomes with no integral root

  std::vector<Triple> solutions() const;          // all Solution entries
  std::vector<Triple> coprime_solutions() const;  // genus-valid ones
};

// Solves the identity for 0 <= x <= 5 by treating it, for each candidate
// k in [2, 7], as a quadratic in a with an integer discriminant test.
ExcessCase solve_excess_case(const BigInt& x);

// Numerical bookkeeping of the Cremona transformation built on the nodal
// cubic through the first seven infinitely near points of the cusp:
// image degree d' = 8d - 21a (equivalently 3d' = 8x + a), image cusp pair
// (b - 7a, a). The second image point, present for x >= 1, has
// delta-invariant (7x^2 - 7x)/2 and Milnor number 7x^2 - 7x - r + 1 as a
// function of its unknown branch count r.
struct CremonaImage {
  BigInt d_prime;
  BigInt pair_small, pair_large;  // (b - 7a, a) sorted ascending
  bool image_smooth_germ = false; // b - 7a = 1: the image germ is smooth
  BigInt x;

  BigInt delta_second() const { return (7 * x * x - 7 * x) / 2; }
  BigInt mu_second(const BigInt& r) const { return 7 * x * x - 7 * x - r + 1; }
};

// Requires genus-valid, cbar2 <= -2 and d < 3a.
CremonaImage cremona_image(const Triple& t);

enum class CremonaOutcome {
  EliminatedViaImage,   // the image triple fails the obstruction pipeline
  ImageRealizable,      // the image is a catalog member: inconclusive
  ImageSurvivor,        // the image survives: inconclusive
  DegenerateImage,      // x = 0 or smooth image germ: nothing to test
  MultibranchImage,     // x >= 2: second point unknown, refuses to conclude
};

struct CremonaReduction {
  CremonaOutcome outcome;
  std::optional<Triple> image;
  std::optional<ClassificationVerdict> image_verdict;
  std::string note;
};

// Requires the cremona_image preconditions. Only x = 1 images (which are
// again rational unicuspidal) are tested, through the computation-only
// image filter set.
CremonaReduction cremona_reduce_and_test(const Triple& t);

}  // namespace ucp
