#include <doctest.h>

#include "diophantine.hpp"

using namespace ucp;

TEST_SUITE_BEGIN("diophantine");

TEST_CASE("excess identity on known triples") {
  CHECK(excess_identity_holds({8, 3, 22}));   // 36 = 9 + 27
  CHECK(excess_identity_holds({11, 4, 31}));  // 81 = 1 + 28 + 16 + 36
  CHECK(excess_identity_holds({20, 7, 58}));  // 324 = 16 + 196 + 49 + 63
  CHECK_THROWS_AS(excess_identity_holds({7, 3, 19}), std::invalid_argument);
}

TEST_CASE("case analysis per excess value") {
  const ExcessCase x0 = solve_excess_case(0);
  CHECK(x0.coprime_solutions() ==
        std::vector<Triple>{{8, 3, 22}, {16, 6, 43}});

  const ExcessCase x1 = solve_excess_case(1);
  CHECK(x1.coprime_solutions() ==
        std::vector<Triple>{{11, 4, 31}, {19, 7, 52}});

  const ExcessCase x5 = solve_excess_case(5);
  CHECK(x5.solutions() == std::vector<Triple>{{23, 8, 67}, {31, 11, 88}});
  CHECK(x5.coprime_solutions() == std::vector<Triple>{{23, 8, 67}});

  CHECK_THROWS_AS(solve_excess_case(6), std::invalid_argument);
  CHECK_THROWS_AS(solve_excess_case(-1), std::invalid_argument);
}

TEST_CASE("non-coprime integral solutions are flagged, never dropped") {
  const ExcessCase x2 = solve_excess_case(2);
  bool seen = false;
  for (const ExcessEntry& e : x2.entries) {
    if (e.a != 5) continue;
    seen = true;
    CHECK(e.status == ExcessEntry::Status::Solution);
    CHECK_FALSE(e.coprime);
    CHECK(e.d == 14);
    CHECK(e.b == 40);
    CHECK(e.k == 4);
  }
  CHECK(seen);
}

TEST_CASE("cremona image numerics") {
  const CremonaImage i5 = cremona_image({19, 7, 52});
  CHECK(i5.d_prime == 5);
  CHECK(i5.pair_small == 3);
  CHECK(i5.pair_large == 7);
  CHECK(i5.x == 1);
  CHECK_FALSE(i5.image_smooth_germ);
  CHECK(i5.delta_second() == 0);
  CHECK(i5.mu_second(1) == 0);

  const CremonaImage i2 = cremona_image({11, 4, 31});
  CHECK(i2.d_prime == 4);
  CHECK(i2.pair_small == 3);
  CHECK(i2.pair_large == 4);

  const CremonaImage i1 = cremona_image({8, 3, 22});
  CHECK(i1.d_prime == 1);
  CHECK(i1.image_smooth_germ);  // b - 7a = 1
  CHECK(i1.x == 0);

  const CremonaImage i6 = cremona_image({20, 7, 58});
  CHECK(i6.x == 4);
  CHECK(i6.delta_second() == (7 * 16 - 28) / 2);
  CHECK(i6.mu_second(2) == 7 * 16 - 28 - 2 + 1);

  CHECK_THROWS_AS(cremona_image({10, 4, 25}), std::invalid_argument);  // cbar2 = 0
  CHECK_THROWS_AS(cremona_image({9, 3, 29}), std::invalid_argument);   // d >= 3a
}

TEST_CASE("cremona reduction outcomes") {
  const CremonaReduction r5 = cremona_reduce_and_test({19, 7, 52});
  CHECK(r5.outcome == CremonaOutcome::EliminatedViaImage);
  REQUIRE(r5.image.has_value());
  CHECK(*r5.image == Triple{5, 3, 7});
  REQUIRE(r5.image_verdict.has_value());
  CHECK(r5.image_verdict->filter == FilterId::DualCurve);

  const CremonaReduction r2 = cremona_reduce_and_test({11, 4, 31});
  CHECK(r2.outcome == CremonaOutcome::ImageRealizable);
  CHECK(*r2.image == Triple{4, 3, 4});

  CHECK(cremona_reduce_and_test({8, 3, 22}).outcome ==
        CremonaOutcome::DegenerateImage);
  CHECK(cremona_reduce_and_test({20, 7, 58}).outcome ==
        CremonaOutcome::MultibranchImage);
}

TEST_CASE("image degree identity across the enumeration") {
  for (long long d = 3; d <= 120; ++d) {
    for (const Triple& t : enumerate_candidates(d)) {
      const DerivedInvariants inv = derive(t);
      if (inv.cbar2 > -2 || t.d >= 3 * t.a) continue;
      const CremonaImage img = cremona_image(t);
      CHECK(3 * img.d_prime == 8 * img.x + t.a);
    }
  }
}

TEST_SUITE_END();
