#include <doctest.h>

#include <algorithm>
#include <set>

#include "obstructions.hpp"
#include "pell.hpp"

using namespace ucp;

TEST_SUITE_BEGIN("obstructions");

TEST_CASE("trivial bound") {
  CHECK(trivial_bound({8, 3, 22}).passed);
  CHECK(trivial_bound({5, 4, 5}).passed);       // b = d as (d-1, d)
  CHECK_FALSE(trivial_bound({7, 5, 6}).passed); // b < d, synthetic input
  CHECK_FALSE(trivial_bound({7, 5, 7}).passed); // b = d but a != d-1
  CHECK_FALSE(trivial_bound({7, 5, 6}).witness.empty());
}

TEST_CASE("dual curve bound") {
  CHECK_FALSE(dual_curve_bound({5, 3, 7}).passed);  // 5 < 6
  CHECK(dual_curve_bound({8, 3, 22}).passed);
  CHECK(dual_curve_bound({5, 4, 5}).passed);  // b = d, vacuous
}

TEST_CASE("matsuoka-sakai") {
  CHECK_FALSE(matsuoka_sakai({9, 3, 29}).passed);
  CHECK(matsuoka_sakai({17, 6, 49}).passed);
  CHECK(matsuoka_sakai({3, 2, 3}).passed);
}

TEST_CASE("orevkov bounds via exact surd signs") {
  // kappa = -infinity branch
  const Triple c{10, 4, 25};
  CHECK(orevkov_a(c, derive(c)).passed);  // 64 < 80
  const Triple f{5, 4, 5};
  CHECK(orevkov_a(f, derive(f)).passed);  // 2d - 3a < 0
  const Triple e{8, 3, 22};
  const FilterVerdict va = orevkov_a(e, derive(e));
  CHECK(va.passed);
  CHECK_FALSE(va.applicable);  // kappa = 2

  // raw inequality kernels
  CHECK_FALSE(d_at_least_alpha_a(10, 4));
  CHECK(d_at_least_alpha_a(9, 3));  // 9 >= 3 alpha since (18-9)^2 = 81 > 45

  // kappa = 2 branch
  const Triple c4{17, 6, 49};
  CHECK(orevkov_b(c4, derive(c4)).passed);  // 65^2 < 5*33^2
  CHECK(d_at_least_alpha_a1_minus_beta(20, 6));  // 95^2 > 5*33^2
  const FilterVerdict vb = orevkov_b(c, derive(c));
  CHECK(vb.passed);
  CHECK_FALSE(vb.applicable);

  const Triple x2{78, 29, 210};
  CHECK_FALSE(orevkov_c(x2, derive(x2)).passed);  // 181^2 < 6*29*210
  const Triple x3{57, 21, 155};
  CHECK_FALSE(orevkov_c(x3, derive(x3)).passed);
  CHECK(orevkov_c(c4, derive(c4)).passed);  // 43^2 >= 5*294
}

TEST_CASE("spectrum counts below l/d") {
  auto [sc1, v1] = ss_l_bruteforce({17, 6, 49}, 16);
  CHECK(sc1.count_candidate == 105);
  CHECK(sc1.count_reference == 105);
  CHECK(v1.passed);  // tight

  auto [sc2, v2] = ss_l_bruteforce({8, 3, 22}, 7);
  CHECK(sc2.count_candidate == 15);
  CHECK(v2.passed);

  CHECK(ss_l_bruteforce({8, 3, 22}, 2).second.passed);
  CHECK(ss_l_bruteforce({117, 116, 117}, 2).second.passed);
  CHECK_THROWS_AS(ss_l_bruteforce({8, 3, 22}, 1), std::invalid_argument);
  CHECK_THROWS_AS(ss_l_bruteforce({8, 3, 22}, 9), std::invalid_argument);
}

TEST_CASE("closed forms") {
  CHECK(ss_closed_form({8, 3, 22}, SsForm::DMinus1).passed);  // 2 + 0 <= 2
  CHECK_FALSE(ss_closed_form({22, 8, 61}, SsForm::DMinus4).passed);
  CHECK_FALSE(ss_closed_form({28, 10, 79}, SsForm::DMinus4).passed);
  CHECK_FALSE(ss_closed_form({25, 9, 70}, SsForm::DMinus4).passed);
  CHECK(ss_closed_form({20, 7, 58}, SsForm::DMinus4).passed);  // tight at 13
  CHECK(ss_closed_form({17, 6, 49}, SsForm::L4).passed);

  // preconditions are errors, not verdicts
  CHECK_THROWS_AS(ss_closed_form({5, 4, 5}, SsForm::DMinus4),
                  std::invalid_argument);  // 3d < 8a
  CHECK_THROWS_AS(ss_closed_form({5, 4, 5}, SsForm::L4),
                  std::invalid_argument);  // b = d
  CHECK_THROWS_AS(ss_closed_form({4, 2, 7}, SsForm::DMinus3),
                  std::invalid_argument);  // l = 1 out of range
}

TEST_CASE("full spectrum semicontinuity") {
  const FilterVerdict bad = spectrum_semicontinuity_full({17, 6, 49});
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.witness.empty());
  CHECK_FALSE(spectrum_semicontinuity_full({20, 7, 58}).passed);
  CHECK(spectrum_semicontinuity_full({11, 4, 31}).passed);
  CHECK(spectrum_semicontinuity_full({19, 7, 52}).passed);
  CHECK(spectrum_semicontinuity_full({8, 3, 22}).passed);
}

TEST_CASE("interval counts agree with the strict-count form at l - d") {
  for (const Triple& t : {Triple{8, 3, 22}, Triple{17, 6, 49}}) {
    for (BigInt l = 2; l <= t.d; ++l) {
      const auto [sc, v] = ss_l_bruteforce(t, l);
      const SpectrumCount ic = spectrum_interval_count(t, l - t.d);
      CHECK(ic.count_candidate == sc.count_candidate);
    }
  }
}

TEST_CASE("candidate spectrum values are pairwise distinct") {
  for (const Triple& t : {Triple{8, 3, 22}, Triple{17, 6, 49}, Triple{20, 7, 58}}) {
    std::set<BigInt> values;  // i/a + j/b over the common denominator ab
    for (BigInt i = 1; i < t.a; ++i)
      for (BigInt j = 1; j < t.b; ++j) values.insert(i * t.b + j * t.a);
    CHECK(BigInt(values.size()) == (t.a - 1) * (t.b - 1));
  }
}

TEST_CASE("semigroup density filter") {
  const FilterVerdict ok = semigroup_density({8, 3, 22});
  CHECK(ok.passed);
  CHECK(Semigroup(3, 22).count_upto(24) == 10);  // the l = 3 bound is tight

  const FilterVerdict bad = semigroup_density({10, 9, 11});
  CHECK_FALSE(bad.passed);
  REQUIRE_FALSE(bad.witness.empty());
  CHECK(bad.witness[0].second == "1");  // fails at l = 1: #{0, 9} = 2 < 3
  CHECK(bad.witness[1].second == "2");

  // (19,7,52) fails density at l = 8: 44 elements below 152, 45 required.
  const FilterVerdict c5 = semigroup_density({19, 7, 52});
  CHECK_FALSE(c5.passed);
  CHECK(c5.witness[0].second == "8");
}

TEST_CASE("cbar2 positive forms") {
  CHECK(cbar2_positive_forms({4, 3, 4}));
  CHECK(cbar2_positive_forms({6, 3, 11}));
  CHECK_FALSE(cbar2_positive_forms({7, 3, 16}));  // cbar2 = 1, neither form
  CHECK_THROWS_AS(cbar2_positive_forms({8, 3, 22}), std::invalid_argument);
  CHECK_THROWS_AS(cbar2_positive_forms({14, 5, 40}), std::invalid_argument);
}

TEST_CASE("pipeline verdicts") {
  const ClassificationVerdict v1 = run_pipeline({5, 3, 7}, FilterSet::full());
  CHECK(v1.kind == VerdictKind::Eliminated);
  CHECK(v1.filter == FilterId::DualCurve);

  const ClassificationVerdict v2 = run_pipeline({16, 6, 43}, FilterSet::full());
  CHECK(v2.kind == VerdictKind::RealizableKnown);
  REQUIRE(v2.family.has_value());
  CHECK(v2.family->kind == FamilyKind::F);

  const ClassificationVerdict v3 = run_pipeline({19, 7, 52}, FilterSet::full());
  CHECK(v3.kind == VerdictKind::Eliminated);
  CHECK(v3.filter == FilterId::CremonaReduction);
  CHECK(witness_str(v3.witness).find("(5,3,7)") != std::string::npos);

  const ClassificationVerdict v4 = run_pipeline({11, 4, 31}, FilterSet::full());
  CHECK(v4.kind == VerdictKind::EliminatedByRecordedFact);
  CHECK_FALSE(v4.citation.empty());

  const ClassificationVerdict v5 = run_pipeline({17, 6, 49}, FilterSet::full());
  CHECK(v5.kind == VerdictKind::Eliminated);
  CHECK(v5.filter == FilterId::SpectrumFull);

  CHECK_THROWS_AS(run_pipeline({7, 3, 19}, FilterSet::full()),
                  std::invalid_argument);
}

TEST_CASE("catalog members pass every filter") {
  for (FamilyKind k : {FamilyKind::A, FamilyKind::B, FamilyKind::C,
                       FamilyKind::D, FamilyKind::E, FamilyKind::F}) {
    for (const Triple& t : family_generate(k, 60)) {
      for (const FilterVerdict& v : full_trace(t)) {
        CAPTURE(t.str());
        CAPTURE(filter_name(v.id));
        CHECK(v.passed);
      }
    }
  }
}

TEST_CASE("closed-form preset survivors are order independent") {
  const FilterSet base = FilterSet::closed_forms();
  FilterSet reversed = base;
  std::reverse(reversed.order.begin(), reversed.order.end());
  FilterSet rotated = base;
  std::rotate(rotated.order.begin(), rotated.order.begin() + 5,
              rotated.order.end());
  const auto survivors = [](const FilterSet& fs) {
    std::set<Triple> out;
    for (long long d = 3; d <= 60; ++d)
      for (const Triple& t : enumerate_candidates(d)) {
        const ClassificationVerdict v = run_pipeline(t, fs);
        if (v.kind != VerdictKind::Eliminated &&
            v.kind != VerdictKind::EliminatedByRecordedFact)
          out.insert(t);
      }
    return out;
  };
  const auto s0 = survivors(base);
  CHECK(s0 == survivors(reversed));
  CHECK(s0 == survivors(rotated));
}

TEST_CASE("filter names round-trip") {
  for (FilterId id : FilterSet::full().order) {
    const auto back = filter_from_name(filter_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK_FALSE(filter_from_name("no-such-filter").has_value());
}

TEST_SUITE_END();
