#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "candidates.hpp"
#include "exactmath.hpp"

namespace ucp {

enum class FilterId {
  TrivialBound,      // b >= d; b = d only as (d-1, d)
  DualCurve,         // b > d implies d >= 2a
  MatsuokaSakai,     // d < 3a
  OrevkovA,          // kappa = -inf: d < alpha a
  OrevkovB,          // kappa = 2:    d < alpha (a+1) - beta
  OrevkovC,          // kappa = 2:    -cbar2 <= -2 + a/b + b/a
  ExcessNonneg,      // kappa = 2:    3d >= 8a
  Kappa2Range,       // kappa = 2:    -cbar2 >= 2 (tautological given the dichotomy)
  BAlphaBound,       // kappa = 2:    b < alpha (d-1)(d-2) / (d - 2 alpha + beta) + 1
  StrictBounds,      // search domain a < d < b
  SsDMinus1,
  SsDMinus2,
  SsDMinus3,
  SsDMinus4,
  Ss4,
  SpectrumFull,      // semicontinuity over every interval (l/d, l/d + 1)
  SemigroupDensity,  // #(Gamma ∩ [0, ld]) >= (l+1)(l+2)/2 for 0 <= l < d
  CremonaReduction,  // nodal-cubic Cremona image already excluded
  RecordedFact,      // hardcoded exceptions with their citation
};

const char* filter_name(FilterId id);      // stable kebab-case name
const char* filter_citation(FilterId id);  // which classical result it applies
std::optional<FilterId> filter_from_name(std::string_view name);

using Witness = std::vector<std::pair<std::string, std::string>>;
std::string witness_str(const Witness& w);

struct FilterVerdict {
  FilterId id;
  bool applicable = true;
  bool passed = true;  // vacuously true when not applicable
  std::string citation;
  Witness witness;  // populated whenever passed is false
};

// One interval count for the spectrum comparison.
struct SpectrumCount {
  Rational interval_low;   // left endpoint of the open unit interval
  BigInt count_candidate;  // spectral numbers of the (a, b) cusp inside
  BigInt count_reference;  // spectral numbers of x^d + y^d inside (multiset)
};

// Individual obstructions. These evaluate on any triple with positive
// entries (unit tests feed synthetic data); only run_pipeline requires
// genus validity.
FilterVerdict trivial_bound(const Triple& t);
FilterVerdict dual_curve_bound(const Triple& t);
FilterVerdict matsuoka_sakai(const Triple& t);
FilterVerdict orevkov_a(const Triple& t, const DerivedInvariants& inv);
FilterVerdict orevkov_b(const Triple& t, const DerivedInvariants& inv);
FilterVerdict orevkov_c(const Triple& t, const DerivedInvariants& inv);

// Raw inequality kernels (exact, via Surd signs).
bool d_at_least_alpha_a(const BigInt& d, const BigInt& a);
bool d_at_least_alpha_a1_minus_beta(const BigInt& d, const BigInt& a);

// #\{ i/a + j/b < l/d : i, j >= 1 \} <= (l-2)(l-1)/2, for 2 <= l <= d.
std::pair<SpectrumCount, FilterVerdict> ss_l_bruteforce(const Triple& t,
                                                        const BigInt& l);

// Closed forms of the same inequalities at l = d-1, d-2, d-3, d-4 and 4,
// in exact floor/ceiling arithmetic:
//   d-1: floor(b/d) + ceil(cbar2/d) <= 2
//   d-2: floor(2b/d) + ceil(2 cbar2/d) <= 5
//   d-3: floor(3b/d) + floor(3b/d - b/a) + ceil(3 cbar2/d) <= 8
//   d-4: floor(4b/d) + floor(4b/d - b/a) + ceil(4 cbar2/d) <= 13   (needs 3d >= 8a)
//   4:   min(3a, b) * d >= d(d+1) + (d-4) cbar2                    (needs b > d)
enum class SsForm { DMinus1, DMinus2, DMinus3, DMinus4, L4 };
FilterVerdict ss_closed_form(const Triple& t, SsForm form);

// Spectrum semicontinuity over every interval (l/d, l/d + 1), -d < l < d,
// candidate spectrum {i/a + j/b} (a set) against the degree-d reference
// multiset {(i+j)/d}. Fails at the first interval where the candidate
// count exceeds the reference count.
FilterVerdict spectrum_semicontinuity_full(const Triple& t);

// Per-interval counts, exposed for tests.
SpectrumCount spectrum_interval_count(const Triple& t, const BigInt& l);

FilterVerdict semigroup_density(const Triple& t);

// cbar2 > 0 forces (a, b) = (d-1, d) or (d/2, 2d-1). Throws unless
// genus-valid with cbar2 > 0.
bool cbar2_positive_forms(const Triple& t);

// Pipeline -----------------------------------------------------------------

enum class VerdictKind {
  RealizableKnown,
  Eliminated,
  EliminatedByRecordedFact,
  SurvivorUnknown,
  NotGenusValid,
};

const char* verdict_name(VerdictKind k);

struct ClassificationVerdict {
  VerdictKind kind = VerdictKind::SurvivorUnknown;
  std::optional<FamilyTag> family;
  std::optional<FilterId> filter;  // first failing filter, when eliminated
  std::string citation;
  Witness witness;
};

struct FilterSet {
  std::string name;
  std::vector<FilterId> order;

  // The closed-form preset: the bounded computer search over the
  // kappa = 2 range, using only integer bounds and the closed-form
  // spectrum inequalities.
  static FilterSet closed_forms();
  // Everything: adds the full spectrum scan, semigroup density, the
  // Cremona reduction and the recorded-fact table.
  static FilterSet full();
  // The set used on Cremona images (no reduction recursion, no recorded
  // facts: images must be excluded by computation alone).
  static FilterSet image_check();
  static FilterSet custom(std::vector<FilterId> order);
};

// Evaluates one filter with its applicability guards (kappa class and
// closed-form preconditions); never throws on guarded inputs.
FilterVerdict evaluate_filter(FilterId id, const Triple& t,
                              const DerivedInvariants& inv);

// Applies the filters in the set's order and reports the first failure.
// Requires genus validity. When family_shortcircuit is set, a catalog
// member is reported RealizableKnown without running any filter.
ClassificationVerdict run_pipeline(const Triple& t, const FilterSet& filters,
                                   bool family_shortcircuit = true);

// Every filter verdict of the full set, in order (for classify traces).
std::vector<FilterVerdict> full_trace(const Triple& t);

}  // namespace ucp
