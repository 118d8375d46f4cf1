#pragma once

#include <optional>
#include <string>
#include <vector>

#include "candidates.hpp"
#include "obstructions.hpp"
#include "report.hpp"

namespace ucp {

inline constexpr const char* kVersion = "0.1.0";

struct SearchOptions {
  BigInt dmax;
  FilterSet filters = FilterSet::full();
  std::optional<BigInt> cbar2_min;
  std::optional<BigInt> cbar2_max;
  int jobs = 1;
};

// Enumerates every genus-valid triple with 3 <= d <= dmax (restricted to
// the cbar2 range when one is given), classifies each through the filter
// set and reports one row per triple, sorted by (d, a). Parallel sharding
// by d is unobservable in the output.
Report cmd_search(const SearchOptions& opts);

// Single-triple report with a per-filter trace of the full set.
Report cmd_classify(const Triple& t);

Report cmd_families(const std::vector<FamilyKind>& kinds, const BigInt& dmax);
Report cmd_pell(const BigInt& ymax);
Report cmd_diophantine(const BigInt& x);
Report cmd_construct(int smax, bool emit_polys);

// Parses "closed-forms", "full" or a comma-separated list of filter
// names; throws std::invalid_argument on unknown names.
FilterSet parse_filterset(const std::string& spec);

// Parses "min..max" with either side optional ("..-2", "-5..", "-5..-2").
void parse_cbar2_range(const std::string& spec, std::optional<BigInt>* lo,
                       std::optional<BigInt>* hi);

}  // namespace ucp
