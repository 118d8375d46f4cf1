#include "search.hpp"

#include <algorithm>
#include <thread>

#include "diophantine.hpp"
#include "pell.hpp"
#include "polyalg.hpp"

namespace ucp {

namespace {

const std::vector<std::string> kClassificationColumns = {
    "d", "a", "b", "cbar2", "x", "verdict", "eliminating_filter", "citation",
    "witness"};

std::vector<Cell> classification_row(const Triple& t,
                                     const ClassificationVerdict& v) {
  const DerivedInvariants inv = derive_unchecked(t);
  std::string filter = v.filter ? filter_name(*v.filter) : "";
  return {num_cell(t.d),          num_cell(t.a),
          num_cell(t.b),          num_cell(inv.cbar2),
          num_cell(inv.x),        text_cell(verdict_name(v.kind)),
          text_cell(std::move(filter)), text_cell(v.citation),
          text_cell(witness_str(v.witness))};
}

}  // namespace

FilterSet parse_filterset(const std::string& spec) {
  if (spec.empty() || spec == "full") return FilterSet::full();
  if (spec == "closed-forms") return FilterSet::closed_forms();
  std::vector<FilterId> ids;
  size_t pos = 0;
  while (pos <= spec.size()) {
    const size_t comma = spec.find(',', pos);
    const std::string name =
        spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!name.empty()) {
      const auto id = filter_from_name(name);
      if (!id) throw std::invalid_argument("unknown filter '" + name + "'");
      ids.push_back(*id);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (ids.empty()) throw std::invalid_argument("empty filter list");
  return FilterSet::custom(std::move(ids));
}

void parse_cbar2_range(const std::string& spec, std::optional<BigInt>* lo,
                       std::optional<BigInt>* hi) {
  lo->reset();
  hi->reset();
  if (spec.empty()) return;
  const size_t dots = spec.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("cbar2 range must look like 'min..max'");
  const std::string l = spec.substr(0, dots);
  const std::string h = spec.substr(dots + 2);
  try {
    if (!l.empty()) *lo = BigInt(l);
    if (!h.empty()) *hi = BigInt(h);
  } catch (const std::exception&) {
    throw std::invalid_argument("cbar2 range bounds must be integers");
  }
}

Report cmd_search(const SearchOptions& opts) {
  if (opts.dmax < 3) throw std::invalid_argument("search: dmax must be >= 3");
  if (opts.jobs < 1) throw std::invalid_argument("search: jobs must be >= 1");

  const long long dmax = opts.dmax.convert_to<long long>();
  const long long count = dmax - 2;
  std::vector<std::vector<std::vector<Cell>>> per_degree(count);

  const auto worker = [&](long long start) {
    for (long long i = start; i < count; i += opts.jobs) {
      const BigInt d = 3 + i;
      for (const Triple& t : enumerate_candidates(d)) {
        const DerivedInvariants inv = derive(t);
        if (opts.cbar2_min && inv.cbar2 < *opts.cbar2_min) continue;
        if (opts.cbar2_max && inv.cbar2 > *opts.cbar2_max) continue;
        per_degree[i].push_back(
            classification_row(t, run_pipeline(t, opts.filters)));
      }
    }
  };

  if (opts.jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < opts.jobs; ++j) pool.emplace_back(worker, j);
    for (auto& th : pool) th.join();
  }

  Report rep;
  rep.meta = {{"command", "search"},
              {"dmax", opts.dmax.str()},
              {"filters", opts.filters.name},
              {"cbar2_min", opts.cbar2_min ? opts.cbar2_min->str() : ""},
              {"cbar2_max", opts.cbar2_max ? opts.cbar2_max->str() : ""},
              {"version", kVersion}};
  rep.columns = kClassificationColumns;
  for (auto& rows : per_degree)
    for (auto& row : rows) rep.rows.push_back(std::move(row));
  return rep;
}

Report cmd_classify(const Triple& t) {
  Report rep;
  rep.meta = {{"command", "classify"},
              {"triple", t.str()},
              {"version", kVersion}};
  rep.columns = kClassificationColumns;
  if (!genus_valid(t)) {
    ClassificationVerdict v;
    v.kind = VerdictKind::NotGenusValid;
    v.citation = "genus formula (a-1)(b-1) = (d-1)(d-2) with 1 < a < b, gcd(a,b) = 1";
    rep.rows.push_back(classification_row(t, v));
    return rep;
  }
  rep.rows.push_back(classification_row(t, run_pipeline(t, FilterSet::full())));
  rep.trace_columns = {"filter", "applicable", "passed", "citation", "witness"};
  for (const FilterVerdict& v : full_trace(t)) {
    rep.trace_rows.push_back({text_cell(filter_name(v.id)),
                              bool_cell(v.applicable), bool_cell(v.passed),
                              text_cell(v.citation),
                              text_cell(witness_str(v.witness))});
  }
  return rep;
}

Report cmd_families(const std::vector<FamilyKind>& kinds, const BigInt& dmax) {
  if (dmax < 3) throw std::invalid_argument("families: dmax must be >= 3");
  Report rep;
  std::string names;
  std::vector<Triple> all;
  std::vector<std::pair<Triple, FamilyTag>> tagged;
  for (FamilyKind k : kinds) {
    names += names.empty() ? "" : ",";
    names += family_letter(k);
    for (const Triple& t : family_generate(k, dmax)) {
      BigInt param = k == FamilyKind::C || k == FamilyKind::D
                         ? family_match(t)->param
                         : t.d;
      tagged.emplace_back(t, FamilyTag{k, param});
    }
  }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  rep.meta = {{"command", "families"},
              {"kinds", names},
              {"dmax", dmax.str()},
              {"version", kVersion}};
  rep.columns = {"d", "a", "b", "cbar2", "x", "family", "param"};
  for (const auto& [t, tag] : tagged) {
    const DerivedInvariants inv = derive(t);
    rep.rows.push_back({num_cell(t.d), num_cell(t.a), num_cell(t.b),
                        num_cell(inv.cbar2), num_cell(inv.x),
                        text_cell(std::string(1, family_letter(tag.kind))),
                        num_cell(tag.param)});
  }
  return rep;
}

Report cmd_pell(const BigInt& ymax) {
  Report rep;
  rep.meta = {{"command", "pell"}, {"ymax", ymax.str()}, {"version", kVersion}};
  rep.columns = {"x", "y", "fib_index", "family", "j", "note"};
  for (const PellSolution& s : pell_enumerate(ymax)) {
    const FamilyDecomposition dec = decompose(s);
    std::string fam = dec.family == PellFamily::None
                          ? "none"
                          : std::string(1, "abcd"[static_cast<int>(dec.family)]);
    rep.rows.push_back({num_cell(s.x), num_cell(s.y), num_cell(dec.fib_index),
                        text_cell(std::move(fam)),
                        dec.family == PellFamily::None ? text_cell("")
                                                       : num_cell(dec.j),
                        text_cell(dec.note)});
  }
  return rep;
}

Report cmd_diophantine(const BigInt& x) {
  const ExcessCase c = solve_excess_case(x);
  Report rep;
  rep.meta = {{"command", "diophantine"}, {"x", x.str()}, {"version", kVersion}};
  std::string notes;
  for (const std::string& n : c.k_notes) {
    if (!notes.empty()) notes += "; ";
    notes += n;
  }
  if (!notes.empty()) rep.meta.emplace_back("k_notes", notes);
  rep.columns = {"a", "k", "status", "coprime", "d", "b", "cbar2", "note"};
  for (const ExcessEntry& e : c.entries) {
    const bool has_triple = e.status == ExcessEntry::Status::Solution;
    rep.rows.push_back({num_cell(e.a), num_cell(e.k),
                        text_cell(excess_status_name(e.status)),
                        has_triple ? bool_cell(e.coprime) : text_cell(""),
                        has_triple ? num_cell(e.d) : text_cell(""),
                        has_triple ? num_cell(e.b) : text_cell(""),
                        has_triple ? num_cell(-e.k) : text_cell(""),
                        text_cell(e.note)});
  }
  return rep;
}

Report cmd_construct(int smax, bool emit_polys) {
  if (smax < 1) throw std::invalid_argument("construct: smax must be >= 1");
  const std::vector<KashiwaraPair> seq = kashiwara_sequence(smax);
  Report rep;
  rep.meta = {{"command", "construct"},
              {"smax", std::to_string(smax)},
              {"version", kVersion}};
  rep.columns = {"s", "degree", "q_degree", "exponent_default", "exponent_used",
                 "default_exact"};
  if (emit_polys) {
    rep.columns.push_back("p");
    rep.columns.push_back("q");
  }
  for (const KashiwaraPair& kp : seq) {
    std::vector<Cell> row = {num_cell(static_cast<long long>(kp.s)),
                             num_cell(kp.degree),
                             num_cell(kp.q.total_degree())};
    if (kp.s >= 1) {
      row.push_back(num_cell(kp.exponent_default));
      row.push_back(num_cell(kp.exponent_used));
      row.push_back(bool_cell(kp.default_exact));
    } else {
      row.push_back(text_cell(""));
      row.push_back(text_cell(""));
      row.push_back(text_cell(""));
    }
    if (emit_polys) {
      row.push_back(text_cell(kp.p.str()));
      row.push_back(text_cell(kp.q.str()));
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace ucp
