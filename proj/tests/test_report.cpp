#include <doctest.h>

#include <json.hpp>

#include "report.hpp"
#include "search.hpp"

using namespace ucp;

TEST_SUITE_BEGIN("report");

TEST_CASE("rendering is deterministic") {
  SearchOptions opts;
  opts.dmax = 25;
  const Report r1 = cmd_search(opts);
  const Report r2 = cmd_search(opts);
  for (const std::string fmt : {"table", "json", "csv"})
    CHECK(r1.render(fmt) == r2.render(fmt));
  CHECK_THROWS_AS(r1.render("yaml"), std::invalid_argument);
}

TEST_CASE("parallel sharding is unobservable") {
  SearchOptions serial;
  serial.dmax = 40;
  SearchOptions parallel = serial;
  parallel.jobs = 4;
  CHECK(cmd_search(serial).render("json") == cmd_search(parallel).render("json"));
}

TEST_CASE("json schema") {
  SearchOptions opts;
  opts.dmax = 10;
  opts.cbar2_max = BigInt(-2);
  const auto j = nlohmann::json::parse(cmd_search(opts).render("json"));
  REQUIRE(j.contains("meta"));
  REQUIRE(j.contains("rows"));
  CHECK(j["meta"]["dmax"] == "10");
  REQUIRE(j["rows"].is_array());
  REQUIRE_FALSE(j["rows"].empty());
  const auto& row = j["rows"][0];
  for (const char* key : {"d", "a", "b", "cbar2", "x", "verdict",
                          "eliminating_filter", "citation", "witness"})
    CHECK(row.contains(key));
  CHECK(row["d"].is_number_integer());
  CHECK(row["verdict"].is_string());
}

TEST_CASE("csv quoting") {
  Report r;
  r.columns = {"a", "b"};
  r.rows.push_back({text_cell("plain"), text_cell("needs,\"quoting\"")});
  CHECK(r.render("csv") ==
        "a,b\r\nplain,\"needs,\"\"quoting\"\"\"\r\n");
}

TEST_CASE("search rows are sorted by degree then exponent") {
  SearchOptions opts;
  opts.dmax = 30;
  const Report rep = cmd_search(opts);
  for (size_t i = 1; i < rep.rows.size(); ++i) {
    const BigInt d0(rep.rows[i - 1][0].text), a0(rep.rows[i - 1][1].text);
    const BigInt d1(rep.rows[i][0].text), a1(rep.rows[i][1].text);
    CHECK((d0 < d1 || (d0 == d1 && a0 < a1)));
  }
}

TEST_CASE("classify emits a trace") {
  const Report rep = cmd_classify({17, 6, 49});
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0][5].text == "ELIMINATED");
  CHECK(rep.rows[0][6].text == "spectrum-full");
  CHECK(rep.trace_rows.size() == FilterSet::full().order.size());

  const Report bad = cmd_classify({7, 5, 6});
  CHECK(bad.rows[0][5].text == "NOT_GENUS_VALID");
  CHECK(bad.trace_rows.empty());
}

TEST_CASE("filterset and range parsing") {
  CHECK(parse_filterset("full").name == "full");
  CHECK(parse_filterset("").name == "full");
  CHECK(parse_filterset("closed-forms").order == FilterSet::closed_forms().order);
  const FilterSet fs = parse_filterset("trivial-bound,dual-curve");
  REQUIRE(fs.order.size() == 2);
  CHECK(fs.order[1] == FilterId::DualCurve);
  CHECK_THROWS_AS(parse_filterset("bogus"), std::invalid_argument);

  std::optional<BigInt> lo, hi;
  parse_cbar2_range("..-2", &lo, &hi);
  CHECK_FALSE(lo.has_value());
  CHECK(hi == BigInt(-2));
  parse_cbar2_range("-5..-2", &lo, &hi);
  CHECK(lo == BigInt(-5));
  parse_cbar2_range("", &lo, &hi);
  CHECK_FALSE(hi.has_value());
  CHECK_THROWS_AS(parse_cbar2_range("57", &lo, &hi), std::invalid_argument);
  CHECK_THROWS_AS(parse_cbar2_range("x..y", &lo, &hi), std::invalid_argument);
}

TEST_SUITE_END();
