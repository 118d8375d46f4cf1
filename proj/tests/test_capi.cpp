#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "unicusp.h"

namespace {

std::string render(ucp_report* rep, const char* fmt) {
  char* text = nullptr;
  REQUIRE(ucp_report_render(rep, fmt, &text) == UCP_OK);
  std::string out = text;
  ucp_string_free(text);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("capi");

TEST_CASE("version") {
  CHECK(std::strlen(ucp_version()) > 0);
}

TEST_CASE("search through the shared library") {
  ucp_report* rep = nullptr;
  REQUIRE(ucp_search(117, "closed-forms", "..-2", 2, &rep) == UCP_OK);
  const std::string json = render(rep, "json");
  const auto j = nlohmann::json::parse(json);
  int survivors = 0;
  for (const auto& row : j["rows"])
    if (row["verdict"] != "ELIMINATED") ++survivors;
  CHECK(survivors == 6);

  ucp_report* rep2 = nullptr;
  REQUIRE(ucp_search(117, "closed-forms", "..-2", 1, &rep2) == UCP_OK);
  CHECK(render(rep2, "json") == json);  // byte identical across job counts
  ucp_report_free(rep);
  ucp_report_free(rep2);
}

TEST_CASE("classify verdicts") {
  ucp_report* rep = nullptr;
  REQUIRE(ucp_classify(5, 3, 7, &rep) == UCP_OK);
  CHECK(render(rep, "csv").find("ELIMINATED") != std::string::npos);
  ucp_report_free(rep);

  REQUIRE(ucp_classify(7, 5, 6, &rep) == UCP_OK);
  CHECK(render(rep, "csv").find("NOT_GENUS_VALID") != std::string::npos);
  ucp_report_free(rep);
}

TEST_CASE("usage errors set messages") {
  ucp_report* rep = nullptr;
  CHECK(ucp_search(2, "full", "", 1, &rep) == UCP_EUSAGE);
  CHECK(std::strlen(ucp_last_error()) > 0);
  CHECK(ucp_search(20, "no-such-filter", "", 1, &rep) == UCP_EUSAGE);
  CHECK(ucp_search(20, "full", "oops", 1, &rep) == UCP_EUSAGE);
  CHECK(ucp_search(20, "full", "", 0, &rep) == UCP_EUSAGE);
  CHECK(ucp_diophantine(9, &rep) == UCP_EUSAGE);
  CHECK(ucp_construct(0, 0, &rep) == UCP_EUSAGE);
  CHECK(ucp_families("q", 20, &rep) == UCP_EUSAGE);
  CHECK(ucp_search(20, "full", "", 1, nullptr) == UCP_EUSAGE);

  REQUIRE(ucp_search(20, "full", "", 1, &rep) == UCP_OK);
  char* text = nullptr;
  CHECK(ucp_report_render(rep, "yaml", &text) == UCP_EUSAGE);
  ucp_report_free(rep);
}

TEST_CASE("other commands round-trip") {
  ucp_report* rep = nullptr;
  REQUIRE(ucp_families("d", 34, &rep) == UCP_OK);
  const auto fam = nlohmann::json::parse(render(rep, "json"));
  CHECK(fam["rows"].size() == 3);
  ucp_report_free(rep);

  REQUIRE(ucp_pell(13, &rep) == UCP_OK);
  const auto pell = nlohmann::json::parse(render(rep, "json"));
  CHECK(pell["rows"].size() == 4);
  CHECK(pell["rows"][1]["family"] == "none");
  ucp_report_free(rep);

  REQUIRE(ucp_diophantine(0, &rep) == UCP_OK);
  const auto dio = nlohmann::json::parse(render(rep, "json"));
  CHECK(dio["rows"].size() == 2);
  CHECK(dio["rows"][0]["a"] == 3);
  CHECK(dio["rows"][1]["a"] == 6);
  ucp_report_free(rep);

  REQUIRE(ucp_construct(1, 1, &rep) == UCP_OK);
  const auto con = nlohmann::json::parse(render(rep, "json"));
  CHECK(con["rows"].size() == 3);
  CHECK(con["rows"][2]["degree"] == 13);
  CHECK(con["rows"][2]["exponent_used"] == 5);
  ucp_report_free(rep);
}

TEST_CASE("verification entry point") {
  char* text = nullptr;
  CHECK(ucp_verify("bounded-search-survivors", &text) == UCP_OK);
  CHECK(std::string(text).find("PASS") != std::string::npos);
  ucp_string_free(text);
  CHECK(ucp_verify("no-such-suite", &text) == UCP_EUSAGE);
  CHECK(ucp_verify(nullptr, &text) == UCP_EUSAGE);
}

TEST_SUITE_END();
