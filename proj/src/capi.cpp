#include "unicusp.h"

#include <cstring>
#include <string>

#include "report.hpp"
#include "search.hpp"
#include "verify.hpp"

struct ucp_report {
  ucp::Report rep;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return UCP_EUSAGE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return UCP_EINTERNAL;
  }
}

int make_report(ucp_report** out, ucp::Report rep) {
  if (!out) {
    g_last_error = "null output handle";
    return UCP_EUSAGE;
  }
  *out = new ucp_report{std::move(rep)};
  return UCP_OK;
}

}  // namespace

extern "C" {

const char* ucp_version(void) { return ucp::kVersion; }

const char* ucp_last_error(void) { return g_last_error.c_str(); }

int ucp_search(long long dmax, const char* filters, const char* cbar2,
               int jobs, ucp_report** out) {
  return guarded([&] {
    ucp::SearchOptions opts;
    opts.dmax = dmax;
    opts.filters = ucp::parse_filterset(filters ? filters : "");
    ucp::parse_cbar2_range(cbar2 ? cbar2 : "", &opts.cbar2_min, &opts.cbar2_max);
    opts.jobs = jobs;
    return make_report(out, ucp::cmd_search(opts));
  });
}

int ucp_classify(long long d, long long a, long long b, ucp_report** out) {
  return guarded([&] {
    return make_report(out, ucp::cmd_classify({ucp::BigInt(d), ucp::BigInt(a),
                                               ucp::BigInt(b)}));
  });
}

int ucp_families(const char* kinds, long long dmax, ucp_report** out) {
  return guarded([&] {
    std::vector<ucp::FamilyKind> parsed;
    const std::string spec = kinds && *kinds ? kinds : "a,b,c,d,e,f";
    for (char ch : spec) {
      if (ch == ',' || ch == ' ') continue;
      const auto k = ucp::family_from_letter(ch);
      if (!k) throw std::invalid_argument(std::string("unknown family '") + ch + "'");
      parsed.push_back(*k);
    }
    return make_report(out, ucp::cmd_families(parsed, ucp::BigInt(dmax)));
  });
}

int ucp_pell(long long ymax, ucp_report** out) {
  return guarded(
      [&] { return make_report(out, ucp::cmd_pell(ucp::BigInt(ymax))); });
}

int ucp_diophantine(int x, ucp_report** out) {
  return guarded(
      [&] { return make_report(out, ucp::cmd_diophantine(ucp::BigInt(x))); });
}

int ucp_construct(int smax, int emit_polys, ucp_report** out) {
  return guarded([&] {
    return make_report(out, ucp::cmd_construct(smax, emit_polys != 0));
  });
}

int ucp_verify(const char* suite, char** text_out) {
  return guarded([&]() -> int {
    if (!suite || !text_out) throw std::invalid_argument("null argument");
    const ucp::SuiteResult res = ucp::run_suite(suite);
    std::string text = "suite " + res.name + ": " +
                       (res.passed ? "PASS" : "FAIL") + "\n";
    for (const std::string& line : res.lines) text += line + "\n";
    *text_out = dup_string(text);
    if (!*text_out) return UCP_EINTERNAL;
    return res.passed ? UCP_OK : UCP_FAIL;
  });
}

int ucp_report_render(const ucp_report* report, const char* format,
                      char** text_out) {
  return guarded([&]() -> int {
    if (!report || !text_out) throw std::invalid_argument("null argument");
    *text_out = dup_string(report->rep.render(format ? format : "table"));
    if (!*text_out) return UCP_EINTERNAL;
    return UCP_OK;
  });
}

void ucp_report_free(ucp_report* report) { delete report; }

void ucp_string_free(char* s) { std::free(s); }

}  // extern "C"
