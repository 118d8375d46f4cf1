// Command-line front end. Everything goes through the C API of the
// shared library; this binary never touches the engine internals.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "unicusp.h"

namespace {

int report_error(int status) {
  std::cerr << "error: " << ucp_last_error() << "\n";
  // Usage problems exit 2, anything else 1.
  return status == UCP_EUSAGE ? 2 : 1;
}

int emit(ucp_report* rep, const std::string& format, const std::string& out_path) {
  char* text = nullptr;
  const int rc = ucp_report_render(rep, format.c_str(), &text);
  ucp_report_free(rep);
  if (rc != UCP_OK) return report_error(rc);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open '" << out_path << "'\n";
      ucp_string_free(text);
      return 1;
    }
    f << text;
  }
  ucp_string_free(text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unicusp: exact classification of rational unicuspidal plane "
               "curves with one Puiseux pair"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ucp_version()));

  std::string format = "table";
  std::string out_path;
  const auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_option("--out", out_path, "write the report to a file");
  };

  long long dmax = 0;
  std::string filters = "full";
  std::string cbar2;
  int jobs = 1;
  auto* search = app.add_subcommand("search", "classify all candidates up to a degree");
  search->add_option("--dmax", dmax, "largest degree to enumerate")->required();
  search->add_option("--filters", filters,
                     "'full', 'closed-forms', or a comma-separated filter list");
  search->add_option("--cbar2", cbar2, "restrict to a cbar2 range 'min..max'");
  search->add_option("--jobs", jobs, "worker threads (output is unaffected)");
  add_output_flags(search);

  long long cd = 0, ca = 0, cb = 0;
  auto* classify = app.add_subcommand("classify", "classify a single triple d a b");
  classify->add_option("d", cd)->required();
  classify->add_option("a", ca)->required();
  classify->add_option("b", cb)->required();
  add_output_flags(classify);

  std::string kinds = "a,b,c,d,e,f";
  long long fam_dmax = 0;
  auto* families = app.add_subcommand("families", "list realizable family members");
  families->add_option("--kinds", kinds, "comma-separated subset of a,b,c,d,e,f");
  families->add_option("--dmax", fam_dmax, "largest degree")->required();
  add_output_flags(families);

  long long ymax = 0;
  auto* pell = app.add_subcommand("pell", "solutions of x^2 - 5y^2 = -4");
  pell->add_option("--ymax", ymax, "largest y")->required();
  add_output_flags(pell);

  int dx = 0;
  auto* dio = app.add_subcommand("diophantine",
                                 "case analysis of the excess identity for one x");
  dio->add_option("--x", dx, "excess x = 3d - 8a, in [0, 5]")->required();
  add_output_flags(dio);

  int smax = 0;
  bool emit_polys = false;
  auto* construct = app.add_subcommand("construct", "Kashiwara polynomial recursion");
  construct->add_option("--smax", smax, "last index to build")->required();
  construct->add_flag("--emit-polys", emit_polys, "include polynomial text");
  add_output_flags(construct);

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name, or 'all'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  ucp_report* rep = nullptr;
  if (*search) {
    const int rc = ucp_search(dmax, filters.c_str(), cbar2.c_str(), jobs, &rep);
    if (rc != UCP_OK) return report_error(rc);
    return emit(rep, format, out_path);
  }
  if (*classify) {
    const int rc = ucp_classify(cd, ca, cb, &rep);
    if (rc != UCP_OK) return report_error(rc);
    return emit(rep, format, out_path);
  }
  if (*families) {
    const int rc = ucp_families(kinds.c_str(), fam_dmax, &rep);
    if (rc != UCP_OK) return report_error(rc);
    return emit(rep, format, out_path);
  }
  if (*pell) {
    const int rc = ucp_pell(ymax, &rep);
    if (rc != UCP_OK) return report_error(rc);
    return emit(rep, format, out_path);
  }
  if (*dio) {
    const int rc = ucp_diophantine(dx, &rep);
    if (rc != UCP_OK) return report_error(rc);
    return emit(rep, format, out_path);
  }
  if (*construct) {
    const int rc = ucp_construct(smax, emit_polys ? 1 : 0, &rep);
    if (rc != UCP_OK) return report_error(rc);
    return emit(rep, format, out_path);
  }
  if (*verify) {
    char* text = nullptr;
    const int rc = ucp_verify(suite.c_str(), &text);
    if (rc == UCP_EUSAGE || rc == UCP_EINTERNAL) return report_error(rc);
    std::cout << text;
    ucp_string_free(text);
    return rc == UCP_OK ? 0 : 1;
  }
  return 2;
}
