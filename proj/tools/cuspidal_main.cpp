// Command-line driver for the cuspidal engine. Talks to the shared library
// exclusively through the C API in cuspidal.h.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cuspidal.h"

namespace {

struct CString {
  char* s = nullptr;
  ~CString() { cuspidal_string_free(s); }
};

int run_command(cuspidal_command command, const std::string& file, const cuspidal_options& options,
                bool json) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "error: cannot open '" << file << "'\n";
    return 1;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  cuspidal_problem* problem = nullptr;
  CString err;
  cuspidal_status st = cuspidal_problem_parse(text.c_str(), &problem, &err.s);
  if (st != CUSPIDAL_OK) {
    std::cerr << "error: " << (err.s ? err.s : "parse failed") << "\n";
    return 1;
  }

  cuspidal_report* report = nullptr;
  CString run_err;
  st = cuspidal_run(problem, command, &options, &report, &run_err.s);
  int exit_code = 1;
  if (st == CUSPIDAL_OK) {
    CString text_out;
    text_out.s = json ? cuspidal_report_json(report) : cuspidal_report_text(report);
    if (text_out.s) std::cout << text_out.s << (json ? "\n" : "");
    exit_code = cuspidal_report_exit_code(report);
  } else if (st == CUSPIDAL_ERROR_NOT_CERTIFIED) {
    // Inconclusive certificate blocked the computation: report it as such.
    std::cerr << (run_err.s ? run_err.s : "not certified") << "\n";
    exit_code = 2;
  } else {
    std::cerr << "error: " << (run_err.s ? run_err.s : "run failed") << "\n";
    exit_code = 1;
  }
  cuspidal_report_free(report);
  cuspidal_problem_free(problem);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cuspidal - exact fold/cusp certification and cusp counting for "
               "polynomial maps on 2-dimensional complete intersections"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cuspidal_version());

  struct {
    std::string file;
    std::string order;
    std::string point;
    bool force = false;
    bool json = false;
    bool verbose = false;
  } args;

  auto add_common = [&](CLI::App* sub, bool with_point) {
    sub->add_option("file", args.file, "input file")->required();
    sub->add_option("--order", args.order, "monomial order: degrevlex | lex")
        ->check(CLI::IsMember({"degrevlex", "lex"}));
    if (with_point)
      sub->add_option("--point", args.point, "comma-separated rational coordinates");
    sub->add_flag("--force", args.force, "compute even without the stability certificate");
    sub->add_flag("--json", args.json, "machine-readable output");
    sub->add_flag("--verbose", args.verbose, "include derived polynomials");
  };

  struct Sub {
    const char* name;
    const char* help;
    cuspidal_command command;
    bool with_point;
  };
  const Sub subs[] = {
      {"check-manifold", "certify that h cuts out a smooth surface", CUSPIDAL_CMD_CHECK_MANIFOLD,
       false},
      {"check-generic", "certify 1-genericity", CUSPIDAL_CMD_CHECK_GENERIC, false},
      {"check-stable", "certify folds and simple cusps only", CUSPIDAL_CMD_CHECK_STABLE, false},
      {"classify", "classify one rational point", CUSPIDAL_CMD_CLASSIFY, true},
      {"count", "count cusps and their signs", CUSPIDAL_CMD_COUNT, false},
      {"derive", "print the derived polynomials d, w, v, F, delta", CUSPIDAL_CMD_DERIVE, false},
  };
  for (const auto& s : subs) add_common(app.add_subcommand(s.name, s.help), s.with_point);

  CLI11_PARSE(app, argc, argv);

  cuspidal_options options;
  cuspidal_options_init(&options);
  if (args.order == "degrevlex") options.order = CUSPIDAL_ORDER_DEGREVLEX;
  if (args.order == "lex") options.order = CUSPIDAL_ORDER_LEX;
  options.force = args.force ? 1 : 0;
  options.verbose = args.verbose ? 1 : 0;
  if (!args.point.empty()) options.point = args.point.c_str();
  if (const char* limit = std::getenv("CUSPIDAL_GB_STEP_LIMIT")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(limit, &end, 10);
    if (end && *end == '\0') options.gb_step_limit = v;
  }

  for (const auto& s : subs)
    if (app.get_subcommand(s.name)->parsed())
      return run_command(s.command, args.file, options, args.json);
  return 1;
}
