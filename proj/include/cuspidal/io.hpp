#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cuspidal/singularity.hpp"

namespace cuspidal {

// A parsed input document:
//   vars <id>+          once, n+2 variables
//   h <expr>            n times, in orientation order
//   f <expr>            exactly twice
//   order <kind>        optional setting (degrevlex | lex)
//   force               optional setting
// Blank lines and '#' comments are ignored. Expressions use integer or a/b
// rational coefficients, explicit '*' between factors, '^' for exponents,
// '+'/'-' separators and parentheses (expanded on parse).
struct InputDocument {
  Problem problem;
  std::optional<MonomialOrder> order;
  bool force = false;
};

// Throws ErrorCode::parse_error with line/column on malformed input,
// variable-count mismatch, or unknown identifiers.
InputDocument parse_input(std::string_view text);

// Parses a single polynomial expression over the given context.
Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx);

// Comma-separated rationals, e.g. "0,1/2,-3".
std::vector<Rational> parse_point(std::string_view text);

// Canonical printing; output re-parses to an identical polynomial.
std::string to_string(const Polynomial& p);
std::string to_string(const Monomial& m, const VariableContext& ctx);

enum class Command { check_manifold, check_generic, check_stable, classify, count, derive };

std::string_view command_name(Command c);
std::optional<Command> command_from_name(std::string_view name);

struct RunFlags {
  std::optional<MonomialOrder> order;  // overrides the document setting
  bool force = false;
  bool verbose = false;
  std::optional<std::vector<Rational>> point;  // required by classify
  unsigned long gb_step_limit = 0;
};

// Outcome of one command, with everything needed for text and JSON output.
struct Report {
  Command command = Command::derive;
  ContextPtr context;
  MonomialOrder order;
  std::optional<CertStatus> certificate;
  std::optional<PointClass> point_class;
  std::optional<CuspReport> cusps;
  std::optional<DerivedData> derived;
  std::vector<Rational> point;  // echo for classify
  double elapsed_ms = 0.0;
};

// Dispatches a command against a document. Engine errors propagate as
// cuspidal::Error.
Report run(Command command, const InputDocument& doc, const RunFlags& flags);

std::string report_text(const Report& r);
std::string report_json(const Report& r);  // lossless machine-readable form
Report report_from_json(std::string_view json_text);

// 0 on certified/success, 2 on inconclusive.
int report_exit_code(const Report& r);

std::string_view point_class_name(PointClassKind k);

}  // namespace cuspidal
