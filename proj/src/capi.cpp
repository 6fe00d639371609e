#include "cuspidal.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cuspidal/error.hpp"
#include "cuspidal/io.hpp"

using cuspidal::Command;
using cuspidal::Error;
using cuspidal::ErrorCode;

struct cuspidal_problem {
  cuspidal::InputDocument doc;
};

struct cuspidal_report {
  cuspidal::Report report;
  std::string point_class_name;  // storage for cuspidal_report_point_class
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error_message, const std::string& msg) {
  if (error_message) *error_message = dup_string(msg);
}

cuspidal_status status_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::parse_error: return CUSPIDAL_ERROR_PARSE;
    case ErrorCode::invalid_argument:
    case ErrorCode::context_mismatch:
    case ErrorCode::dimension_mismatch:
    case ErrorCode::division_by_zero: return CUSPIDAL_ERROR_INVALID_ARGUMENT;
    case ErrorCode::not_certified: return CUSPIDAL_ERROR_NOT_CERTIFIED;
    case ErrorCode::infinite_dimensional: return CUSPIDAL_ERROR_INFINITE_DIMENSIONAL;
    case ErrorCode::step_limit_exceeded: return CUSPIDAL_ERROR_STEP_LIMIT;
    case ErrorCode::internal: return CUSPIDAL_ERROR_INTERNAL;
  }
  return CUSPIDAL_ERROR_INTERNAL;
}

}  // namespace

extern "C" {

void cuspidal_options_init(cuspidal_options* options) {
  if (!options) return;
  options->order = CUSPIDAL_ORDER_DEFAULT;
  options->force = 0;
  options->verbose = 0;
  options->point = nullptr;
  options->gb_step_limit = 0;
}

cuspidal_status cuspidal_problem_parse(const char* text, cuspidal_problem** out,
                                       char** error_message) {
  if (!text || !out) {
    set_error(error_message, "null argument");
    return CUSPIDAL_ERROR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    auto doc = cuspidal::parse_input(text);
    *out = new cuspidal_problem{std::move(doc)};
    return CUSPIDAL_OK;
  } catch (const Error& e) {
    set_error(error_message, e.what());
    return status_of(e);
  } catch (const std::exception& e) {
    set_error(error_message, e.what());
    return CUSPIDAL_ERROR_INTERNAL;
  }
}

void cuspidal_problem_free(cuspidal_problem* problem) { delete problem; }

cuspidal_status cuspidal_run(const cuspidal_problem* problem, cuspidal_command command,
                             const cuspidal_options* options, cuspidal_report** out,
                             char** error_message) {
  if (!problem || !out) {
    set_error(error_message, "null argument");
    return CUSPIDAL_ERROR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    cuspidal::RunFlags flags;
    if (options) {
      if (options->order == CUSPIDAL_ORDER_DEGREVLEX)
        flags.order = cuspidal::MonomialOrder{cuspidal::OrderKind::degrevlex};
      else if (options->order == CUSPIDAL_ORDER_LEX)
        flags.order = cuspidal::MonomialOrder{cuspidal::OrderKind::lex};
      flags.force = options->force != 0;
      flags.verbose = options->verbose != 0;
      flags.gb_step_limit = options->gb_step_limit;
      if (options->point) flags.point = cuspidal::parse_point(options->point);
    }
    Command cmd;
    switch (command) {
      case CUSPIDAL_CMD_CHECK_MANIFOLD: cmd = Command::check_manifold; break;
      case CUSPIDAL_CMD_CHECK_GENERIC: cmd = Command::check_generic; break;
      case CUSPIDAL_CMD_CHECK_STABLE: cmd = Command::check_stable; break;
      case CUSPIDAL_CMD_CLASSIFY: cmd = Command::classify; break;
      case CUSPIDAL_CMD_COUNT: cmd = Command::count; break;
      case CUSPIDAL_CMD_DERIVE: cmd = Command::derive; break;
      default:
        set_error(error_message, "unknown command");
        return CUSPIDAL_ERROR_INVALID_ARGUMENT;
    }
    auto report = cuspidal::run(cmd, problem->doc, flags);
    *out = new cuspidal_report{std::move(report), {}};
    return CUSPIDAL_OK;
  } catch (const Error& e) {
    set_error(error_message, e.what());
    return status_of(e);
  } catch (const std::exception& e) {
    set_error(error_message, e.what());
    return CUSPIDAL_ERROR_INTERNAL;
  }
}

void cuspidal_report_free(cuspidal_report* report) { delete report; }

char* cuspidal_report_text(const cuspidal_report* report) {
  if (!report) return nullptr;
  return dup_string(cuspidal::report_text(report->report));
}

char* cuspidal_report_json(const cuspidal_report* report) {
  if (!report) return nullptr;
  return dup_string(cuspidal::report_json(report->report));
}

int cuspidal_report_exit_code(const cuspidal_report* report) {
  return report ? cuspidal::report_exit_code(report->report) : 1;
}

int cuspidal_report_certified(const cuspidal_report* report) {
  if (!report || !report->report.certificate) return -1;
  return *report->report.certificate == cuspidal::CertStatus::certified ? 1 : 0;
}

cuspidal_status cuspidal_report_cusp_counts(const cuspidal_report* report, long* total,
                                            long* signed_sum, long* positive, long* negative,
                                            long* dim_a) {
  if (!report || !report->report.cusps) return CUSPIDAL_ERROR_INVALID_ARGUMENT;
  const cuspidal::CuspReport& c = *report->report.cusps;
  if (total) *total = c.total;
  if (signed_sum) *signed_sum = c.signed_sum;
  if (positive) *positive = c.positive;
  if (negative) *negative = c.negative;
  if (dim_a) *dim_a = c.dim_A;
  return CUSPIDAL_OK;
}

const char* cuspidal_report_point_class(const cuspidal_report* report, int* cusp_sign) {
  if (!report || !report->report.point_class) return nullptr;
  const cuspidal::PointClass& pc = *report->report.point_class;
  auto* mut = const_cast<cuspidal_report*>(report);
  mut->point_class_name = std::string(cuspidal::point_class_name(pc.kind));
  if (cusp_sign && pc.kind == cuspidal::PointClassKind::cusp) *cusp_sign = pc.cusp_sign;
  return mut->point_class_name.c_str();
}

void cuspidal_string_free(char* s) { std::free(s); }

const char* cuspidal_version(void) { return "1.0.0"; }

}  // extern "C"
