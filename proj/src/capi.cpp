#include "ccvms/ccvms.h"

#include <cstring>
#include <string>

#include "errors.hpp"
#include "runner.hpp"
#include "scenario.hpp"

struct ccvms_scenario {
  ccvms::scenario::Scenario sc;
};

struct ccvms_report {
  ccvms::runner::Outcome out;
};

namespace {

thread_local std::string g_last_error;

ccvms_status classify(const ccvms::Error& e) {
  switch (e.code()) {
    case ccvms::ErrorCode::Parse: return CCVMS_ERR_PARSE;
    case ccvms::ErrorCode::Consistency: return CCVMS_ERR_CONSISTENCY;
    case ccvms::ErrorCode::Io: return CCVMS_ERR_IO;
    default: return CCVMS_ERR_CONTRACT;
  }
}

// runs fn, storing the thrown message and mapped status on failure
template <typename Fn>
ccvms_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CCVMS_OK;
  } catch (const ccvms::Error& e) {
    g_last_error = e.what();
    return classify(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CCVMS_ERR_CONTRACT;
  }
}

ccvms_status invalid(const char* message) {
  g_last_error = message;
  return CCVMS_ERR_INVALID_ARG;
}

ccvms::runner::Overrides to_overrides(const ccvms_run_options* opts) {
  ccvms::runner::Overrides ov;
  if (!opts) return ov;
  if (opts->tolerance > 0.0) ov.tolerance = opts->tolerance;
  if (opts->has_seed) ov.seed = opts->seed;
  if (opts->sample_size >= 1) ov.sample_size = opts->sample_size;
  if (opts->grid_step > 0.0) ov.grid_step = opts->grid_step;
  return ov;
}

template <typename Fn>
ccvms_status run_into(const ccvms_scenario* sc, ccvms_report** out, Fn&& fn) {
  if (!sc || !out) return invalid("scenario and out must not be null");
  *out = nullptr;
  return guarded([&] { *out = new ccvms_report{fn(sc->sc)}; });
}

}  // namespace

extern "C" {

const char* ccvms_version(void) { return ccvms::runner::kVersion; }

const char* ccvms_last_error(void) { return g_last_error.c_str(); }

ccvms_status ccvms_scenario_parse_file(const char* path, ccvms_scenario** out) {
  if (!path || !out) return invalid("path and out must not be null");
  *out = nullptr;
  return guarded(
      [&] { *out = new ccvms_scenario{ccvms::scenario::load_scenario(path)}; });
}

ccvms_status ccvms_scenario_parse_text(const char* text, ccvms_scenario** out) {
  if (!text || !out) return invalid("text and out must not be null");
  *out = nullptr;
  return guarded([&] {
    *out = new ccvms_scenario{ccvms::scenario::parse_scenario(text)};
  });
}

void ccvms_scenario_free(ccvms_scenario* sc) { delete sc; }

ccvms_status ccvms_run_check(const ccvms_scenario* sc,
                             const ccvms_run_options* opts,
                             ccvms_report** out) {
  return run_into(sc, out, [&](const ccvms::scenario::Scenario& scenario) {
    return ccvms::runner::run_check(scenario, to_overrides(opts));
  });
}

ccvms_status ccvms_solve_circle(const ccvms_scenario* sc,
                                const ccvms_run_options* opts,
                                ccvms_report** out) {
  return run_into(sc, out, [&](const ccvms::scenario::Scenario& scenario) {
    return ccvms::runner::run_solve_circle(scenario, to_overrides(opts));
  });
}

ccvms_status ccvms_verify_axioms(const ccvms_scenario* sc,
                                 const ccvms_run_options* opts,
                                 ccvms_report** out) {
  return run_into(sc, out, [&](const ccvms::scenario::Scenario& scenario) {
    return ccvms::runner::run_axioms(scenario, to_overrides(opts));
  });
}

ccvms_status ccvms_search(const ccvms_scenario* sc, const char* hold_id,
                          const char* fail_id, int budget,
                          const ccvms_run_options* opts, ccvms_report** out) {
  if (!hold_id || !fail_id)
    return invalid("hold_id and fail_id must not be null");
  return run_into(sc, out, [&](const ccvms::scenario::Scenario& scenario) {
    return ccvms::runner::run_search(scenario, hold_id, fail_id, budget,
                                     to_overrides(opts));
  });
}

int ccvms_report_passed(const ccvms_report* rep) {
  return rep && rep->out.passed() ? 1 : 0;
}

ccvms_status ccvms_report_render(const ccvms_report* rep, const char* format,
                                 char** out) {
  if (!rep || !format || !out)
    return invalid("report, format and out must not be null");
  *out = nullptr;
  const std::string fmt = format;
  if (fmt != "text" && fmt != "json")
    return invalid("format must be \"text\" or \"json\"");
  return guarded([&] {
    const std::string body = fmt == "json"
                                 ? ccvms::runner::render_json(rep->out)
                                 : ccvms::runner::render_text(rep->out);
    char* copy = new char[body.size() + 1];
    std::memcpy(copy, body.c_str(), body.size() + 1);
    *out = copy;
  });
}

void ccvms_report_free(ccvms_report* rep) { delete rep; }

void ccvms_string_free(char* s) { delete[] s; }

}  // extern "C"
