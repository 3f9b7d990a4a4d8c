#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "ccvms/ccvms.h"

namespace {

struct CommonArgs {
  std::string file;
  std::string format = "text";
  double tol = 0.0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int samples = 0;
  double grid_step = 0.0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("file", args.file, "scenario file")->required();
  cmd->add_option("--format", args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--tol", args.tol, "comparison tolerance override");
  cmd->add_option("--seed", args.seed, "sampling seed override")
      ->each([&args](const std::string&) { args.seed_given = true; });
  cmd->add_option("--samples", args.samples, "sample budget override");
  cmd->add_option("--grid-step", args.grid_step, "scan grid step override");
}

// 0 = the run completed (condition failures are results, not tool
// failures), 1 = parse/contract/io error, 2 = consistency violation
int fail(const char* stage, ccvms_status st) {
  std::fprintf(stderr, "ccvms %s error: %s\n", stage, ccvms_last_error());
  return st == CCVMS_ERR_CONSISTENCY ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixed-circle checks for operator-valued metrics"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string pair;
  int budget = 2000;

  CLI::App* check = app.add_subcommand("check", "run the scenario's check");
  add_common(check, args);
  CLI::App* solve =
      app.add_subcommand("solve-circle", "solve the scenario's circle");
  add_common(solve, args);
  CLI::App* axioms =
      app.add_subcommand("axioms", "verify the metric axioms on a sample");
  add_common(axioms, args);
  CLI::App* search = app.add_subcommand(
      "search", "random table mappings where one condition holds, the other fails");
  add_common(search, args);
  search->add_option("--pair", pair, "hold,fail condition ids, e.g. 2.2,2.3")
      ->required();
  search->add_option("--budget", budget, "number of random mappings to try");

  CLI11_PARSE(app, argc, argv);

  ccvms_run_options opts{};
  opts.tolerance = args.tol;
  opts.seed = args.seed;
  opts.has_seed = args.seed_given ? 1 : 0;
  opts.sample_size = args.samples;
  opts.grid_step = args.grid_step;

  ccvms_scenario* sc = nullptr;
  const ccvms_status parse_st = ccvms_scenario_parse_file(args.file.c_str(), &sc);
  if (parse_st != CCVMS_OK) return fail("parse", parse_st);

  ccvms_report* rep = nullptr;
  ccvms_status st = CCVMS_OK;
  if (check->parsed()) {
    st = ccvms_run_check(sc, &opts, &rep);
  } else if (solve->parsed()) {
    st = ccvms_solve_circle(sc, &opts, &rep);
  } else if (axioms->parsed()) {
    st = ccvms_verify_axioms(sc, &opts, &rep);
  } else {
    const auto comma = pair.find(',');
    if (comma == std::string::npos) {
      std::fprintf(stderr, "ccvms search error: --pair needs 'hold,fail'\n");
      ccvms_scenario_free(sc);
      return 1;
    }
    const std::string hold = pair.substr(0, comma);
    const std::string failing = pair.substr(comma + 1);
    st = ccvms_search(sc, hold.c_str(), failing.c_str(), budget, &opts, &rep);
  }
  if (st != CCVMS_OK) {
    ccvms_scenario_free(sc);
    return fail("run", st);
  }

  char* body = nullptr;
  const ccvms_status render_st =
      ccvms_report_render(rep, args.format.c_str(), &body);
  if (render_st != CCVMS_OK) {
    ccvms_report_free(rep);
    ccvms_scenario_free(sc);
    return fail("render", render_st);
  }
  std::fputs(body, stdout);

  ccvms_string_free(body);
  ccvms_report_free(rep);
  ccvms_scenario_free(sc);
  return 0;
}
