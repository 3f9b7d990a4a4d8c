#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circle.hpp"
#include "scenario.hpp"
#include "space.hpp"
#include "theorems.hpp"

namespace ccvms::runner {

inline constexpr const char* kVersion = "0.1.0";

// command-line values that take precedence over the scenario's [check] keys
struct Overrides {
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
  std::optional<int> sample_size;
  std::optional<double> grid_step;
};

theorems::CheckContext make_context(const scenario::CheckSpec& check,
                                    const Overrides& overrides);

// clause specs compiled against the solved circle; c may be null when no
// clause region needs it
space::SelfMapping compile_mapping(const space::Instance& s,
                                   const std::vector<scenario::ClauseSpec>& clauses,
                                   const circle::Circle* c, double tol);

struct PicardRun {
  space::Point start;
  theorems::PicardResult result;
};

struct SearchHit {
  std::vector<std::pair<space::Point, space::Point>> table;
  space::Point fallback;
  double size = 0.0;  // summed coordinate magnitudes of the outputs
  std::string summary;
};

struct Outcome {
  std::string mode;  // check | solve-circle | axioms | search
  std::string scenario_id;
  std::string space_label;
  std::string mapping_text;
  std::string theorem;
  std::vector<theorems::ConditionReport> conditions;
  bool conclusion_fixed = false;
  bool circle_empty = false;
  bool identity_on_sample = false;
  bool consistency = true;
  std::string note;
  std::optional<circle::Circle> circle;
  std::optional<circle::Circle> circle2;
  std::vector<circle::Circle> enumerated;  // prop1
  std::optional<space::AxiomReport> axioms;
  std::vector<PicardRun> picard;
  double picard_agreement = -1.0;  // set when a second start ran
  std::optional<theorems::GridScanResult> scan;
  std::vector<SearchHit> search_hits;
  int search_tried = 0;
  std::string search_hold;
  std::string search_fail;
  long long wall_ms = 0;

  // drives the process exit code: every evaluated condition holds and the
  // mode-specific verdict is positive
  bool passed() const;
};

Outcome run_check(const scenario::Scenario& sc, const Overrides& overrides);
Outcome run_solve_circle(const scenario::Scenario& sc,
                         const Overrides& overrides);
Outcome run_axioms(const scenario::Scenario& sc, const Overrides& overrides);
Outcome run_search(const scenario::Scenario& sc, const std::string& hold_id,
                   const std::string& fail_id, int budget,
                   const Overrides& overrides);

std::string render_text(const Outcome& out);
// stable across reruns: wall_ms is pinned to 0 in the json body
std::string render_json(const Outcome& out);

}  // namespace ccvms::runner
