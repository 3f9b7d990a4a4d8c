#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "circle.hpp"
#include "space.hpp"

namespace ccvms::scenario {

enum class RegionKind { OnCircle, NotOnCircle, Eq, Default };

struct RegionSpec {
  RegionKind kind = RegionKind::Default;
  std::optional<space::Point> point;  // Eq

  std::string describe() const;
};

struct RuleSpec {
  space::RuleKind kind = space::RuleKind::Identity;
  std::optional<space::Point> constant;
  double a = 1.0, b = 0.0;

  std::string describe() const;
};

struct ClauseSpec {
  RegionSpec region;
  RuleSpec rule;
};

struct CircleSpec {
  space::Point center;
  algebra::Element radius;
};

struct CheckSpec {
  std::string theorem;  // 5..11, prop1, contraction, picard
  std::string kind;     // banach | kannan | ciric | caristi
  std::optional<algebra::Element> a;
  int sample_size = 200;
  std::uint64_t seed = 1;
  double grid_step = 0.01;
  double tolerance = 1e-9;
  bool scan = false;
  int max_iter = 100;
  std::optional<space::Point> start;
  std::optional<space::Point> start2;
  std::optional<space::Point> alpha_point;
  std::optional<space::Point> phi_center;
};

struct Scenario {
  std::string id;
  space::Instance instance;
  std::optional<CircleSpec> circle1;
  std::optional<CircleSpec> circle2;
  std::vector<ClauseSpec> mapping;
  CheckSpec check;
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

// canonical rendering; parse(emit(sc)) reproduces sc
std::string emit_scenario(const Scenario& sc);

// numeric expression on literals with e, pi, ln(v); used by the parser
// and exposed for tests
double eval_expression(const std::string& text, int line_for_errors = 0);

}  // namespace ccvms::scenario
