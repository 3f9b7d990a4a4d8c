#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"

namespace ccvms::space {

enum class SpaceKind {
  RealLineDiag,
  RealLineExpDiag,
  RealLineDiscrete,
  SquareTuple,
  StepFn
};

std::string space_kind_name(SpaceKind kind);

// A point of whichever space: scalar, pair, or k piece values.
class Point {
 public:
  explicit Point(std::vector<double> coords);
  static Point scalar(double x);
  static Point pair(double x, double y);

  const std::vector<double>& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  double value() const;  // scalar points only
  std::string describe() const;

  bool operator==(const Point& other) const { return coords_ == other.coords_; }
  bool operator<(const Point& other) const { return coords_ < other.coords_; }

 private:
  std::vector<double> coords_;
};

bool approx_equal(const Point& a, const Point& b, double tol);

struct Instance {
  SpaceKind kind = SpaceKind::RealLineDiag;
  double alpha = 1.0;     // diag metrics
  int pieces = 0;         // stepfn
  bool ambient = false;   // square-tuple: widen [-1,1]^2 to the plane
  algebra::Descriptor algebra_desc;
  double lo = -10.0;      // sampling bounds per coordinate
  double hi = 10.0;

  static Instance real_line_diag(double alpha);
  static Instance real_line_exp_diag(double alpha);
  static Instance real_line_discrete();
  static Instance square_tuple(bool ambient);
  static Instance step_fn(int pieces);

  std::string label() const;
  int point_dim() const;
  bool contains(const Point& x) const;
  algebra::Element distance(const Point& x, const Point& y) const;
};

enum class RuleKind { Identity, Constant, ReciprocalOrZero, Affine, Table };

struct Rule {
  RuleKind kind = RuleKind::Identity;
  std::optional<Point> constant;                 // Constant
  double a = 1.0, b = 0.0;                       // Affine: a*x + b
  std::vector<std::pair<Point, Point>> table;    // Table: exact-match entries
  std::optional<Point> table_default;            // Table fallthrough

  std::string describe() const;
};

struct Clause {
  std::function<bool(const Point&)> matches;
  std::string region_text;
  Rule rule;
};

// Ordered clause list; first matching region wins. The caller appends a
// default clause (matches everything) last.
struct SelfMapping {
  std::vector<Clause> clauses;

  std::string describe() const;
};

Point apply_rule(const Rule& rule, const Point& x);
Point apply_mapping(const Instance& s, const SelfMapping& t, const Point& x);

std::vector<Point> sample_points(const Instance& s, std::uint64_t seed,
                                 int budget,
                                 const std::vector<Point>& must_include);

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::string witness;  // empty when passed
};

struct AxiomReport {
  AxiomCheck identity;
  AxiomCheck symmetry;
  AxiomCheck triangle;
  int points_checked = 0;

  bool all_passed() const {
    return identity.passed && symmetry.passed && triangle.passed;
  }
};

using MetricFn =
    std::function<algebra::Element(const Point&, const Point&)>;

// metric_override lets tests inject a broken candidate metric; the
// instance's own metric is used when it is absent.
AxiomReport verify_axioms(const Instance& s, const std::vector<Point>& sample,
                          double tol, const MetricFn* metric_override = nullptr);

}  // namespace ccvms::space
