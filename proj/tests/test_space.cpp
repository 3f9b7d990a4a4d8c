#include <cmath>
#include <set>
#include <vector>

#include "algebra.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "space.hpp"

using namespace ccvms;
using namespace ccvms::space;

namespace {
const double kTol = 1e-9;

algebra::Element diag2(const algebra::Descriptor& desc, double a, double b) {
  const double entries[] = {a, b};
  return algebra::diagonal(desc, entries);
}
}  // namespace

TEST_CASE("point construction and rendering") {
  CHECK(Point::scalar(0.5).describe() == "0.5");
  CHECK(Point::pair(-1.0, 2.5).describe() == "(-1, 2.5)");
  CHECK(Point({1.0, 2.0, 3.0, 4.0}).describe() == "[1, 2, 3, 4]");
  CHECK(Point::scalar(-3.0).value() == -3.0);
  CHECK(Point::pair(1, 2).dim() == 2);
  CHECK_THROWS_AS(Point::pair(1, 2).value(), ContractError);
  CHECK_THROWS_AS(Point(std::vector<double>{}), ContractError);
  CHECK_THROWS_AS(Point({1.0, std::nan("")}), ContractError);

  CHECK(approx_equal(Point::scalar(1.0), Point::scalar(1.0 + 1e-12), kTol));
  CHECK_FALSE(approx_equal(Point::scalar(1.0), Point::scalar(1.1), kTol));
  CHECK_FALSE(approx_equal(Point::scalar(1.0), Point::pair(1.0, 0.0), kTol));
}

TEST_CASE("instance factories pair each space with its algebra") {
  auto diag = Instance::real_line_diag(3.0);
  CHECK(diag.label() == "real-line-diag(alpha=3)");
  CHECK(diag.point_dim() == 1);
  CHECK(diag.algebra_desc.label() == "mat-entrywise(2)");
  CHECK(diag.lo == -10.0);
  CHECK(diag.hi == 10.0);

  auto expd = Instance::real_line_exp_diag(2.0);
  CHECK(expd.label() == "real-line-exp-diag(alpha=2)");
  CHECK(expd.algebra_desc.label() == "mat-entrywise(2)");
  CHECK(expd.lo == -3.0);
  CHECK(expd.hi == 4.0);

  auto disc = Instance::real_line_discrete();
  CHECK(disc.label() == "real-line-discrete");
  CHECK(disc.algebra_desc.label() == "mat-entrywise(2)");

  auto sq = Instance::square_tuple(false);
  CHECK(sq.point_dim() == 2);
  CHECK(sq.algebra_desc.label() == "tuple(2)");

  auto sf = Instance::step_fn(4);
  CHECK(sf.point_dim() == 4);
  CHECK(sf.algebra_desc.label() == "stepfn(4)");
  CHECK(sf.lo == -3.0);
  CHECK(sf.hi == 3.0);

  CHECK_THROWS_AS(Instance::real_line_diag(-1.0), ContractError);
  CHECK_THROWS_AS(Instance::step_fn(0), ContractError);
}

TEST_CASE("containment: only the restricted square limits the domain") {
  auto sq = Instance::square_tuple(false);
  CHECK(sq.contains(Point::pair(1.0, -1.0)));
  CHECK(sq.contains(Point::pair(0.25, 0.75)));
  CHECK_FALSE(sq.contains(Point::pair(1.5, 0.0)));
  CHECK_FALSE(sq.contains(Point::scalar(0.0)));

  auto amb = Instance::square_tuple(true);
  CHECK(amb.contains(Point::pair(50.0, -2.0)));
  CHECK_FALSE(amb.contains(Point::scalar(0.0)));

  auto diag = Instance::real_line_diag(1.0);
  CHECK(diag.contains(Point::scalar(123.0)));
  CHECK_FALSE(diag.contains(Point::pair(0.0, 0.0)));
}

TEST_CASE("distance values per space") {
  auto diag = Instance::real_line_diag(3.0);
  auto d1 = diag.distance(Point::scalar(2.0), Point::scalar(-1.0));
  CHECK(algebra::approx_equal(d1, diag2(diag.algebra_desc, 3.0, 9.0), kTol));
  CHECK(algebra::approx_equal(diag.distance(Point::scalar(5.0), Point::scalar(5.0)),
                              algebra::zero(diag.algebra_desc), kTol));

  auto expd = Instance::real_line_exp_diag(2.0);
  const double gap = std::exp(1.0) - 1.0;
  CHECK(algebra::approx_equal(expd.distance(Point::scalar(0.0), Point::scalar(1.0)),
                              diag2(expd.algebra_desc, gap, 2.0 * gap), kTol));

  auto disc = Instance::real_line_discrete();
  CHECK(algebra::approx_equal(disc.distance(Point::scalar(1.0), Point::scalar(1.0)),
                              algebra::zero(disc.algebra_desc), kTol));
  CHECK(algebra::approx_equal(disc.distance(Point::scalar(1.0), Point::scalar(1.0 + 1e-14)),
                              algebra::unit(disc.algebra_desc), kTol));

  auto sq = Instance::square_tuple(false);
  auto d2 = sq.distance(Point::pair(1.0, 0.5), Point::pair(-1.0, 0.0));
  CHECK(algebra::approx_equal(
      d2, algebra::Element(sq.algebra_desc, {2.0, 0.5}), kTol));
  CHECK_THROWS_AS(sq.distance(Point::pair(2.0, 0.0), Point::pair(0.0, 0.0)),
                  DomainError);

  auto sf = Instance::step_fn(4);
  auto d3 = sf.distance(Point({0.0, 0.0, 1.0, 1.0}), Point({1.0, 1.0, 1.0, 1.0}));
  CHECK(algebra::approx_equal(
      d3, algebra::Element(sf.algebra_desc, {1.0, 1.0, 0.0, 0.0}), kTol));

  CHECK_THROWS_AS(diag.distance(Point::pair(0.0, 0.0), Point::scalar(1.0)),
                  DomainError);
}

TEST_CASE("rules") {
  Rule id;
  CHECK(apply_rule(id, Point::scalar(4.0)) == Point::scalar(4.0));

  Rule c;
  c.kind = RuleKind::Constant;
  c.constant = Point::scalar(7.0);
  CHECK(apply_rule(c, Point::scalar(1.0)) == Point::scalar(7.0));
  Rule broken;
  broken.kind = RuleKind::Constant;
  CHECK_THROWS_AS(apply_rule(broken, Point::scalar(1.0)), ContractError);

  Rule rec;
  rec.kind = RuleKind::ReciprocalOrZero;
  CHECK(apply_rule(rec, Point::scalar(4.0)) == Point::scalar(0.25));
  CHECK(apply_rule(rec, Point::scalar(0.0)) == Point::scalar(0.0));
  CHECK(apply_rule(rec, Point::pair(2.0, 0.0)) == Point::pair(0.5, 0.0));

  Rule aff;
  aff.kind = RuleKind::Affine;
  aff.a = 0.5;
  aff.b = -1.0;
  CHECK(apply_rule(aff, Point::scalar(6.0)) == Point::scalar(2.0));

  Rule tab;
  tab.kind = RuleKind::Table;
  tab.table.emplace_back(Point::scalar(2.0), Point::scalar(1.0));
  tab.table.emplace_back(Point::scalar(-2.0), Point::scalar(-1.0));
  tab.table_default = Point::scalar(0.0);
  CHECK(apply_rule(tab, Point::scalar(2.0)) == Point::scalar(1.0));
  CHECK(apply_rule(tab, Point::scalar(9.0)) == Point::scalar(0.0));
  Rule tab2 = tab;
  tab2.table_default.reset();
  CHECK(apply_rule(tab2, Point::scalar(9.0)) == Point::scalar(9.0));
}

TEST_CASE("mapping clause precedence and domain checks") {
  auto s = Instance::real_line_diag(1.0);

  SelfMapping t;
  Clause first;
  first.matches = [](const Point& p) { return p.value() > 0.0; };
  first.region_text = "positive";
  first.rule.kind = RuleKind::Constant;
  first.rule.constant = Point::scalar(1.0);
  Clause fallback;
  fallback.matches = nullptr;  // always
  fallback.region_text = "default";
  fallback.rule.kind = RuleKind::Constant;
  fallback.rule.constant = Point::scalar(-1.0);
  t.clauses = {first, fallback};

  CHECK(apply_mapping(s, t, Point::scalar(3.0)) == Point::scalar(1.0));
  CHECK(apply_mapping(s, t, Point::scalar(-3.0)) == Point::scalar(-1.0));
  CHECK(t.describe() == "positive -> constant 1; default -> constant -1");

  SelfMapping none;
  Clause only;
  only.matches = [](const Point& p) { return p.value() > 0.0; };
  only.region_text = "positive";
  only.rule.kind = RuleKind::Identity;
  none.clauses = {only};
  CHECK_THROWS_AS(apply_mapping(s, none, Point::scalar(-1.0)), ContractError);

  // an image leaving the restricted square is a contract breach, not a result
  auto sq = Instance::square_tuple(false);
  SelfMapping esc;
  Clause big;
  big.matches = nullptr;
  big.region_text = "default";
  big.rule.kind = RuleKind::Constant;
  big.rule.constant = Point::pair(3.0, 3.0);
  esc.clauses = {big};
  CHECK_THROWS_AS(apply_mapping(sq, esc, Point::pair(0.0, 0.0)), DomainError);
  CHECK_THROWS_AS(apply_mapping(sq, esc, Point::pair(9.0, 9.0)), DomainError);
}

TEST_CASE("sampling is deterministic and honors must-include") {
  auto s = Instance::real_line_diag(3.0);
  std::vector<Point> must = {Point::scalar(2.0), Point::scalar(-2.0),
                             Point::scalar(2.0)};
  auto pts = sample_points(s, 42, 50, must);
  REQUIRE(static_cast<int>(pts.size()) == 50);
  CHECK(pts[0] == Point::scalar(2.0));
  CHECK(pts[1] == Point::scalar(-2.0));
  std::set<std::vector<double>> seen;
  for (const auto& p : pts) {
    CHECK(seen.insert(p.coords()).second);
    for (double c : p.coords()) {
      CHECK(c >= s.lo);
      CHECK(c <= s.hi);
    }
  }

  auto again = sample_points(s, 42, 50, must);
  CHECK(pts == again);
  auto other = sample_points(s, 43, 50, must);
  CHECK(pts != other);

  CHECK_THROWS_AS(sample_points(s, 1, 1, must), ContractError);
  auto sq = Instance::square_tuple(false);
  CHECK_THROWS_AS(
      sample_points(sq, 1, 10, {Point::pair(5.0, 0.0)}), ContractError);

  auto pairs = sample_points(sq, 7, 30, {});
  CHECK(static_cast<int>(pairs.size()) == 30);
  for (const auto& p : pairs) CHECK(sq.contains(p));

  auto fns = sample_points(Instance::step_fn(4), 7, 30, {});
  for (const auto& p : fns) CHECK(p.dim() == 4);
}

TEST_CASE("metric axioms hold on every instance") {
  const std::vector<Instance> spaces = {
      Instance::real_line_diag(3.0), Instance::real_line_exp_diag(2.0),
      Instance::real_line_discrete(), Instance::square_tuple(false),
      Instance::step_fn(4)};
  for (const auto& s : spaces) {
    CAPTURE(s.label());
    auto sample = sample_points(s, 11, 40, {});
    auto report = verify_axioms(s, sample, kTol);
    CHECK(report.all_passed());
    CHECK(report.points_checked == 40);
  }
}

TEST_CASE("broken metrics are caught with witnesses") {
  auto s = Instance::real_line_diag(2.0);
  auto sample = sample_points(s, 5, 25, {});
  const auto& desc = s.algebra_desc;

  // signed difference: antisymmetric, so symmetry must fail
  MetricFn signedDiff = [&](const Point& x, const Point& y) {
    return diag2(desc, x.value() - y.value(), 2.0 * (x.value() - y.value()));
  };
  auto r1 = verify_axioms(s, sample, kTol, &signedDiff);
  CHECK_FALSE(r1.symmetry.passed);
  CHECK_FALSE(r1.symmetry.witness.empty());

  // squared gap: violates the triangle inequality
  MetricFn squared = [&](const Point& x, const Point& y) {
    const double g = std::abs(x.value() - y.value());
    return diag2(desc, g * g, g * g);
  };
  auto r2 = verify_axioms(s, sample, kTol, &squared);
  CHECK(r2.symmetry.passed);
  CHECK_FALSE(r2.triangle.passed);
  CHECK_FALSE(r2.triangle.witness.empty());

  // constant one: d(x,x) != 0
  MetricFn stuck = [&](const Point&, const Point&) {
    return algebra::unit(desc);
  };
  auto r3 = verify_axioms(s, sample, kTol, &stuck);
  CHECK_FALSE(r3.identity.passed);

  // collapses distinct points to zero
  MetricFn collapse = [&](const Point&, const Point&) {
    return algebra::zero(desc);
  };
  auto r4 = verify_axioms(s, sample, kTol, &collapse);
  CHECK_FALSE(r4.identity.passed);
}
