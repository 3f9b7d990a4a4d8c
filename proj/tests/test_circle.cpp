#include <algorithm>
#include <cmath>
#include <vector>

#include "algebra.hpp"
#include "circle.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "space.hpp"

using namespace ccvms;
using namespace ccvms::space;
using namespace ccvms::circle;

namespace {
const double kTol = 1e-9;

algebra::Element diag2(const algebra::Descriptor& desc, double a, double b) {
  const double entries[] = {a, b};
  return algebra::diagonal(desc, entries);
}

std::vector<double> sorted_scalars(const Circle& c) {
  std::vector<double> out;
  for (const auto& p : c.points) out.push_back(p.value());
  std::sort(out.begin(), out.end());
  return out;
}

// Solver-independent oracle for the scalar-point spaces: scan a dense grid
// for local minima of x -> norm(d(x, center) - r) and refine each candidate
// by ternary search. Zeros of that gap are exactly the members.
std::vector<double> brute_members(const Instance& s, const Point& center,
                                  const algebra::Element& radius) {
  auto gap = [&](double x) {
    return algebra::norm(algebra::sub(s.distance(Point::scalar(x), center), radius));
  };
  const int n = 100000;
  const double step = (s.hi - s.lo) / n;
  std::vector<double> values(n + 1);
  for (int i = 0; i <= n; ++i) values[i] = gap(s.lo + step * i);

  std::vector<double> roots;
  for (int i = 1; i < n; ++i) {
    if (values[i] > values[i - 1] || values[i] > values[i + 1]) continue;
    if (values[i] > 0.1) continue;
    double lo = s.lo + step * (i - 1), hi = s.lo + step * (i + 1);
    for (int it = 0; it < 200; ++it) {
      const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      if (gap(m1) < gap(m2))
        hi = m2;
      else
        lo = m1;
    }
    const double x = 0.5 * (lo + hi);
    if (gap(x) > 1e-6) continue;
    if (!roots.empty() && std::abs(roots.back() - x) < 1e-6) continue;
    roots.push_back(x);
  }
  return roots;
}

void check_against_brute(const Instance& s, const Point& center,
                         const algebra::Element& radius) {
  auto circle = solve_circle(s, center, radius);
  REQUIRE(circle.membership == Membership::ExplicitFinite);
  auto expect = brute_members(s, center, radius);
  auto got = sorted_scalars(circle);
  REQUIRE(got.size() == expect.size());
  for (std::size_t i = 0; i < got.size(); ++i)
    CHECK(std::abs(got[i] - expect[i]) <= 1e-6);
}
}  // namespace

TEST_CASE("diagonal radius on the weighted line") {
  auto s = Instance::real_line_diag(3.0);
  auto desc = s.algebra_desc;

  auto c = solve_circle(s, Point::scalar(0.0), diag2(desc, 2.0, 6.0));
  CHECK(c.membership == Membership::ExplicitFinite);
  CHECK(sorted_scalars(c) == std::vector<double>{-2.0, 2.0});
  CHECK(on_circle(s, c, Point::scalar(2.0), kTol));
  CHECK(on_circle(s, c, Point::scalar(-2.0), kTol));
  CHECK_FALSE(on_circle(s, c, Point::scalar(0.0), kTol));
  CHECK_FALSE(c.empty());

  // radius entries that disagree with the metric's range leave no solutions
  auto mismatch = algebra::Element(desc, {2.0, 0.0, -1.0, 5.0});
  CHECK(solve_circle(s, Point::scalar(0.0), mismatch).empty());
  CHECK(solve_circle(s, Point::scalar(0.0), diag2(desc, 2.0, 5.0)).empty());

  auto degenerate = solve_circle(s, Point::scalar(4.0), algebra::zero(desc));
  CHECK(sorted_scalars(degenerate) == std::vector<double>{4.0});

  CHECK_THROWS_AS(solve_circle(s, Point::scalar(0.0), diag2(desc, -2.0, -6.0)),
                  ContractError);
  CHECK_THROWS_AS(
      solve_circle(s, Point::scalar(0.0),
                   algebra::unit(algebra::Descriptor::tuple(2))),
      ShapeError);
}

TEST_CASE("exponential line keeps only positive bases") {
  auto s = Instance::real_line_exp_diag(2.0);
  auto desc = s.algebra_desc;
  const double e1 = std::exp(1.0);

  auto one = solve_circle(s, Point::scalar(1.0), diag2(desc, 2.0 * e1, 4.0 * e1));
  REQUIRE(sorted_scalars(one).size() == 1);
  CHECK(std::abs(sorted_scalars(one)[0] - (1.0 + std::log(3.0))) <= kTol);

  auto two = solve_circle(s, Point::scalar(1.0), diag2(desc, e1 / 2.0, e1));
  auto xs = sorted_scalars(two);
  REQUIRE(xs.size() == 2);
  CHECK(std::abs(xs[0] - (1.0 - std::log(2.0))) <= kTol);
  CHECK(std::abs(xs[1] - (1.0 + std::log(3.0) - std::log(2.0))) <= kTol);

  CHECK(sorted_scalars(solve_circle(s, Point::scalar(0.5), algebra::zero(desc))) ==
        std::vector<double>{0.5});
  CHECK(solve_circle(s, Point::scalar(1.0), diag2(desc, 1.0, 3.0)).empty());
}

TEST_CASE("discrete line yields point, complement, or nothing") {
  auto s = Instance::real_line_discrete();
  auto desc = s.algebra_desc;

  auto unit = solve_circle(s, Point::scalar(3.0), algebra::unit(desc));
  CHECK(unit.membership == Membership::ComplementOfFinite);
  REQUIRE(unit.points.size() == 1);
  CHECK(unit.points[0] == Point::scalar(3.0));
  CHECK_FALSE(unit.empty());
  CHECK(on_circle(s, unit, Point::scalar(-7.25), kTol));
  CHECK_FALSE(on_circle(s, unit, Point::scalar(3.0), kTol));

  auto zero = solve_circle(s, Point::scalar(3.0), algebra::zero(desc));
  CHECK(zero.membership == Membership::ExplicitFinite);
  CHECK(sorted_scalars(zero) == std::vector<double>{3.0});

  CHECK(solve_circle(s, Point::scalar(3.0), diag2(desc, 0.5, 0.5)).empty());
  CHECK(solve_circle(s, Point::scalar(3.0), diag2(desc, 1.0, 2.0)).empty());
}

TEST_CASE("square circles depend on the ambient flag") {
  auto radius = algebra::Element(algebra::Descriptor::tuple(2), {1.0, 1.0});
  Point center = Point::pair(-0.5, 0.0);

  auto wide = solve_circle(Instance::square_tuple(true), center, radius);
  auto pts = wide.points;
  std::sort(pts.begin(), pts.end());
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == Point::pair(-1.5, -1.0));
  CHECK(pts[1] == Point::pair(-1.5, 1.0));
  CHECK(pts[2] == Point::pair(0.5, -1.0));
  CHECK(pts[3] == Point::pair(0.5, 1.0));

  auto narrow = solve_circle(Instance::square_tuple(false), center, radius);
  pts = narrow.points;
  std::sort(pts.begin(), pts.end());
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == Point::pair(0.5, -1.0));
  CHECK(pts[1] == Point::pair(0.5, 1.0));

  // a vanishing component pins that coordinate to the center's exactly
  auto thin = solve_circle(Instance::square_tuple(true), center,
                           algebra::Element(radius.descriptor(), {1.0, 1e-12}));
  pts = thin.points;
  std::sort(pts.begin(), pts.end());
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == Point::pair(-1.5, 0.0));
  CHECK(pts[1] == Point::pair(0.5, 0.0));
  CHECK(pts[0].coords()[1] == 0.0);

  CHECK_THROWS_AS(
      solve_circle(Instance::square_tuple(true), center,
                   algebra::Element(radius.descriptor(), {-1.0, 1.0})),
      ContractError);
}

TEST_CASE("step function circles enumerate sign choices") {
  auto s = Instance::step_fn(4);
  Point center({0.0, 0.0, 1.0, 1.0});

  auto full = solve_circle(s, center,
                           algebra::Element(s.algebra_desc, {1.0, 1.0, 1.0, 1.0}));
  CHECK(full.points.size() == 16);
  for (const auto& p : full.points) {
    CHECK(on_circle(s, full, p, kTol));
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(std::abs(p.coords()[i] - center.coords()[i]) - 1.0) <= kTol);
  }

  auto pinned = solve_circle(s, center,
                             algebra::Element(s.algebra_desc, {1.0, 1.0, 0.0, 1.0}));
  CHECK(pinned.points.size() == 8);
  for (const auto& p : pinned.points) CHECK(p.coords()[2] == 1.0);

  CHECK_THROWS_AS(
      solve_circle(Instance::step_fn(21), Point(std::vector<double>(21, 0.0)),
                   algebra::unit(algebra::Descriptor::step_fn(21))),
      ContractError);
}

TEST_CASE("members_for_check filters samples for complement circles") {
  auto s = Instance::real_line_discrete();
  auto unit = solve_circle(s, Point::scalar(3.0), algebra::unit(s.algebra_desc));
  std::vector<Point> sample = {Point::scalar(3.0), Point::scalar(1.0),
                               Point::scalar(-4.0)};
  auto members = members_for_check(s, unit, sample, kTol);
  REQUIRE(members.size() == 2);
  CHECK(members[0] == Point::scalar(1.0));
  CHECK(members[1] == Point::scalar(-4.0));

  auto sd = Instance::real_line_diag(3.0);
  auto c = solve_circle(sd, Point::scalar(0.0), diag2(sd.algebra_desc, 2.0, 6.0));
  auto direct = members_for_check(sd, c, sample, kTol);
  CHECK(direct.size() == 2);
}

TEST_CASE("solver agrees with a dense grid search") {
  auto diag = Instance::real_line_diag(3.0);
  check_against_brute(diag, Point::scalar(0.0), diag2(diag.algebra_desc, 2.0, 6.0));
  check_against_brute(diag, Point::scalar(0.0),
                      algebra::Element(diag.algebra_desc, {2.0, 0.0, -1.0, 5.0}));
  check_against_brute(diag, Point::scalar(0.0), diag2(diag.algebra_desc, 2.0, 5.0));
  check_against_brute(diag, Point::scalar(4.0), diag2(diag.algebra_desc, 1.5, 4.5));

  auto expd = Instance::real_line_exp_diag(2.0);
  const double e1 = std::exp(1.0);
  check_against_brute(expd, Point::scalar(1.0),
                      diag2(expd.algebra_desc, 2.0 * e1, 4.0 * e1));
  check_against_brute(expd, Point::scalar(1.0),
                      diag2(expd.algebra_desc, e1 / 2.0, e1));
  check_against_brute(expd, Point::scalar(1.0), diag2(expd.algebra_desc, 1.0, 3.0));

  // the discrete line is checked pointwise: everything except the center
  auto disc = Instance::real_line_discrete();
  auto unit = solve_circle(disc, Point::scalar(3.0), algebra::unit(disc.algebra_desc));
  const int n = 100000;
  int on = 0;
  for (int i = 0; i <= n; ++i) {
    const double x = disc.lo + (disc.hi - disc.lo) * i / n;
    if (on_circle(disc, unit, Point::scalar(x), kTol)) ++on;
  }
  CHECK(on == n);  // all grid points except x = 3 exactly
}

TEST_CASE("circle rendering") {
  auto s = Instance::real_line_diag(3.0);
  auto c = solve_circle(s, Point::scalar(0.0), diag2(s.algebra_desc, 2.0, 6.0));
  CHECK(c.describe() == "{-2, 2}");

  auto disc = Instance::real_line_discrete();
  auto comp =
      solve_circle(disc, Point::scalar(3.0), algebra::unit(disc.algebra_desc));
  CHECK(comp.describe() == "complement of {3}");

  CHECK(solve_circle(s, Point::scalar(0.0), diag2(s.algebra_desc, 2.0, 5.0))
            .describe() == "{}");
}
