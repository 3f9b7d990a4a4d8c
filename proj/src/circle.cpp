#include "circle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "numeric.hpp"

namespace ccvms::circle {

namespace {

using algebra::Element;
using space::Instance;
using space::Point;
using space::SpaceKind;

void require_radius_shape(const Instance& s, const Element& radius) {
  if (!(radius.descriptor() == s.algebra_desc))
    throw ShapeError("solve_circle: radius lives in " +
                     radius.descriptor().label() + " but " + s.label() +
                     " measures in " + s.algebra_desc.label());
}

// diag(c, alpha*c) shape test for the matrix-valued real-line metrics;
// returns c via out parameter
bool diag_shape(const Element& radius, double alpha, double tol, double& c) {
  if (std::abs(radius.entry(0, 1)) > tol || std::abs(radius.entry(1, 0)) > tol)
    return false;
  c = radius.entry(0, 0);
  const double scale = std::max(1.0, std::abs(alpha));
  return std::abs(radius.entry(1, 1) - alpha * c) <= tol * scale;
}

void require_positive_scalar(double c, double tol, const Element& radius) {
  if (c < -tol)
    throw ContractError("solve_circle: radius " + radius.describe() +
                        " is not positive");
}

Circle explicit_circle(Point center, Element radius, std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  return Circle{std::move(center), std::move(radius),
                Membership::ExplicitFinite, std::move(pts)};
}

}  // namespace

std::string membership_name(Membership m) {
  switch (m) {
    case Membership::ExplicitFinite: return "explicit";
    case Membership::ComplementOfFinite: return "complement";
    case Membership::Sampled: return "sampled";
  }
  return "unknown";
}

std::string Circle::describe() const {
  if (membership == Membership::ComplementOfFinite) {
    std::string out = "complement of {";
    for (std::size_t i = 0; i < points.size(); ++i) {
      out += points[i].describe();
      if (i + 1 < points.size()) out += ", ";
    }
    return out + "}";
  }
  if (points.empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    out += points[i].describe();
    if (i + 1 < points.size()) out += ", ";
  }
  return out + "}";
}

Circle solve_circle(const space::Instance& s, const space::Point& center,
                    const algebra::Element& radius, double tol) {
  if (!s.contains(center))
    throw DomainError("solve_circle: center " + center.describe() +
                      " is outside " + s.label());
  require_radius_shape(s, radius);

  switch (s.kind) {
    case SpaceKind::RealLineDiag: {
      double c = 0.0;
      if (!diag_shape(radius, s.alpha, tol, c))
        return explicit_circle(center, radius, {});
      require_positive_scalar(c, tol, radius);
      if (c <= tol) return explicit_circle(center, radius, {center});
      return explicit_circle(center, radius,
                             {Point::scalar(center.value() - c),
                              Point::scalar(center.value() + c)});
    }
    case SpaceKind::RealLineExpDiag: {
      double c = 0.0;
      if (!diag_shape(radius, s.alpha, tol, c))
        return explicit_circle(center, radius, {});
      require_positive_scalar(c, tol, radius);
      if (c <= tol) return explicit_circle(center, radius, {center});
      const double base = std::exp(center.value());
      std::vector<Point> pts{Point::scalar(std::log(base + c))};
      if (base - c > 0.0) pts.push_back(Point::scalar(std::log(base - c)));
      return explicit_circle(center, radius, std::move(pts));
    }
    case SpaceKind::RealLineDiscrete: {
      double c = 0.0;
      // the metric's range is {0, identity}: scalar diagonal shape
      if (!diag_shape(radius, 1.0, tol, c))
        return explicit_circle(center, radius, {});
      require_positive_scalar(c, tol, radius);
      if (c <= tol) return explicit_circle(center, radius, {center});
      if (std::abs(c - 1.0) <= tol)
        return Circle{center, radius, Membership::ComplementOfFinite, {center}};
      return explicit_circle(center, radius, {});
    }
    case SpaceKind::SquareTuple: {
      const double r1 = radius.component(0);
      const double r2 = radius.component(1);
      if (r1 < -tol || r2 < -tol)
        throw ContractError("solve_circle: radius " + radius.describe() +
                            " is not positive");
      const double c1 = center.coords()[0];
      const double c2 = center.coords()[1];
      std::vector<double> xs{r1 > tol ? c1 - r1 : c1};
      if (r1 > tol) xs.push_back(c1 + r1);
      std::vector<double> ys{r2 > tol ? c2 - r2 : c2};
      if (r2 > tol) ys.push_back(c2 + r2);
      std::vector<Point> pts;
      for (double x : xs)
        for (double y : ys) {
          Point p = Point::pair(x, y);
          if (s.contains(p)) pts.push_back(p);
        }
      return explicit_circle(center, radius, std::move(pts));
    }
    case SpaceKind::StepFn: {
      if (s.pieces > 20)
        throw ContractError("solve_circle: " + std::to_string(s.pieces) +
                            " pieces produce too many sign choices");
      for (int i = 0; i < s.pieces; ++i)
        if (radius.component(i) < -tol)
          throw ContractError("solve_circle: radius " + radius.describe() +
                              " is not positive");
      std::vector<Point> pts;
      const int total = 1 << s.pieces;
      for (int mask = 0; mask < total; ++mask) {
        std::vector<double> g(center.coords());
        bool canonical = true;
        for (int i = 0; i < s.pieces; ++i) {
          const double h = radius.component(i);
          if (h <= tol) {
            // zero piece: only the + choice, to avoid duplicate members
            if (mask & (1 << i)) canonical = false;
            continue;
          }
          g[static_cast<std::size_t>(i)] += (mask & (1 << i)) ? -h : h;
        }
        if (canonical) pts.emplace_back(std::move(g));
      }
      return explicit_circle(center, radius, std::move(pts));
    }
  }
  throw ContractError("solve_circle: unknown space kind");
}

bool on_circle(const space::Instance& s, const Circle& c,
               const space::Point& x, double tol) {
  if (!s.contains(x)) return false;
  return algebra::compare(s.distance(x, c.center), c.radius, tol).relation ==
         algebra::Relation::Equal;
}

std::vector<space::Point> members_for_check(
    const space::Instance& s, const Circle& c,
    const std::vector<space::Point>& sample, double tol) {
  if (c.membership != Membership::ComplementOfFinite) return c.points;
  std::vector<space::Point> out;
  for (const auto& p : sample)
    if (on_circle(s, c, p, tol)) out.push_back(p);
  return out;
}

}  // namespace ccvms::circle
