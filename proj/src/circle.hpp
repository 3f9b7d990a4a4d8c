#pragma once

#include <string>
#include <vector>

#include "algebra.hpp"
#include "space.hpp"

namespace ccvms::circle {

enum class Membership { ExplicitFinite, ComplementOfFinite, Sampled };

std::string membership_name(Membership m);

// C = {x : d(x, center) = radius}. points holds the members for
// ExplicitFinite/Sampled and the excluded points for ComplementOfFinite.
struct Circle {
  space::Point center;
  algebra::Element radius;
  Membership membership = Membership::ExplicitFinite;
  std::vector<space::Point> points;

  bool empty() const {
    return membership == Membership::ExplicitFinite && points.empty();
  }
  std::string describe() const;
};

Circle solve_circle(const space::Instance& s, const space::Point& center,
                    const algebra::Element& radius, double tol = 1e-9);

bool on_circle(const space::Instance& s, const Circle& c,
               const space::Point& x, double tol);

// The members a checker iterates: the explicit list, or for a
// complement-of-finite circle the on-circle part of the given sample.
std::vector<space::Point> members_for_check(const space::Instance& s,
                                            const Circle& c,
                                            const std::vector<space::Point>& sample,
                                            double tol);

}  // namespace ccvms::circle
