#pragma once

#include <cmath>
#include <vector>

#include "algebra.hpp"
#include "numeric.hpp"

namespace testsupport {

inline std::vector<double> random_values(ccvms::numeric::Rng& rng,
                                         std::size_t count, double lo,
                                         double hi) {
  std::vector<double> v(count);
  for (double& x : v) x = rng.uniform(lo, hi);
  return v;
}

inline std::vector<double> random_symmetric(ccvms::numeric::Rng& rng, int n,
                                            double lo, double hi) {
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double x = rng.uniform(lo, hi);
      v[static_cast<std::size_t>(i) * n + j] = x;
      v[static_cast<std::size_t>(j) * n + i] = x;
    }
  return v;
}

inline ccvms::algebra::Element random_element(ccvms::numeric::Rng& rng,
                                              const ccvms::algebra::Descriptor& desc,
                                              double lo = -5.0, double hi = 5.0) {
  using namespace ccvms::algebra;
  if (desc.kind == Kind::MatLoewner)
    return Element(desc, random_symmetric(rng, desc.dim, lo, hi));
  return Element(desc, random_values(rng, desc.value_count(), lo, hi));
}

// positive in the instance's own cone: b*b for the Loewner order,
// nonnegative coefficients for the entrywise/componentwise orders
inline ccvms::algebra::Element random_positive(ccvms::numeric::Rng& rng,
                                               const ccvms::algebra::Descriptor& desc,
                                               double lo = -2.0, double hi = 2.0) {
  using namespace ccvms::algebra;
  if (desc.kind == Kind::MatLoewner) {
    Element b(desc, random_values(rng, desc.value_count(), lo, hi));
    return mul(involution(b), b);
  }
  auto v = random_values(rng, desc.value_count(), lo, hi);
  for (double& x : v) x = std::abs(x);
  return Element(desc, std::move(v));
}

}  // namespace testsupport
