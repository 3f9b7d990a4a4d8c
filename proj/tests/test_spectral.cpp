#include <cmath>
#include <vector>

#include "doctest.h"
#include "errors.hpp"
#include "numeric.hpp"
#include "spectral.hpp"
#include "support.hpp"

using namespace ccvms;
using spectral::symmetric_eigenvalues;

namespace {
constexpr double kTol = 1e-10;
}

TEST_CASE("diagonal matrices keep their entries, sorted") {
  const std::vector<double> m{2, 0, 0, 6};
  const auto spec = symmetric_eigenvalues(m, 2, kTol);
  REQUIRE(spec.eigenvalues.size() == 2);
  CHECK(spec.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(spec.eigenvalues[1] == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(spec.residual <= 1e-10);
}

TEST_CASE("two by two eigenvalues match the quadratic formula") {
  struct Case {
    std::vector<double> m;
    double lo, hi;
  };
  const Case cases[] = {
      {{2, 1, 1, 2}, 1.0, 3.0},
      {{0, 1, 1, 0}, -1.0, 1.0},
      {{1, -1, -1, 1}, 0.0, 2.0},
      {{5, 0, 0, 5}, 5.0, 5.0},
  };
  for (const auto& c : cases) {
    const auto spec = symmetric_eigenvalues(c.m, 2, kTol);
    CHECK(spec.eigenvalues[0] == doctest::Approx(c.lo).epsilon(1e-10));
    CHECK(spec.eigenvalues[1] == doctest::Approx(c.hi).epsilon(1e-10));
  }
}

TEST_CASE("toeplitz tridiagonal three by three") {
  const std::vector<double> m{2, 1, 0, 1, 2, 1, 0, 1, 2};
  const auto spec = symmetric_eigenvalues(m, 3, kTol);
  const double r2 = std::sqrt(2.0);
  CHECK(spec.eigenvalues[0] == doctest::Approx(2.0 - r2).epsilon(1e-10));
  CHECK(spec.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(spec.eigenvalues[2] == doctest::Approx(2.0 + r2).epsilon(1e-10));
}

TEST_CASE("random symmetric matrices: trace, frobenius, residual, order") {
  numeric::Rng rng(2024);
  for (int iter = 0; iter < 1000; ++iter) {
    const int n = 1 + static_cast<int>(rng.index(5));
    const auto m = testsupport::random_symmetric(rng, n, -10.0, 10.0);
    const auto spec = symmetric_eigenvalues(m, n, kTol);

    double trace = 0.0, fro2 = 0.0;
    for (int i = 0; i < n; ++i) trace += m[i * n + i];
    for (double x : m) fro2 += x * x;

    double sum = 0.0, sum2 = 0.0;
    for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
      sum += spec.eigenvalues[i];
      sum2 += spec.eigenvalues[i] * spec.eigenvalues[i];
      if (i > 0) CHECK(spec.eigenvalues[i] >= spec.eigenvalues[i - 1]);
    }
    const double scale = std::max(1.0, std::sqrt(fro2));
    CHECK(std::abs(sum - trace) <= 1e-8 * scale);
    CHECK(std::abs(sum2 - fro2) <= 1e-7 * scale * scale);
    CHECK(spec.residual <= 1e-8 * scale);
  }
}

TEST_CASE("spectral norm of frozen matrices") {
  CHECK(spectral::spectral_norm(std::vector<double>{0.2, 0, 0, -0.6}, 2) ==
        doctest::Approx(0.6).epsilon(1e-12));
  CHECK(spectral::spectral_norm(std::vector<double>{1, 1, 1, 1}, 2) ==
        doctest::Approx(2.0).epsilon(1e-10));
  // nilpotent upper shift: norm comes from m^T m, not eigenvalues of m
  CHECK(spectral::spectral_norm(std::vector<double>{0, 1, 0, 0}, 2) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("spectral norm agrees with extreme eigenvalue on symmetric input") {
  numeric::Rng rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + static_cast<int>(rng.index(4));
    const auto m = testsupport::random_symmetric(rng, n, -4.0, 4.0);
    const auto spec = symmetric_eigenvalues(m, n, kTol);
    const double extreme = std::max(std::abs(spec.eigenvalues.front()),
                                    std::abs(spec.eigenvalues.back()));
    CHECK(spectral::spectral_norm(m, n) ==
          doctest::Approx(extreme).epsilon(1e-8));
  }
}

TEST_CASE("loewner positivity") {
  const double tol = 1e-9;
  CHECK(spectral::loewner_positive(std::vector<double>{1, -1, -1, 1}, 2, tol));
  CHECK_FALSE(
      spectral::loewner_positive(std::vector<double>{1, 2, 2, 1}, 2, tol));
  CHECK(spectral::loewner_positive(std::vector<double>{0, 0, 0, 0}, 2, tol));
  // asymmetry beyond tol is not positive, no exception
  CHECK_FALSE(
      spectral::loewner_positive(std::vector<double>{1, 0.5, 0, 1}, 2, tol));
  // asymmetry within tol is forgiven
  CHECK(spectral::loewner_positive(std::vector<double>{1, 1e-12, 0, 1}, 2, tol));
}

TEST_CASE("input contract violations") {
  const std::vector<double> bad{1, 2, 3};
  CHECK_THROWS_AS(symmetric_eigenvalues(bad, 2, kTol), ContractError);
  const std::vector<double> asym{1, 2, 0, 1};
  CHECK_THROWS_AS(symmetric_eigenvalues(asym, 2, kTol), ContractError);
  const std::vector<double> ok{1, 0, 0, 1};
  CHECK_THROWS_AS(symmetric_eigenvalues(ok, 2, 0.0), ContractError);
  CHECK_THROWS_AS(spectral::spectral_norm(bad, 2), ContractError);
}

TEST_CASE("large magnitude entries still converge") {
  // entries on the scale of exp(10)^2; target must track the matrix scale
  const double big = 4.85e8;
  const std::vector<double> m{big, 0.5 * big, 0.5 * big, big};
  const auto spec = symmetric_eigenvalues(m, 2, 1e-12);
  CHECK(spec.eigenvalues[0] == doctest::Approx(0.5 * big).epsilon(1e-10));
  CHECK(spec.eigenvalues[1] == doctest::Approx(1.5 * big).epsilon(1e-10));
}
