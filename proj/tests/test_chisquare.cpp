#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <random>

#include "trajnet/chisquare.hpp"
#include "trajnet/error.hpp"

using namespace trajnet;

TEST_CASE("closed forms") {
  // dof 2: exp(-x/2)
  for (double x : {0.1, 1.0, 5.0, 30.0}) {
    CHECK(chi_square_sf(x, 2.0) == doctest::Approx(std::exp(-x / 2)).epsilon(1e-13));
  }
  // dof 1: erfc(sqrt(x/2))
  for (double x : {0.01, 0.5, 3.84, 20.0}) {
    CHECK(chi_square_sf(x, 1.0) == doctest::Approx(std::erfc(std::sqrt(x / 2))).epsilon(1e-12));
  }
  CHECK(chi_square_sf(0.0, 4.0) == 1.0);
  CHECK(chi_square_sf(1.0, 0.0) == 0.0);
  CHECK(chi_square_sf(3.841458820694124, 1.0) == doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("incomplete gamma agrees with boost to 1e-10 relative") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> la(-2.0, 3.5);
  std::uniform_real_distribution<double> lx(0.02, 4.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = std::pow(10.0, la(rng));
    const double x = a * lx(rng);
    const double q = boost::math::gamma_q(a, x);
    const double p = boost::math::gamma_p(a, x);
    if (q > 1e-300) CHECK(std::abs(regularized_gamma_q(a, x) - q) <= 1e-10 * q);
    if (p > 1e-300) CHECK(std::abs(regularized_gamma_p(a, x) - p) <= 1e-10 * p);
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(regularized_gamma_q(0.0, 1.0), Error);
  CHECK_THROWS_AS(regularized_gamma_q(1.0, -1.0), Error);
  CHECK_THROWS_AS(chi_square_sf(1.0, -1.0), Error);
}
