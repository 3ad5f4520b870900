#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "qdual/contour.hpp"

using namespace qdual;

namespace {

using C = std::complex<double>;

IntegrandSpec<C> float_spec(double q, std::vector<double> xs, int r, int d, int l) {
  IntegrandSpec<C> s;
  s.point.n = static_cast<int>(xs.size());
  s.point.guard_depth = d + 1;
  s.point.q = {q, 0.0};
  for (double v : xs) s.point.x.emplace_back(v, 0.0);
  s.r = r;
  s.d = d;
  s.l = l;
  return s;
}

double rel_err(const C& approx, const C& exact) {
  return std::abs(approx - exact) / std::abs(exact);
}

}  // namespace

TEST_CASE("quadrature matches the exact assembly at the reference point") {
  auto s = float_spec(0.3, {0.8, 1.0, 1.2}, 2, 1, 0);
  C exact = assemble_E(s);
  ContourConfig cfg;
  cfg.rho = 1.5;
  cfg.grid = 512;
  CHECK(rel_err(contour_integral_numeric(s, cfg), exact) < 1e-10);

  auto s2 = float_spec(0.3, {0.8, 1.0, 1.2}, 2, 2, 0);
  C exact2 = assemble_E(s2);
  CHECK(rel_err(contour_integral_numeric(s2, cfg), exact2) < 1e-8);
}

TEST_CASE("geometric convergence: doubling the grid gains >= 10x") {
  // poles engineered close to the contour so N = 128 is far from float noise
  for (int d : {1, 2}) {
    auto s = float_spec(0.6, {0.9, 1.24, 1.0}, 2, d, 0);
    C exact = assemble_E(s);
    ContourConfig cfg;  // default rho = geometric mean
    cfg.grid = 128;
    double e128 = rel_err(contour_integral_numeric(s, cfg), exact);
    cfg.grid = 256;
    double e256 = rel_err(contour_integral_numeric(s, cfg), exact);
    cfg.grid = 512;
    double e512 = rel_err(contour_integral_numeric(s, cfg), exact);
    CHECK(e128 > 1e-9);  // above noise, so the ratios are meaningful
    CHECK(e128 / e256 >= 10.0);
    CHECK(e256 / e512 >= 10.0);  // holds until e512 reaches float noise
    CHECK(e512 < 1e-8);
  }
}

TEST_CASE("default rho is the geometric mean of the window walls") {
  auto s = float_spec(0.3, {0.8, 1.0, 1.2}, 2, 1, 0);
  CHECK(default_rho(s) == doctest::Approx(std::sqrt(1.2 * (0.8 / 0.3))));
}

TEST_CASE("configuration guards") {
  auto s = float_spec(0.3, {0.8, 1.0, 1.2}, 2, 1, 0);
  ContourConfig cfg;
  cfg.grid = 100;  // not a power of two
  CHECK_THROWS_AS(contour_integral_numeric(s, cfg), std::invalid_argument);
  cfg.grid = 32;  // too small
  CHECK_THROWS_AS(contour_integral_numeric(s, cfg), std::invalid_argument);
  cfg.grid = 128;
  cfg.rho = 2.9;  // outside (1.2, 0.8/0.3)
  CHECK_THROWS_AS(contour_integral_numeric(s, cfg), std::invalid_argument);
  cfg.rho = 1.1;  // below max|x|
  CHECK_THROWS_AS(contour_integral_numeric(s, cfg), std::invalid_argument);

  auto s4 = float_spec(0.3, {0.8, 1.0, 1.2}, 2, 4, 0);
  ContourConfig ok;
  CHECK_THROWS_AS(contour_integral_numeric(s4, ok), std::invalid_argument);

  auto sq = float_spec(1.2, {0.8, 1.0, 1.2}, 2, 1, 0);
  CHECK_THROWS_AS(contour_integral_numeric(sq, ok), std::invalid_argument);
  CHECK_THROWS_AS(default_rho(sq), std::invalid_argument);
}
