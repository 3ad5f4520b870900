#include "qdual/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace qdual {

namespace {

struct Window {
  double lo;  // max |x_i|
  double hi;  // min |x_i| / |q|
};

Window rho_window(const IntegrandSpec<std::complex<double>>& spec) {
  double maxx = 0.0, minx = std::numeric_limits<double>::infinity();
  for (const auto& xi : spec.point.x) {
    maxx = std::max(maxx, std::abs(xi));
    minx = std::min(minx, std::abs(xi));
  }
  double aq = std::abs(spec.point.q);
  if (aq <= 0.0 || aq >= 1.0)
    throw std::invalid_argument("contour: requires 0 < |q| < 1");
  Window w{maxx, minx / aq};
  if (!(w.lo < w.hi))
    throw std::invalid_argument("contour: empty rho window (max|x| >= min|x|/|q|)");
  return w;
}

}  // namespace

double default_rho(const IntegrandSpec<std::complex<double>>& spec) {
  Window w = rho_window(spec);
  return std::sqrt(w.lo * w.hi);
}

std::complex<double> contour_integral_numeric(
    const IntegrandSpec<std::complex<double>>& spec, const ContourConfig& cfg) {
  validate_spec(spec);
  if (spec.d < 1 || spec.d > 3)
    throw std::invalid_argument("contour: d must be in [1,3] (cost N^d)");
  const int N = cfg.grid;
  if (N < 64 || (N & (N - 1)) != 0)
    throw std::invalid_argument("contour: grid must be a power of two >= 64");
  Window win = rho_window(spec);
  const double rho = cfg.rho > 0.0 ? cfg.rho : default_rho(spec);
  if (!(win.lo < rho && rho < win.hi))
    throw std::invalid_argument("contour: rho outside the window max|x| < rho < min|x|/|q|");

  std::vector<std::complex<double>> node(static_cast<size_t>(N));
  for (int k = 0; k < N; ++k) {
    double th = 2.0 * std::numbers::pi * k / N;
    node[static_cast<size_t>(k)] = std::polar(rho, th);
  }

  // dw/(2*pi*i) = w dtheta/(2*pi), so each variable contributes mean_k w_k f.
  std::complex<double> sum = 0.0;
  std::vector<std::complex<double>> w(static_cast<size_t>(spec.d));
  if (spec.d == 1) {
    for (int a = 0; a < N; ++a) {
      w[0] = node[static_cast<size_t>(a)];
      sum += integrand_f<std::complex<double>>(spec, w) * w[0];
    }
  } else if (spec.d == 2) {
    for (int a = 0; a < N; ++a) {
      w[0] = node[static_cast<size_t>(a)];
      for (int b = 0; b < N; ++b) {
        w[1] = node[static_cast<size_t>(b)];
        if (w[0] == w[1]) continue;  // f vanishes on the diagonal
        sum += integrand_f<std::complex<double>>(spec, w) * w[0] * w[1];
      }
    }
  } else {
    for (int a = 0; a < N; ++a) {
      w[0] = node[static_cast<size_t>(a)];
      for (int b = 0; b < N; ++b) {
        w[1] = node[static_cast<size_t>(b)];
        if (w[0] == w[1]) continue;
        for (int c = 0; c < N; ++c) {
          w[2] = node[static_cast<size_t>(c)];
          if (w[2] == w[0] || w[2] == w[1]) continue;
          sum += integrand_f<std::complex<double>>(spec, w) * w[0] * w[1] * w[2];
        }
      }
    }
  }
  double cells = std::pow(static_cast<double>(N), spec.d);
  return sum / cells;
}

}  // namespace qdual
