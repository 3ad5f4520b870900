/**
 * @file contour.hpp
 * @brief Complex-float contour quadrature of the integrand f over d copies of
 *        the circle |w| = rho, cross-checking the exact residue assembly.
 *
 * Equispaced trapezoid on a circle converges geometrically for integrands
 * analytic in an annulus around the contour, which the rho window guarantees.
 */
#pragma once

#include <complex>

#include "qdual/residue.hpp"

namespace qdual {

struct ContourConfig {
  double rho = 0.0;  // 0 means "use default_rho"
  int grid = 512;    // N, a power of two >= 64; cost grows as N^d
};

/// Geometric mean of the two window walls max|x_i| and min|x_i|/|q|;
/// maximizes distance to both pole families.
double default_rho(const IntegrandSpec<std::complex<double>>& spec);

/// Nested trapezoid approximation of E_d; requires |q| < 1, the rho window
/// max|x| < rho < min|x|/|q|, and d <= 3 (cost N^d).
std::complex<double> contour_integral_numeric(
    const IntegrandSpec<std::complex<double>>& spec, const ContourConfig& cfg);

}  // namespace qdual
