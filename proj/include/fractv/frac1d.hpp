/// @file frac1d.hpp
/// @brief One-dimensional fractional integrals and derivatives on the unit
///        interval via Grunwald-Letnikov discretizations.
///
/// All operators act on the zero extension of the input outside (0,1): the
/// left-sided GL sum (d^r w)_i = h^{-r} sum_{j<=i} g_j w_{i-j} never reaches
/// past the x = 0 end.  Discretely the operators are lower-triangular Toeplitz
/// maps (upper-triangular for the right side), so exact transposes are cheap.
///
/// Endpoint convention: the continuum derivative is undefined at the closed
/// endpoint of its own side; frac_derivative_rl copies the nearest interior
/// node there (node 0 for left, node n for right).  The raw_* entry points
/// skip that copy and are the building blocks for exact-adjoint pairings.

#pragma once

#include "fractv/grid.hpp"

namespace fractv {

enum class Side { left, right };

/// Order-r fractional integral, first-order accurate for continuous inputs.
/// Requires r > 0 (order-0 would be the identity; negative orders are
/// derivatives).  Weights are non-negative, so non-negativity is preserved.
Signal1D frac_integral(const Signal1D& w, double r, Side side);

/// Riemann-Liouville derivative of order r >= 0 (GL discretization, with the
/// endpoint copy convention).  Reduces to backward/forward differences at
/// integer orders.
Signal1D frac_derivative_rl(const Signal1D& w, FracOrder r, Side side);

/// Caputo derivative: applies the R-L derivative to w minus the degree-
/// floor(r) Taylor polynomial at the side's base endpoint.  Endpoint
/// derivatives are estimated with one-sided finite differences, O(h) overall.
Signal1D frac_derivative_caputo(const Signal1D& w, FracOrder r, Side side);

/// Revised left-sided derivative of order s in (0,1): the R-L derivative of
/// w - w(0), which removes the x^{-s} boundary singularity for w(0) != 0.
Signal1D frac_derivative_revised(const Signal1D& w, double s);

/// Exact transpose of the discrete frac_derivative_rl operator of the given
/// order and side (endpoint copy row included), so that
///   dot(frac_derivative_rl(w), v) == dot(w, adjoint_apply(v))
/// holds to rounding for the plain node-wise dot product.
Signal1D adjoint_apply(const Signal1D& v, FracOrder r, Side side);

/// w(1 - x): values reversed on the same grid.
Signal1D reflect(const Signal1D& w);

namespace detail {

/// y_i = scale * sum_{j=0..i} g_j x_{i-j}; x and y may not alias.
void toeplitz_lower(const double* x, double* y, const double* g, int num, double scale);

/// y_i = scale * sum_{j=0..num-1-i} g_j x_{i+j}; exact transpose of the above.
void toeplitz_upper(const double* x, double* y, const double* g, int num, double scale);

/// GL derivative line kernel without the endpoint copy.
void gl_derivative_line_raw(const double* x, double* y, int num, double h, double r, Side side);

/// GL derivative line kernel with the endpoint copy row.
void gl_derivative_line(const double* x, double* y, int num, double h, double r, Side side);

/// Transpose of gl_derivative_line (copy row folded in).
void gl_derivative_line_transpose(const double* x, double* y, int num, double h, double r,
                                  Side side);

Signal1D frac_derivative_rl_raw(const Signal1D& w, FracOrder r, Side side);

}  // namespace detail

}  // namespace fractv
