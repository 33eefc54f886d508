/// @file fracnd.hpp
/// @brief Axis-wise fractional partial derivatives on 2D fields, the
///        fractional gradient, the scaled fractional divergence, and the
///        composite divergence used by the dual total-variation pairing.
///
/// Primal-side operators (partial_frac, frac_gradient) are left-sided GL
/// sweeps along grid lines.  Test-side operators inside frac_divergence and
/// div_r are the exact negative transposes of the raw left-sided sweeps, so
/// discrete integration by parts
///     sum_m u_m (div^s phi)_m = -sum_m scale * (grad^s u)_m . phi_m
/// holds to rounding.  At s = 1 the test-side partial is the forward
/// difference and div^1 is the classical divergence.

#pragma once

#include "fractv/frac1d.hpp"
#include "fractv/grid.hpp"

namespace fractv {

/// [(1 - 1/N) s + 1/N] with N = 2: interpolates between averaging (s = 0)
/// and the classical divergence (s = 1).
inline double divergence_scale(double s) { return 0.5 * (s + 1.0); }

/// Left/right-sided GL partial derivative along axis 1 or 2 (endpoint copy
/// convention on each line).  Lines are independent sweeps.
Field2D partial_frac(const Field2D& u, int axis, FracOrder r, Side side);

/// (d^s_1 u, d^s_2 u) built from raw (no endpoint copy) sweeps; the exact
/// dual counterpart of frac_divergence.
VectorField2D frac_gradient(const Field2D& u, double s, Side side = Side::left);

/// Scaled fractional divergence of a test field, s in [0,1].
Field2D frac_divergence(const VectorField2D& phi, double s);

/// div^s applied after floor(r) integer divergences; the input tensor must
/// have rank floor(r)+1 (2^{floor(r)+1} components).  Contraction consumes
/// the least significant index digit first.
Field2D div_r(const TensorField2D& phi, FracOrder r);

namespace detail {

/// Raw left/right GL partial (no endpoint copy).
Field2D partial_raw(const Field2D& u, int axis, double r, Side side);

/// Negative exact transpose of the raw left partial; building block of the
/// test-side divergences.
Field2D partial_test_side(const Field2D& u, int axis, double r);

/// Exact transpose of partial_frac (copy row folded in); used by gradients
/// of energies assembled from partial_frac.
Field2D partial_transpose(const Field2D& u, int axis, double r, Side side);

}  // namespace detail

}  // namespace fractv
