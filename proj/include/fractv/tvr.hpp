/// @file tvr.hpp
/// @brief The r-order total variation semi-norm (primal computation and a
///        randomized dual lower-bound estimator), the TV^r loss, and the
///        smoothed ROF energy with its exact discrete gradient.
///
/// Primal value: build the mixed-partial tensor (integer axis derivatives
/// first, the fractional factor outermost), take the pointwise tensor norm,
/// integrate with trapezoid weights.  For non-integer r the tensor has
/// 2^{floor(r)+1} components; for integer r it is the classical gradient
/// tensor with 2^r components.
///
/// Pointwise tensor norm: l^p across the outermost derivative slot, l^1
/// across the inner integer slots.  With this nesting the exponent
/// equivalence N^{1/p-1/q} TV_q <= TV_p <= TV_q holds exactly pointwise for
/// every rank (a flat l^p over all components would break it at rank >= 2).

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fractv/fracnd.hpp"
#include "fractv/grid.hpp"

namespace fractv {

struct TVResult {
    double value = 0.0;
    double r = 0.0;
    double p = 2.0;
    std::string method;  // "primal" | "dual"
    int n = 0;           // cells per axis (max of the two in 2D)
    int trials = 0;      // dual only
    std::uint64_t seed = 0;

    /// {"value":..., "r":..., "p":..., "method":..., "n":..., "trials":..., "seed":...}
    std::string to_json() const;
};

/// Mixed-partial tensor of u at order r (left-sided operators, endpoint copy
/// convention).  Rank floor(r)+1 for fractional r, floor(r) for integer r.
TensorField2D mixed_partial_tensor(const Field2D& u, FracOrder r);

/// Pointwise nested tensor norm at one node (comps indexed as in
/// TensorField2D; for rank 0 this is |u|).
double tensor_node_norm(const TensorField2D& t, int node, LpIndex p);

double tv_primal_value(const Field2D& u, FracOrder r, LpIndex p);
double tv_primal_value(const Signal1D& w, FracOrder r);
TVResult tv_primal(const Field2D& u, FracOrder r, LpIndex p);
TVResult tv_primal(const Signal1D& w, FracOrder r, LpIndex p);

/// Max over `trials` seeded admissible test fields of |<u, div_r phi>|.
/// Deterministic given the seed; trials may run concurrently.
TVResult tv_dual_estimate(const Field2D& u, FracOrder r, LpIndex p, int trials,
                          std::uint64_t seed);
TVResult tv_dual_estimate(const Signal1D& w, FracOrder r, LpIndex p, int trials,
                          std::uint64_t seed);

/// beta0 ||u - v||_L1 + beta1 TV^r_lp(u - v).
double tvr_loss(const Field2D& u, const Field2D& v, FracOrder r, LpIndex p, double beta0,
                double beta1);

/// ||u - u_eta||^2_L2 + alpha TV^r_eps(u), with the pointwise norm smoothed:
/// p = 2: sqrt(|.|^2 + eps^2) - eps; p = 1: componentwise Huber.  Other p are
/// rejected (the descent solver needs a smooth regularizer).
double rof_energy(const Field2D& u, const Field2D& u_eta, double alpha, FracOrder r, LpIndex p,
                  double eps);

/// Energy plus (optionally) its exact discrete gradient.
double rof_energy_grad(const Field2D& u, const Field2D& u_eta, double alpha, FracOrder r,
                       LpIndex p, double eps, Field2D* grad);

}  // namespace fractv
