/// @file gl_weights.hpp
/// @brief Grunwald-Letnikov weight sequences for fractional derivatives and
///        integrals, with a process-wide read-mostly cache.
///
/// Derivative weights: g_j = (-1)^j binom(r, j), generated by the stable
/// recurrence g_0 = 1, g_j = g_{j-1} (1 - (r+1)/j).
/// Integral weights:   c_j = (-1)^j binom(-r, j) >= 0 for r > 0, generated by
/// c_0 = 1, c_j = c_{j-1} (1 + (r-1)/j).

#pragma once

#include <memory>
#include <vector>

namespace fractv {

enum class GLKind { derivative, integral };

struct GLWeights {
    double order = 0.0;
    GLKind kind = GLKind::derivative;
    std::vector<double> w;  // w[0..m]

    int m() const { return static_cast<int>(w.size()) - 1; }
};

/// Weights g_0..g_m for the order-r GL derivative.  Requires r >= 0, m >= 0.
GLWeights gl_derivative_weights(double r, int m);

/// Weights c_0..c_m for the order-r GL integral.  Requires r > 0, m >= 0.
GLWeights gl_integral_weights(double r, int m);

/// Cached lookup; safe for concurrent readers, extends tables on demand.
/// Returns shared ownership of a table of length at least m+1.
std::shared_ptr<const std::vector<double>> gl_weights_cached(GLKind kind, double r, int m);

}  // namespace fractv
