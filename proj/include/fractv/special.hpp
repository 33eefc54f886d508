/// @file special.hpp
/// @brief Gamma function via the Lanczos approximation (g = 7, 9 coefficients)
///        with Euler's reflection formula for arguments below 1/2.

#pragma once

namespace fractv {

/// Gamma(x).  Relative error below 1e-12 on (0, 50].  Throws
/// std::invalid_argument at the poles x = 0, -1, -2, ...
double gamma_fn(double x);

/// log |Gamma(x)| for x > 0; used where Gamma itself would overflow.
double log_gamma(double x);

}  // namespace fractv
