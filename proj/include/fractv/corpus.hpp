/// @file corpus.hpp
/// @brief Seeded test-signal corpora: mixtures of polynomial bumps, mollifier
///        bumps, trigonometric polynomials, ramps, and mollified steps, all
///        scaled into the image class (sup norm <= 1).

#pragma once

#include <cstdint>
#include <vector>

#include "fractv/grid.hpp"

namespace fractv {

/// Compactly supported mollifier bump exp(1 - 1/(1 - t^2)), t = (x-c)/rho.
double mollifier_bump(double x, double center, double radius);

/// The reference bump used by order-limit and Caputo experiments: support
/// [0.15, 0.85], peak 1 at x = 1/2.
Signal1D reference_bump_1d(int n);

/// Tensor product of the 1D reference bump.
Field2D reference_bump_2d(int n);

/// Seeded 1D corpus.  With smooth_only the hard (piecewise-constant) steps
/// are excluded; all entries have sup norm <= 1.
std::vector<Signal1D> corpus_1d(int n, std::uint64_t seed, int count, bool smooth_only);

/// Seeded 2D image-class corpus (smooth, sup norm <= 1, n x n cells).
std::vector<Field2D> corpus_2d(int n, std::uint64_t seed, int count);

}  // namespace fractv
