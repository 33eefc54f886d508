#include "fractv/frac1d.hpp"

#include <algorithm>
#include <cmath>

#include "fractv/gl_weights.hpp"

namespace fractv {

namespace detail {

void toeplitz_lower(const double* x, double* y, const double* g, int num, double scale) {
    for (int i = 0; i < num; ++i) {
        double acc = 0.0;
        for (int j = 0; j <= i; ++j) acc += g[j] * x[i - j];
        y[i] = scale * acc;
    }
}

void toeplitz_upper(const double* x, double* y, const double* g, int num, double scale) {
    for (int i = 0; i < num; ++i) {
        double acc = 0.0;
        for (int j = 0; j < num - i; ++j) acc += g[j] * x[i + j];
        y[i] = scale * acc;
    }
}

void gl_derivative_line_raw(const double* x, double* y, int num, double h, double r, Side side) {
    const auto g = gl_weights_cached(GLKind::derivative, r, num - 1);
    const double scale = std::pow(h, -r);
    if (side == Side::left)
        toeplitz_lower(x, y, g->data(), num, scale);
    else
        toeplitz_upper(x, y, g->data(), num, scale);
}

void gl_derivative_line(const double* x, double* y, int num, double h, double r, Side side) {
    gl_derivative_line_raw(x, y, num, h, r, side);
    if (side == Side::left)
        y[0] = y[1];
    else
        y[num - 1] = y[num - 2];
}

void gl_derivative_line_transpose(const double* x, double* y, int num, double h, double r,
                                  Side side) {
    // Operator = C * T with T the raw Toeplitz map and C the copy-row matrix;
    // transpose = T^t * C^t, and C^t folds the copied node into its source.
    std::vector<double> v(x, x + num);
    if (side == Side::left) {
        v[1] += v[0];
        v[0] = 0.0;
    } else {
        v[num - 2] += v[num - 1];
        v[num - 1] = 0.0;
    }
    const auto g = gl_weights_cached(GLKind::derivative, r, num - 1);
    const double scale = std::pow(h, -r);
    if (side == Side::left)
        toeplitz_upper(v.data(), y, g->data(), num, scale);  // transpose of lower
    else
        toeplitz_lower(v.data(), y, g->data(), num, scale);
}

Signal1D frac_derivative_rl_raw(const Signal1D& w, FracOrder r, Side side) {
    Signal1D out = w;
    gl_derivative_line_raw(w.values.data(), out.values.data(), w.num_nodes(), w.grid.h, r.r, side);
    return out;
}

}  // namespace detail

Signal1D reflect(const Signal1D& w) {
    Signal1D out = w;
    std::reverse(out.values.begin(), out.values.end());
    return out;
}

Signal1D frac_integral(const Signal1D& w, double r, Side side) {
    if (!(r > 0.0))
        throw std::invalid_argument("frac_integral: need r > 0 (use frac_derivative for r <= 0)");
    const int num = w.num_nodes();
    const auto c = gl_weights_cached(GLKind::integral, r, num - 1);
    const double scale = std::pow(w.grid.h, r);
    Signal1D out = w;
    if (side == Side::left)
        detail::toeplitz_lower(w.values.data(), out.values.data(), c->data(), num, scale);
    else
        detail::toeplitz_upper(w.values.data(), out.values.data(), c->data(), num, scale);
    return out;
}

Signal1D frac_derivative_rl(const Signal1D& w, FracOrder r, Side side) {
    require_finite(w, "frac_derivative_rl");
    Signal1D out = w;
    detail::gl_derivative_line(w.values.data(), out.values.data(), w.num_nodes(), w.grid.h, r.r,
                               side);
    return out;
}

Signal1D frac_derivative_caputo(const Signal1D& w, FracOrder r, Side side) {
    if (side == Side::right) return reflect(frac_derivative_caputo(reflect(w), r, Side::left));
    const int n = w.grid.n;
    const double h = w.grid.h;
    const int degree = std::min(r.floor_part, n);

    // forward-difference estimates of w^(k)(0), k = 0..degree
    std::vector<double> diffs(w.values.begin(), w.values.begin() + degree + 1);
    std::vector<double> deriv(degree + 1);
    deriv[0] = diffs[0];
    for (int k = 1; k <= degree; ++k) {
        for (int i = 0; i <= degree - k; ++i) diffs[i] = diffs[i + 1] - diffs[i];
        deriv[k] = diffs[0] / std::pow(h, k);
    }

    Signal1D v = w;
    for (int i = 0; i <= n; ++i) {
        const double x = w.grid.node(i);
        double p = 0.0, fact = 1.0, xk = 1.0;
        for (int k = 0; k <= degree; ++k) {
            if (k > 0) {
                fact *= k;
                xk *= x;
            }
            p += deriv[k] * xk / fact;
        }
        v.values[i] -= p;
    }
    return frac_derivative_rl(v, r, Side::left);
}

Signal1D frac_derivative_revised(const Signal1D& w, double s) {
    if (!(s > 0.0 && s < 1.0))
        throw std::invalid_argument("frac_derivative_revised: need s in (0,1)");
    Signal1D v = w;
    const double w0 = w.values.front();
    for (double& x : v.values) x -= w0;
    return frac_derivative_rl(v, FracOrder(s), Side::left);
}

Signal1D adjoint_apply(const Signal1D& v, FracOrder r, Side side) {
    Signal1D out = v;
    detail::gl_derivative_line_transpose(v.values.data(), out.values.data(), v.num_nodes(),
                                         v.grid.h, r.r, side);
    return out;
}

}  // namespace fractv
