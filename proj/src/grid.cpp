#include "fractv/grid.hpp"

#include <algorithm>
#include <limits>

namespace fractv {

Signal1D extend_by_zero(const Signal1D& w, int pad) {
    if (pad < 0) throw std::invalid_argument("extend_by_zero: pad must be >= 0");
    if (pad == 0) return w;
    Grid1D g{w.grid.n + 2 * pad, w.grid.h};
    std::vector<double> v(g.num_nodes(), 0.0);
    std::copy(w.values.begin(), w.values.end(), v.begin() + pad);
    Signal1D out;
    out.grid = g;
    out.values = std::move(v);
    return out;
}

Signal1D translate(const Signal1D& w, int k) {
    const int n = w.grid.n;
    if (std::abs(k) > n) throw std::invalid_argument("translate: |k| exceeds grid size");
    Signal1D out = w;
    for (int i = 0; i <= n; ++i) {
        const int j = i - k;
        out.values[i] = (j >= 0 && j <= n) ? w.values[j] : 0.0;
    }
    return out;
}

double lp_norm(const std::vector<double>& v, LpIndex p) {
    if (p.is_inf()) {
        double m = 0.0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    }
    if (p.p == 1.0) {
        double s = 0.0;
        for (double x : v) s += std::abs(x);
        return s;
    }
    if (p.p == 2.0) {
        double s = 0.0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    }
    double s = 0.0;
    for (double x : v) s += std::pow(std::abs(x), p.p);
    return std::pow(s, 1.0 / p.p);
}

double trapezoid_weight(const Grid1D& g, int i) {
    return (i == 0 || i == g.n) ? 0.5 * g.h : g.h;
}

double trapezoid_weight(const Grid2D& g, int ix, int iy) {
    const double wx = (ix == 0 || ix == g.nx) ? 0.5 * g.hx : g.hx;
    const double wy = (iy == 0 || iy == g.ny) ? 0.5 * g.hy : g.hy;
    return wx * wy;
}

double l1_integral(const Signal1D& w) {
    double s = 0.0;
    for (int i = 0; i <= w.grid.n; ++i) s += trapezoid_weight(w.grid, i) * std::abs(w.values[i]);
    return s;
}

double l1_integral(const Field2D& u) {
    double s = 0.0;
    for (int iy = 0; iy <= u.grid.ny; ++iy)
        for (int ix = 0; ix <= u.grid.nx; ++ix)
            s += trapezoid_weight(u.grid, ix, iy) * std::abs(u.at(ix, iy));
    return s;
}

double boundary_sup(const Field2D& u) {
    double m = 0.0;
    const int nx = u.grid.nx, ny = u.grid.ny;
    for (int ix = 0; ix <= nx; ++ix) {
        m = std::max(m, std::abs(u.at(ix, 0)));
        m = std::max(m, std::abs(u.at(ix, ny)));
    }
    for (int iy = 0; iy <= ny; ++iy) {
        m = std::max(m, std::abs(u.at(0, iy)));
        m = std::max(m, std::abs(u.at(nx, iy)));
    }
    return m;
}

void require_finite(const Signal1D& w, const std::string& what) {
    for (double x : w.values)
        if (!std::isfinite(x)) throw std::invalid_argument(what + ": non-finite value");
}

void require_finite(const Field2D& u, const std::string& what) {
    for (double x : u.values)
        if (!std::isfinite(x)) throw std::invalid_argument(what + ": non-finite value");
}

}  // namespace fractv
