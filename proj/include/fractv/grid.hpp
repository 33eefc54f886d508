/// @file grid.hpp
/// @brief Uniform node grids on the unit interval/square, sampled signals and
///        fields, order/exponent types, and elementary geometric operations.
///
/// Conventions:
///   - Grids are node based and include both endpoints: a 1D grid with n cells
///     has n+1 nodes x_i = i*h. Unit grids have h = 1/n.
///   - 2D fields are stored row major with x1 fastest: index(ix, iy).
///   - Discrete L^1 uses trapezoid end-weights so constants integrate exactly.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fractv {

/// Uniform 1D grid: n cells, spacing h, nodes x_i = i*h for i = 0..n.
struct Grid1D {
    int n = 2;
    double h = 0.5;

    /// Grid on (0,1) with h = 1/n.
    static Grid1D unit(int n) {
        if (n < 2) throw std::invalid_argument("Grid1D: need n >= 2 cells");
        return Grid1D{n, 1.0 / n};
    }

    int num_nodes() const { return n + 1; }
    double node(int i) const { return h * i; }
    bool operator==(const Grid1D&) const = default;
};

/// Real-valued function sampled at the nodes of a Grid1D.
struct Signal1D {
    Grid1D grid;
    std::vector<double> values;

    Signal1D() = default;
    Signal1D(Grid1D g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (static_cast<int>(values.size()) != grid.num_nodes())
            throw std::invalid_argument("Signal1D: value count must be n+1");
    }

    /// Sample f at every node of the unit grid with n cells.
    template <class F>
    static Signal1D sample(int n, F&& f) {
        Grid1D g = Grid1D::unit(n);
        std::vector<double> v(g.num_nodes());
        for (int i = 0; i <= n; ++i) v[i] = f(g.node(i));
        return Signal1D(g, std::move(v));
    }

    static Signal1D zeros(int n) {
        return Signal1D(Grid1D::unit(n), std::vector<double>(n + 1, 0.0));
    }

    double& operator[](int i) { return values[i]; }
    double operator[](int i) const { return values[i]; }
    int num_nodes() const { return grid.num_nodes(); }
};

/// Uniform grid on (0,1)^2: nx x ny cells, nodes (ix*hx, iy*hy).
struct Grid2D {
    int nx = 2, ny = 2;
    double hx = 0.5, hy = 0.5;

    static Grid2D unit(int nx, int ny) {
        if (nx < 2 || ny < 2) throw std::invalid_argument("Grid2D: need nx, ny >= 2");
        return Grid2D{nx, ny, 1.0 / nx, 1.0 / ny};
    }

    int num_nodes() const { return (nx + 1) * (ny + 1); }
    bool operator==(const Grid2D&) const = default;
};

/// Real-valued function sampled at the nodes of a Grid2D (x1 fastest).
struct Field2D {
    Grid2D grid;
    std::vector<double> values;

    Field2D() = default;
    Field2D(Grid2D g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (static_cast<int>(values.size()) != grid.num_nodes())
            throw std::invalid_argument("Field2D: value count must be (nx+1)*(ny+1)");
    }

    template <class F>
    static Field2D sample(int nx, int ny, F&& f) {
        Grid2D g = Grid2D::unit(nx, ny);
        std::vector<double> v(g.num_nodes());
        for (int iy = 0; iy <= ny; ++iy)
            for (int ix = 0; ix <= nx; ++ix) v[iy * (nx + 1) + ix] = f(g.hx * ix, g.hy * iy);
        return Field2D(g, std::move(v));
    }

    static Field2D zeros(int nx, int ny) {
        return Field2D(Grid2D::unit(nx, ny), std::vector<double>((nx + 1) * (ny + 1), 0.0));
    }

    int index(int ix, int iy) const { return iy * (grid.nx + 1) + ix; }
    double& at(int ix, int iy) { return values[index(ix, iy)]; }
    double at(int ix, int iy) const { return values[index(ix, iy)]; }
    int num_nodes() const { return grid.num_nodes(); }
};

/// Order r >= 0 split into integer part and fractional part s in [0,1).
struct FracOrder {
    double r = 0.0;
    int floor_part = 0;
    double frac_part = 0.0;

    FracOrder() = default;
    FracOrder(double order) : r(order) {
        if (!(order >= 0.0) || !std::isfinite(order))
            throw std::invalid_argument("FracOrder: order must be finite and >= 0");
        floor_part = static_cast<int>(std::floor(order));
        frac_part = order - floor_part;
        if (frac_part < 0.0) frac_part = 0.0;  // guard against -0 artifacts
    }

    bool is_integer() const { return frac_part == 0.0; }
};

/// Exponent p in [1, inf] with its dual exponent (1/p + 1/p* = 1).
struct LpIndex {
    double p = 2.0;

    LpIndex() = default;
    LpIndex(double exponent) : p(exponent) {
        if (std::isnan(p) || p < 1.0) throw std::invalid_argument("LpIndex: need p >= 1");
    }

    static LpIndex infinity() { return LpIndex(std::numeric_limits<double>::infinity()); }
    bool is_inf() const { return std::isinf(p); }

    LpIndex dual() const {
        if (p == 1.0) return infinity();
        if (is_inf()) return LpIndex(1.0);
        return LpIndex(p / (p - 1.0));
    }
};

/// Per-node tensor with m = 2^rank components over a 2D grid.  Component
/// order puts the outermost (last applied) derivative slot in the most
/// significant digit; contraction consumes the least significant one first.
struct TensorField2D {
    Grid2D grid;
    int rank = 1;
    std::vector<Field2D> comps;

    TensorField2D() = default;
    TensorField2D(Grid2D g, int rank_) : grid(g), rank(rank_) {
        if (rank_ < 0 || rank_ > 16) throw std::invalid_argument("TensorField2D: bad rank");
        comps.assign(std::size_t(1) << rank_, Field2D::zeros(g.nx, g.ny));
    }

    int num_components() const { return static_cast<int>(comps.size()); }
};

/// Pair of component fields (phi_1, phi_2) over a shared grid.
struct VectorField2D {
    Field2D c1, c2;

    VectorField2D() = default;
    VectorField2D(Field2D a, Field2D b) : c1(std::move(a)), c2(std::move(b)) {
        if (!(c1.grid == c2.grid)) throw std::invalid_argument("VectorField2D: grid mismatch");
    }
};

// --- elementary operations ---------------------------------------------------

/// Zero-extend by `pad` nodes on each side; spacing is preserved, so the
/// result lives on an enlarged node set (not a unit grid).
Signal1D extend_by_zero(const Signal1D& w, int pad);

/// Shift values by k nodes (positive k moves toward higher indices); vacated
/// nodes are filled with 0, values shifted past the ends are dropped.
Signal1D translate(const Signal1D& w, int k);

/// l^p norm of a plain vector; p = inf gives max |v_i|.
double lp_norm(const std::vector<double>& v, LpIndex p);

/// Trapezoid-weighted discrete L^1 norm (integral of |values|).
double l1_integral(const Signal1D& w);
double l1_integral(const Field2D& u);

/// Max of |u| over boundary nodes (trace sup-norm surrogate).
double boundary_sup(const Field2D& u);

/// Trapezoid node weight including the h factor(s).
double trapezoid_weight(const Grid1D& g, int i);
double trapezoid_weight(const Grid2D& g, int ix, int iy);

void require_finite(const Signal1D& w, const std::string& what);
void require_finite(const Field2D& u, const std::string& what);

}  // namespace fractv
