#include "fractv/fracnd.hpp"

#include <vector>

namespace fractv {

namespace {

// Apply a 1D line kernel to every grid line along `axis` (1: x1, 2: x2).
template <class LineOp>
Field2D apply_along_axis(const Field2D& u, int axis, LineOp&& op) {
    if (axis != 1 && axis != 2) throw std::invalid_argument("apply_along_axis: axis must be 1 or 2");
    const int nx = u.grid.nx, ny = u.grid.ny;
    Field2D out = u;
    if (axis == 1) {
        const int num = nx + 1;
        std::vector<double> buf(num);
        for (int iy = 0; iy <= ny; ++iy) {
            const double* row = u.values.data() + u.index(0, iy);
            op(row, buf.data(), num, u.grid.hx);
            std::copy(buf.begin(), buf.end(), out.values.begin() + out.index(0, iy));
        }
    } else {
        const int num = ny + 1;
        std::vector<double> in(num), buf(num);
        for (int ix = 0; ix <= nx; ++ix) {
            for (int iy = 0; iy <= ny; ++iy) in[iy] = u.at(ix, iy);
            op(in.data(), buf.data(), num, u.grid.hy);
            for (int iy = 0; iy <= ny; ++iy) out.at(ix, iy) = buf[iy];
        }
    }
    return out;
}

}  // namespace

Field2D partial_frac(const Field2D& u, int axis, FracOrder r, Side side) {
    return apply_along_axis(u, axis, [&](const double* x, double* y, int num, double h) {
        detail::gl_derivative_line(x, y, num, h, r.r, side);
    });
}

namespace detail {

Field2D partial_raw(const Field2D& u, int axis, double r, Side side) {
    return apply_along_axis(u, axis, [&](const double* x, double* y, int num, double h) {
        gl_derivative_line_raw(x, y, num, h, r, side);
    });
}

Field2D partial_test_side(const Field2D& u, int axis, double r) {
    // raw right-sided sweep = exact transpose of the raw left-sided sweep
    Field2D out = partial_raw(u, axis, r, Side::right);
    for (double& v : out.values) v = -v;
    return out;
}

Field2D partial_transpose(const Field2D& u, int axis, double r, Side side) {
    return apply_along_axis(u, axis, [&](const double* x, double* y, int num, double h) {
        gl_derivative_line_transpose(x, y, num, h, r, side);
    });
}

}  // namespace detail

VectorField2D frac_gradient(const Field2D& u, double s, Side side) {
    return VectorField2D(detail::partial_raw(u, 1, s, side), detail::partial_raw(u, 2, s, side));
}

Field2D frac_divergence(const VectorField2D& phi, double s) {
    if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("frac_divergence: need s in [0,1]");
    const double scale = divergence_scale(s);
    Field2D d1 = detail::partial_test_side(phi.c1, 1, s);
    const Field2D d2 = detail::partial_test_side(phi.c2, 2, s);
    for (std::size_t i = 0; i < d1.values.size(); ++i)
        d1.values[i] = scale * (d1.values[i] + d2.values[i]);
    return d1;
}

Field2D div_r(const TensorField2D& phi, FracOrder r) {
    const int rank = r.floor_part + 1;
    if (phi.rank != rank || phi.num_components() != (1 << rank))
        throw std::invalid_argument("div_r: tensor rank must be floor(r)+1");

    // integer contractions, least significant index digit first
    std::vector<Field2D> cur(phi.comps.begin(), phi.comps.end());
    for (int level = 0; level < r.floor_part; ++level) {
        std::vector<Field2D> next;
        next.reserve(cur.size() / 2);
        for (std::size_t d = 0; d < cur.size() / 2; ++d) {
            Field2D a = detail::partial_test_side(cur[2 * d], 1, 1.0);
            const Field2D b = detail::partial_test_side(cur[2 * d + 1], 2, 1.0);
            for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] += b.values[i];
            next.push_back(std::move(a));
        }
        cur = std::move(next);
    }
    return frac_divergence(VectorField2D(std::move(cur[0]), std::move(cur[1])), r.frac_part);
}

}  // namespace fractv
