#include <doctest.h>

#include <cmath>
#include <thread>

#include "fractv/corpus.hpp"
#include "fractv/frac1d.hpp"
#include "fractv/gl_weights.hpp"
#include "fractv/rng.hpp"
#include "fractv/special.hpp"

using namespace fractv;

namespace {

double l1_diff(const Signal1D& a, const Signal1D& b) {
    Signal1D d = a;
    for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] -= b.values[i];
    return l1_integral(d);
}

// window-restricted L1 distance to a closed form, skipping the singular end
double window_l1_error(const Signal1D& got, double lo, const std::function<double(double)>& f) {
    double acc = 0.0;
    for (int i = 0; i <= got.grid.n; ++i) {
        const double x = got.grid.node(i);
        if (x < lo) continue;
        acc += trapezoid_weight(got.grid, i) * std::abs(got.values[i] - f(x));
    }
    return acc;
}

Signal1D random_signal(int n, std::uint64_t seed) {
    Rng rng(seed);
    Signal1D w = Signal1D::zeros(n);
    for (double& v : w.values) v = rng.uniform(-1.0, 1.0);
    return w;
}

double bump_poly3(double x) { return std::pow(4.0 * x * (1.0 - x), 3); }

}  // namespace

TEST_CASE("GL derivative weights") {
    const auto g1 = gl_derivative_weights(1.0, 2);
    CHECK(g1.w[0] == 1.0);
    CHECK(g1.w[1] == -1.0);
    CHECK(g1.w[2] == 0.0);

    const auto g2 = gl_derivative_weights(2.0, 3);
    CHECK(g2.w[0] == 1.0);
    CHECK(g2.w[1] == -2.0);
    CHECK(g2.w[2] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g2.w[3] == doctest::Approx(0.0).epsilon(1e-15));

    const auto gh = gl_derivative_weights(0.5, 3);
    CHECK(gh.w[0] == 1.0);
    CHECK(gh.w[1] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(gh.w[2] == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(gh.w[3] == doctest::Approx(-0.0625).epsilon(1e-15));

    // recurrence matches the direct binomial formula (-1)^j binom(r, j)
    const double r = 0.73;
    const auto g = gl_derivative_weights(r, 12);
    for (int j = 0; j <= 12; ++j) {
        double binom = 1.0;
        for (int i = 1; i <= j; ++i) binom *= (r - i + 1.0) / i;
        const double direct = (j % 2 ? -1.0 : 1.0) * binom;
        CHECK(g.w[j] == doctest::Approx(direct).epsilon(1e-13));
    }

    // integral weights are non-negative for any positive order
    for (double ri : {0.3, 0.5, 1.0, 1.7}) {
        const auto c = gl_integral_weights(ri, 64);
        for (double v : c.w) CHECK(v >= 0.0);
    }
}

TEST_CASE("weights cache is consistent under concurrent readers") {
    const auto base = gl_derivative_weights(0.31, 300);
    std::vector<std::thread> pool;
    std::vector<int> ok(8, 0);
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&, t] {
            for (int rep = 0; rep < 50; ++rep) {
                const auto w = gl_weights_cached(GLKind::derivative, 0.31, 100 + rep * 4);
                bool good = true;
                for (std::size_t j = 0; j < std::min(w->size(), base.w.size()); ++j)
                    good = good && (*w)[j] == base.w[j];
                if (!good) return;
            }
            ok[t] = 1;
        });
    for (auto& th : pool) th.join();
    for (int v : ok) CHECK(v == 1);
}

TEST_CASE("fractional integral examples") {
    const int n = 512;
    const Signal1D one = Signal1D::sample(n, [](double) { return 1.0; });

    // order 1: running integral of 1 is x
    const Signal1D i1 = frac_integral(one, 1.0, Side::left);
    CHECK(window_l1_error(i1, 0.0, [](double x) { return x; }) < 2.0 / n);

    // order 1/2 of the constant: x^{1/2} / Gamma(3/2), value ~1.128 at x=1
    const Signal1D ih = frac_integral(one, 0.5, Side::left);
    CHECK(ih.values[n] == doctest::Approx(1.1283791670955126).epsilon(2e-3));
    CHECK(window_l1_error(ih, 0.0, [](double x) {
              return std::sqrt(x) / gamma_fn(1.5);
          }) < 2.0 / n);

    // right side mirrors the antiderivative
    const Signal1D ir = frac_integral(one, 1.0, Side::right);
    CHECK(window_l1_error(ir, 0.0, [](double x) { return 1.0 - x; }) < 2.0 / n);

    CHECK_THROWS_AS((void)frac_integral(one, 0.0, Side::left), std::invalid_argument);

    // non-negative inputs stay non-negative (weights are non-negative)
    const Signal1D pos = corpus_1d(n, 5, 1, true).front();
    Signal1D abs_pos = pos;
    for (double& v : abs_pos.values) v = std::abs(v);
    const Signal1D ipos = frac_integral(abs_pos, 0.7, Side::left);
    for (double v : ipos.values) CHECK(v >= 0.0);
}

TEST_CASE("Riemann-Liouville derivative examples") {
    const int n = 1024;
    const Signal1D ramp = Signal1D::sample(n, [](double x) { return x; });

    // first derivative of the ramp is exactly 1 everywhere (copy at node 0)
    const Signal1D d1 = frac_derivative_rl(ramp, FracOrder(1.0), Side::left);
    for (double v : d1.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

    // power rule at order 1/2
    const Signal1D dh = frac_derivative_rl(ramp, FracOrder(0.5), Side::left);
    const double coef = 1.0 / gamma_fn(1.5);
    CHECK(window_l1_error(dh, 0.1, [&](double x) { return coef * std::sqrt(x); }) < 2e-3);

    // fractional derivative of a constant is x^{-s}/Gamma(1-s), not zero
    const Signal1D one = Signal1D::sample(n, [](double) { return 1.0; });
    const Signal1D dc = frac_derivative_rl(one, FracOrder(0.5), Side::left);
    CHECK(window_l1_error(dc, 0.1, [](double x) {
              return std::pow(x, -0.5) / gamma_fn(0.5);
          }) < 2e-3);
    CHECK(l1_integral(dc) > 1.0);  // genuinely nonzero

    Signal1D bad = ramp;
    bad.values[3] = std::nan("");
    CHECK_THROWS_AS((void)frac_derivative_rl(bad, FracOrder(0.5), Side::left),
                    std::invalid_argument);
}

TEST_CASE("reflection identity: right = reflect o left o reflect, exactly") {
    const Signal1D w = random_signal(257, 99);
    for (double r : {0.4, 1.0, 1.6}) {
        const Signal1D right = frac_derivative_rl(w, FracOrder(r), Side::right);
        const Signal1D via = reflect(frac_derivative_rl(reflect(w), FracOrder(r), Side::left));
        for (int i = 0; i <= w.grid.n; ++i) CHECK(right.values[i] == via.values[i]);
    }
    const Signal1D ir = frac_integral(w, 0.8, Side::right);
    const Signal1D iv = reflect(frac_integral(reflect(w), 0.8, Side::left));
    for (int i = 0; i <= w.grid.n; ++i) CHECK(ir.values[i] == iv.values[i]);
}

TEST_CASE("linearity to machine precision") {
    const int n = 200;
    const Signal1D w1 = random_signal(n, 1), w2 = random_signal(n, 2);
    const double a = 1.37, b = -0.42;
    Signal1D combo = w1;
    for (int i = 0; i <= n; ++i) combo.values[i] = a * w1.values[i] + b * w2.values[i];
    for (double r : {0.5, 1.3}) {
        const Signal1D lhs = frac_derivative_rl(combo, FracOrder(r), Side::left);
        const Signal1D d1 = frac_derivative_rl(w1, FracOrder(r), Side::left);
        const Signal1D d2 = frac_derivative_rl(w2, FracOrder(r), Side::left);
        double scale = 0.0;
        for (double v : lhs.values) scale = std::max(scale, std::abs(v));
        for (int i = 0; i <= n; ++i)
            CHECK(std::abs(lhs.values[i] - (a * d1.values[i] + b * d2.values[i])) <=
                  1e-12 * (1.0 + scale));
    }
}

TEST_CASE("Caputo derivative") {
    const int n = 512;

    // constants are killed exactly
    const Signal1D c = Signal1D::sample(n, [](double) { return 0.7; });
    const Signal1D dc = frac_derivative_caputo(c, FracOrder(0.5), Side::left);
    for (double v : dc.values) CHECK(v == doctest::Approx(0.0).epsilon(1e-14));

    // compactly supported bump: Caputo == R-L bitwise (Taylor data vanishes)
    const Signal1D phi = reference_bump_1d(n);
    for (double r : {0.5, 1.5}) {
        CHECK(l1_diff(frac_derivative_caputo(phi, FracOrder(r), Side::left),
                      frac_derivative_rl(phi, FracOrder(r), Side::left)) <= 1e-14);
    }

    // w(x) = x at order 1/2: only the zero constant is subtracted
    const Signal1D ramp = Signal1D::sample(n, [](double x) { return x; });
    CHECK(l1_diff(frac_derivative_caputo(ramp, FracOrder(0.5), Side::left),
                  frac_derivative_rl(ramp, FracOrder(0.5), Side::left)) <= 1e-14);

    // right side via reflection
    const Signal1D dr = frac_derivative_caputo(c, FracOrder(0.5), Side::right);
    for (double v : dr.values) CHECK(v == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("revised derivative removes the boundary singularity") {
    const int n = 512;
    const Signal1D c = Signal1D::sample(n, [](double) { return 3.1; });
    const Signal1D dc = frac_derivative_revised(c, 0.5);
    for (double v : dc.values) CHECK(v == 0.0);

    const Signal1D phi = reference_bump_1d(n);  // phi(0) = 0
    CHECK(l1_diff(frac_derivative_revised(phi, 0.5),
                  frac_derivative_rl(phi, FracOrder(0.5), Side::left)) == 0.0);

    // w = 1 + x: the revised derivative sees only the ramp part
    const Signal1D w = Signal1D::sample(n, [](double x) { return 1.0 + x; });
    const Signal1D dw = frac_derivative_revised(w, 0.5);
    const double coef = 1.0 / gamma_fn(1.5);
    CHECK(window_l1_error(dw, 0.1, [&](double x) { return coef * std::sqrt(x); }) < 2e-3);

    CHECK_THROWS_AS((void)frac_derivative_revised(w, 1.0), std::invalid_argument);
}

TEST_CASE("adjoint is the exact transpose") {
    const int n = 163;
    for (double r : {0.5, 1.0, 1.7})
        for (Side side : {Side::left, Side::right}) {
            const Signal1D w = random_signal(n, 11), v = random_signal(n, 12);
            const Signal1D aw = frac_derivative_rl(w, FracOrder(r), side);
            const Signal1D atv = adjoint_apply(v, FracOrder(r), side);
            double lhs = 0.0, rhs = 0.0, scale = 0.0;
            for (int i = 0; i <= n; ++i) {
                lhs += aw.values[i] * v.values[i];
                rhs += w.values[i] * atv.values[i];
                scale = std::max(scale, std::abs(aw.values[i]));
            }
            CHECK(std::abs(lhs - rhs) <= 1e-11 * (1.0 + scale));
        }
}

TEST_CASE("adjoint of the backward difference acts as a forward difference") {
    const int n = 64;
    const Signal1D v = random_signal(n, 21);
    const Signal1D at = adjoint_apply(v, FracOrder(1.0), Side::left);
    // interior rows of the transpose: (v_i - v_{i+1}) / h, sign-flipped forward difference
    for (int i = 2; i < n; ++i)
        CHECK(at.values[i] == doctest::Approx((v.values[i] - v.values[i + 1]) * n).epsilon(1e-12));
}

TEST_CASE("discrete integration by parts across sides") {
    // <w, d^r_R phi> = (-1)^{floor(r)+1} <d^r_L w, phi> + O(h) for interior bumps
    const int n = 1024;
    const Signal1D phi = reference_bump_1d(n);
    const Signal1D w = Signal1D::sample(n, [](double x) { return 0.3 + 0.5 * x * x; });
    for (double r : {0.5, 1.5}) {
        const int sign = (FracOrder(r).floor_part + 1) % 2 == 0 ? 1 : -1;
        const Signal1D dr_phi = frac_derivative_rl(phi, FracOrder(r), Side::right);
        const Signal1D dl_w = frac_derivative_rl(w, FracOrder(r), Side::left);
        double lhs = 0.0, rhs = 0.0;
        for (int i = 0; i <= n; ++i) {
            lhs += trapezoid_weight(w.grid, i) * w.values[i] * dr_phi.values[i];
            rhs += trapezoid_weight(w.grid, i) * dl_w.values[i] * phi.values[i];
        }
        // the GL right operator is the plain transpose; the paper's sign
        // convention folds in (-1)^{floor(r)+1}
        CHECK(lhs == doctest::Approx(sign * rhs).epsilon(0.02));
    }
}

TEST_CASE("semigroup of fractional integrals with first-order closed-form error") {
    for (auto [r1, r2] : {std::pair{0.5, 0.5}, {0.3, 0.4}, {1.0, 1.0}}) {
        const auto corpus = corpus_1d(256, 77, 8, false);
        for (int n : {256, 512}) {
            double worst = 0.0;
            for (const auto& w0 : corpus) {
                Signal1D w = w0;
                if (n != w.grid.n) w = corpus_1d(n, 77, 8, false)[0];
                worst = std::max(worst,
                                 l1_diff(frac_integral(frac_integral(w, r2, Side::left), r1,
                                                       Side::left),
                                         frac_integral(w, r1 + r2, Side::left)));
            }
            CHECK(worst <= 2.0 / n);
        }
        // composed against the exact antiderivative of the constant
        const auto closed_err = [&](int n) {
            const Signal1D one = Signal1D::sample(n, [](double) { return 1.0; });
            const double rsum = r1 + r2;
            return window_l1_error(
                frac_integral(frac_integral(one, r2, Side::left), r1, Side::left), 0.0,
                [&](double x) { return std::pow(x, rsum) / gamma_fn(rsum + 1.0); });
        };
        const double e256 = closed_err(256), e512 = closed_err(512);
        CHECK(e256 <= 2.0 / 256);
        CHECK(e512 <= 0.6 * e256 + 1e-12);  // first-order halving
    }
}

TEST_CASE("integral operator norm bound") {
    const auto corpus = corpus_1d(512, 13, 12, false);
    for (double r : {0.5, 1.0, 2.0}) {
        const double bound = (1.0 + 5.0 / 512) / (r * gamma_fn(r));
        for (const auto& w : corpus) {
            const double wn = l1_integral(w);
            if (wn < 1e-12) continue;
            CHECK(l1_integral(frac_integral(w, r, Side::left)) <= bound * wn);
        }
    }
}

TEST_CASE("order limits of the GL derivative") {
    const int n = 1024;
    const Signal1D phi = Signal1D::sample(n, bump_poly3);
    const Signal1D d1 = frac_derivative_rl(phi, FracOrder(1.0), Side::left);

    CHECK(l1_diff(frac_derivative_rl(phi, FracOrder(0.01), Side::left), phi) <= 0.05);
    CHECK(l1_diff(frac_derivative_rl(phi, FracOrder(0.99), Side::left), d1) <= 0.05);

    double sup_d1 = 0.0, sup_phi = 0.0, sup_s = 0.0;
    for (double v : d1.values) sup_d1 = std::max(sup_d1, std::abs(v));
    for (double v : phi.values) sup_phi = std::max(sup_phi, std::abs(v));
    for (int i = 1; i <= 19; ++i) {
        const Signal1D ds = frac_derivative_rl(phi, FracOrder(0.05 * i), Side::left);
        for (double v : ds.values) sup_s = std::max(sup_s, std::abs(v));
    }
    CHECK(sup_s <= 1.1 * sup_d1 + sup_phi);
}
