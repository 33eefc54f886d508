#include <doctest.h>

#include <cmath>

#include "fractv/grid.hpp"
#include "fractv/rng.hpp"

using namespace fractv;

TEST_CASE("extend_by_zero pads with zeros and preserves the interior") {
    const Signal1D one = Signal1D::sample(8, [](double) { return 1.0; });
    const Signal1D ext = extend_by_zero(one, 2);
    REQUIRE(ext.num_nodes() == 13);
    CHECK(ext.values.front() == 0.0);
    CHECK(ext.values[1] == 0.0);
    CHECK(ext.values[2] == 1.0);
    CHECK(ext.values[10] == 1.0);
    CHECK(ext.values[11] == 0.0);

    const Signal1D same = extend_by_zero(one, 0);
    CHECK(same.values == one.values);

    const Signal1D ramp = Signal1D::sample(8, [](double x) { return x; });
    const Signal1D ext1 = extend_by_zero(ramp, 1);
    CHECK(ext1.values.front() == 0.0);
    CHECK(ext1.values.back() == 0.0);
    CHECK(ext1.values[1] == ramp.values[0]);
    CHECK(ext1.values[9] == ramp.values[8]);
}

TEST_CASE("translate shifts toward higher indices and zero-fills") {
    Signal1D spike = Signal1D::zeros(10);
    spike.values[3] = 1.0;

    CHECK(translate(spike, 0).values == spike.values);

    const Signal1D moved = translate(spike, 1);
    CHECK(moved.values[4] == 1.0);
    CHECK(moved.values[3] == 0.0);

    CHECK_THROWS_AS((void)translate(spike, 11), std::invalid_argument);

    // round trip on nodes that were never pushed off the grid
    const Signal1D ramp = Signal1D::sample(10, [](double x) { return x + 0.5; });
    const Signal1D back = translate(translate(ramp, 3), -3);
    for (int i = 0; i <= 10 - 3; ++i) CHECK(back.values[i] == ramp.values[i]);
}

TEST_CASE("translate L1 distance against direct summation") {
    // w(x) = x on the zero extension, shift by 0.1 = 100 cells at n = 1000
    const int n = 1000, k = 100;
    const Signal1D w = Signal1D::sample(n, [](double x) { return x; });
    const Signal1D ext = extend_by_zero(w, k + 1);
    const Signal1D shifted = translate(ext, -k);  // tau_h w = w(. + h)

    double direct = 0.0;  // independent summation oracle on the same nodes
    for (int i = 0; i < ext.num_nodes(); ++i) {
        const double weight = (i == 0 || i == ext.num_nodes() - 1) ? 0.5 : 1.0;
        direct += weight * ext.grid.h * std::abs(shifted.values[i] - ext.values[i]);
    }
    CHECK(l1_integral([&] {
              Signal1D d = shifted;
              for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] -= ext.values[i];
              return d;
          }()) == doctest::Approx(direct).epsilon(1e-14));
    // closed form: 0.1 * 0.95 interior + 0.095 boundary strip = 0.19
    CHECK(direct == doctest::Approx(0.19).epsilon(2e-3));
}

TEST_CASE("lp_norm basics") {
    const std::vector<double> v{3.0, -4.0};
    CHECK(lp_norm(v, LpIndex(2.0)) == doctest::Approx(5.0));
    CHECK(lp_norm(v, LpIndex(1.0)) == doctest::Approx(7.0));
    CHECK(lp_norm(v, LpIndex::infinity()) == doctest::Approx(4.0));
}

TEST_CASE("lp norm equivalence on random vectors") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = rng.uniform_int(1, 6);
        std::vector<double> v(dim);
        for (double& x : v) x = rng.uniform(-2.0, 2.0);
        const double q = rng.uniform(1.0, 3.0);
        const double p = q + rng.uniform(0.1, 4.0);
        const double np = lp_norm(v, LpIndex(p)), nq = lp_norm(v, LpIndex(q));
        CHECK(np <= nq + 1e-12);
        CHECK(nq <= std::pow(dim, 1.0 / q - 1.0 / p) * np + 1e-12);
    }
}

TEST_CASE("l1_integral") {
    CHECK(l1_integral(Signal1D::sample(16, [](double) { return 1.0; })) == doctest::Approx(1.0));
    CHECK(l1_integral(Signal1D::zeros(16)) == 0.0);
    CHECK(l1_integral(Signal1D::sample(1000, [](double x) { return x; })) ==
          doctest::Approx(0.5).epsilon(1e-6));

    // absolute homogeneity and triangle inequality
    Rng rng(3);
    const int n = 64;
    Signal1D a = Signal1D::zeros(n), b = Signal1D::zeros(n);
    for (int i = 0; i <= n; ++i) {
        a.values[i] = rng.uniform(-1.0, 1.0);
        b.values[i] = rng.uniform(-1.0, 1.0);
    }
    Signal1D scaled = a, sum = a;
    for (int i = 0; i <= n; ++i) {
        scaled.values[i] *= -2.5;
        sum.values[i] += b.values[i];
    }
    CHECK(l1_integral(scaled) == doctest::Approx(2.5 * l1_integral(a)).epsilon(1e-14));
    CHECK(l1_integral(sum) <= l1_integral(a) + l1_integral(b) + 1e-14);
}

TEST_CASE("boundary_sup") {
    CHECK(boundary_sup(Field2D::sample(8, 8, [](double, double) { return -0.75; })) ==
          doctest::Approx(0.75));
    CHECK(boundary_sup(Field2D::sample(8, 8, [](double x, double y) { return x * y; })) ==
          doctest::Approx(1.0));
    const Field2D bump = Field2D::sample(16, 16, [](double x, double y) {
        return x * (1.0 - x) * y * (1.0 - y);
    });
    CHECK(boundary_sup(bump) == 0.0);
}

TEST_CASE("FracOrder and LpIndex invariants") {
    const FracOrder r(2.3);
    CHECK(r.floor_part == 2);
    CHECK(r.frac_part == doctest::Approx(0.3));
    CHECK(r.floor_part + r.frac_part == doctest::Approx(r.r));
    CHECK(FracOrder(3.0).is_integer());
    CHECK_THROWS_AS(FracOrder(-0.5), std::invalid_argument);

    for (double p : {1.0, 1.5, 2.0, 3.0}) CHECK(LpIndex(p).dual().dual().p == doctest::Approx(p));
    CHECK(LpIndex(1.0).dual().is_inf());
    CHECK(LpIndex::infinity().dual().p == 1.0);
}
