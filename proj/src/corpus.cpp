#include "fractv/corpus.hpp"

#include <algorithm>
#include <cmath>

#include "fractv/rng.hpp"

namespace fractv {

double mollifier_bump(double x, double center, double radius) {
    const double t = (x - center) / radius;
    if (std::abs(t) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

Signal1D reference_bump_1d(int n) {
    return Signal1D::sample(n, [](double x) { return mollifier_bump(x, 0.5, 0.35); });
}

Field2D reference_bump_2d(int n) {
    return Field2D::sample(n, n, [](double x, double y) {
        return mollifier_bump(x, 0.5, 0.35) * mollifier_bump(y, 0.5, 0.35);
    });
}

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void normalize_sup(std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    if (m > 1.0)
        for (double& x : v) x /= m;
}

}  // namespace

std::vector<Signal1D> corpus_1d(int n, std::uint64_t seed, int count, bool smooth_only) {
    std::vector<Signal1D> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        Rng rng(derive_seed(seed, 1000 + i));
        const int kind = i % (smooth_only ? 5 : 6);
        Signal1D w = Signal1D::zeros(n);
        switch (kind) {
            case 0: {  // polynomial bump
                const double amp = rng.uniform(0.4, 1.0);
                const int m = rng.uniform_int(2, 3);
                w = Signal1D::sample(n, [&](double x) {
                    return amp * std::pow(4.0 * x * (1.0 - x), m);
                });
                break;
            }
            case 1: {  // mollifier bump, support inside (0.08, 0.92)
                const double c = rng.uniform(0.35, 0.65);
                const double rho = rng.uniform(0.15, 0.27);
                const double amp = rng.uniform(0.4, 1.0);
                w = Signal1D::sample(n, [&](double x) { return amp * mollifier_bump(x, c, rho); });
                break;
            }
            case 2: {  // low-order cosine polynomial
                double a[5];
                double norm = 0.0;
                for (double& c : a) {
                    c = rng.uniform(-1.0, 1.0);
                    norm += std::abs(c);
                }
                w = Signal1D::sample(n, [&](double x) {
                    double s = 0.0;
                    for (int j = 0; j < 5; ++j) s += a[j] * std::cos(j * kPi * x);
                    return s / norm;
                });
                break;
            }
            case 3: {  // ramp
                const double a = rng.uniform(-0.5, 0.5);
                const double b = rng.uniform(-0.5, 0.5);
                w = Signal1D::sample(n, [&](double x) { return a + b * x; });
                break;
            }
            case 4: {  // mollified step
                const double c = rng.uniform(0.3, 0.7);
                const double delta = rng.uniform(0.04, 0.1);
                const double amp = rng.uniform(0.5, 1.0);
                w = Signal1D::sample(n, [&](double x) {
                    return amp * 0.5 * (1.0 + std::tanh((x - c) / delta));
                });
                break;
            }
            default: {  // hard step (piecewise constant)
                const double c = rng.uniform(0.3, 0.7);
                const double lo = rng.uniform(-0.5, 0.2);
                const double hi = rng.uniform(0.3, 1.0);
                w = Signal1D::sample(n, [&](double x) { return x < c ? lo : hi; });
                break;
            }
        }
        normalize_sup(w.values);
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Field2D> corpus_2d(int n, std::uint64_t seed, int count) {
    std::vector<Field2D> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        Rng rng(derive_seed(seed, 2000 + i));
        Field2D u = Field2D::zeros(n, n);
        switch (i % 5) {
            case 0: {  // product mollifier bump
                const double cx = rng.uniform(0.35, 0.65), cy = rng.uniform(0.35, 0.65);
                const double rx = rng.uniform(0.15, 0.27), ry = rng.uniform(0.15, 0.27);
                const double amp = rng.uniform(0.4, 1.0);
                u = Field2D::sample(n, n, [&](double x, double y) {
                    return amp * mollifier_bump(x, cx, rx) * mollifier_bump(y, cy, ry);
                });
                break;
            }
            case 1: {  // polynomial bump
                const double amp = rng.uniform(0.4, 1.0);
                const int m = rng.uniform_int(1, 3);
                u = Field2D::sample(n, n, [&](double x, double y) {
                    return amp * std::pow(16.0 * x * (1.0 - x) * y * (1.0 - y), m);
                });
                break;
            }
            case 2: {  // cosine polynomial
                double a[3][3];
                double norm = 0.0;
                for (auto& row : a)
                    for (double& c : row) {
                        c = rng.uniform(-1.0, 1.0);
                        norm += std::abs(c);
                    }
                u = Field2D::sample(n, n, [&](double x, double y) {
                    double s = 0.0;
                    for (int j = 0; j < 3; ++j)
                        for (int l = 0; l < 3; ++l)
                            s += a[j][l] * std::cos(j * kPi * x) * std::cos(l * kPi * y);
                    return s / norm;
                });
                break;
            }
            case 3: {  // affine ramp
                const double a = rng.uniform(-0.4, 0.4);
                const double b = rng.uniform(-0.4, 0.4);
                const double c = rng.uniform(-0.4, 0.4);
                u = Field2D::sample(n, n, [&](double x, double y) { return a + b * x + c * y; });
                break;
            }
            default: {  // mollified disk
                const double cx = rng.uniform(0.4, 0.6), cy = rng.uniform(0.4, 0.6);
                const double rho = rng.uniform(0.15, 0.3);
                const double delta = rng.uniform(0.05, 0.1);
                const double amp = rng.uniform(0.5, 1.0);
                u = Field2D::sample(n, n, [&](double x, double y) {
                    const double d = std::hypot(x - cx, y - cy);
                    return amp * 0.5 * (1.0 + std::tanh((rho - d) / delta));
                });
                break;
            }
        }
        normalize_sup(u.values);
        out.push_back(std::move(u));
    }
    return out;
}

}  // namespace fractv
