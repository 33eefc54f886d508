#include "fractv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fractv/corpus.hpp"
#include "fractv/frac1d.hpp"
#include "fractv/io.hpp"
#include "fractv/parallel.hpp"
#include "fractv/rng.hpp"
#include "fractv/special.hpp"
#include "fractv/tvr.hpp"

namespace fractv {

namespace {

// Tolerance schedule: scheduled bounds are C/n, with C calibrated at n = 256
// and the halving at n = 512 exercised by the unit tests.  Exact assertions
// use a rounding slack instead and are flagged `exact` in the report.
namespace tol {
constexpr double kExactSlack = 1e-12;

constexpr double kPowerRelC = 20.48;         // anchors rel L1 error to 0.02 at n = 1024
constexpr double kPowerHalving = 0.6;        // err(2n) <= 0.6 err(n)
constexpr double kPowerConstNormC = 2.0;     // bound C h^{1-s} on the d^s(1) L1 deficit
constexpr double kSingularWindowC = 2.0;     // L1 of d^s x^{s-1} on [0.2,1], bound C h^s
constexpr double kSemigroupC = 2.0;
constexpr double kIntegralBoundSlack = 5.0;  // (1 + 5h) factor
constexpr double kCaputoBumpC = 1.0;
constexpr double kCaputoConstRel = 0.05;
constexpr double kOrderLimitEndpoint = 0.05;
constexpr double kMonotonicityC = 4.0;
constexpr double kRampClosedFormRel = 0.02;
constexpr double kInterpolationMaxRatio = 0.5;   // frozen empirical constant (observed ~0.11)
constexpr double kInterpolationStability = 0.10;
constexpr double kLscC = 4.0;
constexpr double kLscDriftRel = 0.12;        // tail allowance at n0 = 16 for r_n -> r
constexpr double kStrictApproxC = 4.0;
}  // namespace tol

// fixed sub-stream ids so experiments stay independent of execution order
enum Stream : std::uint64_t {
    kStreamSemigroup = 11,
    kStreamIntegralBound = 12,
    kStreamCaputo = 13,
    kStreamTvEquivalence = 14,
    kStreamMonotonicity = 15,
    kStreamInterpolation = 16,
    kStreamTranslation = 17,
    kStreamLsc = 18,
};

std::string fmt(double v) { return format_double(v); }

double lp_integral_norm(const Signal1D& w, LpIndex p) {
    if (p.is_inf()) {
        double m = 0.0;
        for (double v : w.values) m = std::max(m, std::abs(v));
        return m;
    }
    double s = 0.0;
    for (int i = 0; i <= w.grid.n; ++i)
        s += trapezoid_weight(w.grid, i) * std::pow(std::abs(w.values[i]), p.p);
    return std::pow(s, 1.0 / p.p);
}

double l1_diff(const Signal1D& a, const Signal1D& b) {
    Signal1D d = a;
    for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] -= b.values[i];
    return l1_integral(d);
}

double sup_abs(const Signal1D& w) {
    double m = 0.0;
    for (double v : w.values) m = std::max(m, std::abs(v));
    return m;
}

// 2D corpus with every entry vanishing near the domain boundary; used where
// the paper's hypotheses need smooth interior data (boundary-nonvanishing
// inputs make the GL quadrature converge at O(h^{1-s}) instead of O(h)).
std::vector<Field2D> corpus_2d_interior(int n, std::uint64_t seed, int count) {
    std::vector<Field2D> base = corpus_2d(n, seed, count);
    for (auto& u : base) {
        for (int iy = 0; iy <= n; ++iy)
            for (int ix = 0; ix <= n; ++ix) {
                const double x = u.grid.hx * ix, y = u.grid.hy * iy;
                const double taper = std::pow(16.0 * x * (1.0 - x) * y * (1.0 - y), 2);
                u.at(ix, iy) *= std::min(1.0, 2.0 * taper);
            }
    }
    return base;
}

}  // namespace

void ExperimentReport::add(const std::string& label, double measured, double bound, bool exact) {
    ExperimentCheck c;
    c.label = label;
    c.measured = measured;
    c.bound = bound;
    c.margin = bound - measured;
    c.pass = c.margin >= 0.0 && std::isfinite(measured);
    c.exact = exact;
    checks.push_back(std::move(c));
}

void ExperimentReport::finalize() {
    pass = !checks.empty();
    for (const auto& c : checks) pass = pass && c.pass;
}

const ExperimentCheck& ExperimentReport::worst() const {
    if (checks.empty()) throw std::logic_error("ExperimentReport::worst: no checks");
    const ExperimentCheck* w = &checks.front();
    for (const auto& c : checks)
        if (c.margin < w->margin) w = &c;
    return *w;
}

// --- power rule ---------------------------------------------------------------

namespace {

double power_rule_error(double s, int k, int n) {
    const Signal1D w = Signal1D::sample(n, [&](double x) { return std::pow(x, k); });
    const Signal1D d = frac_derivative_rl(w, FracOrder(s), Side::left);
    const double coef = gamma_fn(k + 1.0) / gamma_fn(k - s + 1.0);
    double num = 0.0, den = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double x = w.grid.node(i);
        if (x < 0.1) continue;
        const double exact = coef * std::pow(x, k - s);
        const double wgt = trapezoid_weight(w.grid, i);
        num += wgt * std::abs(d.values[i] - exact);
        den += wgt * std::abs(exact);
    }
    return num / den;
}

}  // namespace

ExperimentReport check_power_rule(double s, int k, int n) {
    if (!(s > 0.0 && s < 1.0) || k < 0) throw std::invalid_argument("check_power_rule: bad args");
    ExperimentReport rep;
    rep.name = "power_rule";
    rep.params = "s=" + fmt(s) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
    rep.grid_sizes = {n, 2 * n};

    const double err_n = power_rule_error(s, k, n);
    const double err_2n = power_rule_error(s, k, 2 * n);
    rep.add("rel_l1_window", err_n, tol::kPowerRelC / n);
    rep.add("first_order_halving", err_2n, tol::kPowerHalving * err_n + 1e-12);

    if (k == 0) {
        // L1 norm of d^s(1) vs 1/Gamma(2-s); deficit is O(h^{1-s})
        const Signal1D one = Signal1D::sample(n, [](double) { return 1.0; });
        const Signal1D d1 = frac_derivative_rl(one, FracOrder(s), Side::left);
        const double exact = 1.0 / gamma_fn(2.0 - s);
        const double rel = std::abs(l1_integral(d1) - exact) / exact;
        rep.add("const_l1_norm_rel", rel,
                0.01 + tol::kPowerConstNormC * std::pow(1.0 / n, 1.0 - s));

        // d^s x^{s-1} = 0, tested away from the singular end
        Signal1D sing = Signal1D::sample(n, [&](double x) { return std::pow(x, s - 1.0); });
        sing.values[0] = std::pow(sing.grid.h, s - 1.0) / s;  // first-cell average
        const Signal1D ds = frac_derivative_rl(sing, FracOrder(s), Side::left);
        double l1 = 0.0;
        for (int i = 0; i <= n; ++i)
            if (sing.grid.node(i) >= 0.2) l1 += trapezoid_weight(sing.grid, i) * std::abs(ds.values[i]);
        rep.add("singular_window_l1", l1, tol::kSingularWindowC * std::pow(1.0 / n, s));
    }
    rep.finalize();
    return rep;
}

// --- semigroup and the integral norm bound -------------------------------------

ExperimentReport check_semigroup(double r1, double r2, int n, std::uint64_t seed) {
    if (!(r1 > 0.0 && r2 > 0.0)) throw std::invalid_argument("check_semigroup: need r1, r2 > 0");
    ExperimentReport rep;
    rep.name = "semigroup";
    rep.params = "r1=" + fmt(r1) + " r2=" + fmt(r2) + " n=" + std::to_string(n);
    rep.grid_sizes = {n};

    auto corpus = corpus_1d(n, derive_seed(seed, kStreamSemigroup), 12, false);
    corpus.push_back(Signal1D::sample(n, [](double) { return 1.0; }));
    double worst = 0.0;
    for (const auto& w : corpus) {
        const Signal1D two_step = frac_integral(frac_integral(w, r2, Side::left), r1, Side::left);
        const Signal1D one_step = frac_integral(w, r1 + r2, Side::left);
        worst = std::max(worst, l1_diff(two_step, one_step));
    }
    rep.add("corpus_composition_l1", worst, tol::kSemigroupC / n);

    const Signal1D one = Signal1D::sample(n, [](double) { return 1.0; });
    const Signal1D composed = frac_integral(frac_integral(one, r2, Side::left), r1, Side::left);
    const double rsum = r1 + r2;
    const Signal1D closed = Signal1D::sample(
        n, [&](double x) { return std::pow(x, rsum) / gamma_fn(rsum + 1.0); });
    rep.add("closed_form_l1", l1_diff(composed, closed), tol::kSemigroupC / n);
    rep.finalize();
    return rep;
}

ExperimentReport check_integral_bound(double r, LpIndex p, int n, std::uint64_t seed) {
    if (!(r > 0.0)) throw std::invalid_argument("check_integral_bound: need r > 0");
    ExperimentReport rep;
    rep.name = "integral_bound";
    rep.params = "r=" + fmt(r) + " p=" + fmt(p.p) + " n=" + std::to_string(n);
    rep.grid_sizes = {n};

    const auto corpus = corpus_1d(n, derive_seed(seed, kStreamIntegralBound), 20, false);
    const double op_norm = 1.0 / (r * gamma_fn(r));
    double worst_ratio = 0.0;
    for (const auto& w : corpus) {
        const double wn = lp_integral_norm(w, p);
        if (wn < 1e-14) continue;
        const double in = lp_integral_norm(frac_integral(w, r, Side::left), p);
        worst_ratio = std::max(worst_ratio, in / wn);
    }
    rep.add("lp_ratio", worst_ratio, op_norm * (1.0 + tol::kIntegralBoundSlack / n));
    rep.finalize();
    return rep;
}

// --- Caputo equivalence ---------------------------------------------------------

ExperimentReport check_caputo_equiv(double r, int n, std::uint64_t seed) {
    ExperimentReport rep;
    rep.name = "caputo";
    rep.params = "r=" + fmt(r) + " n=" + std::to_string(n);
    rep.grid_sizes = {n};
    const FracOrder order(r);

    Rng rng(derive_seed(seed, kStreamCaputo));
    std::vector<Signal1D> bumps{reference_bump_1d(n)};
    const double c = rng.uniform(0.4, 0.6), rho = rng.uniform(0.2, 0.3);
    bumps.push_back(
        Signal1D::sample(n, [&](double x) { return mollifier_bump(x, c, rho); }));

    double worst = 0.0;
    for (const auto& phi : bumps)
        worst = std::max(worst, l1_diff(frac_derivative_rl(phi, order, Side::left),
                                        frac_derivative_caputo(phi, order, Side::left)));
    rep.add("bump_l1_gap", worst, tol::kCaputoBumpC / n);

    if (order.floor_part == 0 && order.frac_part > 0.0) {
        // the continuum gap d^s(1) = x^{-s}/Gamma(1-s) is integrable for s < 1
        // only; above order one the constant gap has no finite L1 target
        const Signal1D one = Signal1D::sample(n, [](double) { return 1.0; });
        const double gap = l1_diff(frac_derivative_rl(one, order, Side::left),
                                   frac_derivative_caputo(one, order, Side::left));
        const double exact = 1.0 / gamma_fn(2.0 - order.frac_part);
        rep.add("const_gap_rel", std::abs(gap - exact) / exact, tol::kCaputoConstRel);
    }

    // at integer order both reduce to the same difference stencil on bumps
    const Signal1D phi = bumps.front();
    const double int_gap = l1_diff(frac_derivative_rl(phi, FracOrder(1.0), Side::left),
                                   frac_derivative_caputo(phi, FracOrder(1.0), Side::left));
    rep.add("integer_order_agreement", int_gap, tol::kExactSlack, true);
    rep.finalize();
    return rep;
}

// --- order limits ---------------------------------------------------------------

ExperimentReport check_order_limits(int n, const std::vector<double>& s_grid) {
    ExperimentReport rep;
    rep.name = "order_limits";
    rep.params = "n=" + std::to_string(n) + " s_count=" + std::to_string(s_grid.size()) +
                 " bump=poly3";
    rep.grid_sizes = {n};

    // gentle polynomial bump: the order-limit gap (1-s) K(phi) scales with the
    // bump's higher derivatives, and this one keeps K well inside the bound
    const Signal1D phi =
        Signal1D::sample(n, [](double x) { return std::pow(4.0 * x * (1.0 - x), 3); });
    const Signal1D d1 = frac_derivative_rl(phi, FracOrder(1.0), Side::left);
    const Signal1D d2 = frac_derivative_rl(phi, FracOrder(2.0), Side::left);
    const double lemma_bound = sup_abs(d1) + sup_abs(d2);

    double sup_over_s = 0.0;
    for (double s : s_grid)
        sup_over_s = std::max(sup_over_s, sup_abs(frac_derivative_rl(phi, FracOrder(s), Side::left)));
    rep.add("lemma_sup_bound", sup_over_s, lemma_bound);

    const auto dist_to_identity = [&](double s) {
        return l1_diff(frac_derivative_rl(phi, FracOrder(s), Side::left), phi);
    };
    const auto dist_to_derivative = [&](double s) {
        return l1_diff(frac_derivative_rl(phi, FracOrder(s), Side::left), d1);
    };
    const double at_001 = dist_to_identity(0.01);
    const double at_099 = dist_to_derivative(0.99);
    rep.add("identity_limit_s0.01", at_001, tol::kOrderLimitEndpoint);
    rep.add("derivative_limit_s0.99", at_099, tol::kOrderLimitEndpoint);
    rep.add("trend_low_end", at_001 - dist_to_identity(0.05), 0.0);
    rep.add("trend_high_end", at_099 - dist_to_derivative(0.95), 0.0);
    rep.finalize();
    return rep;
}

// --- TV equivalence, monotonicity, interpolation --------------------------------

ExperimentReport check_tv_equivalence(double r, double q, double p, int n, std::uint64_t seed) {
    if (!(q < p)) throw std::invalid_argument("check_tv_equivalence: need q < p");
    ExperimentReport rep;
    rep.name = "tv_equivalence";
    rep.params = "r=" + fmt(r) + " q=" + fmt(q) + " p=" + fmt(p) + " n=" + std::to_string(n);
    rep.grid_sizes = {n};

    const auto corpus = corpus_2d(n, derive_seed(seed, kStreamTvEquivalence), 50);
    const double factor = std::pow(2.0, (std::isinf(p) ? 0.0 : 1.0 / p) - 1.0 / q);
    double worst_low = -1e300, worst_high = -1e300, scale = 0.0;
    for (const auto& u : corpus) {
        const double tv_q = tv_primal_value(u, FracOrder(r), LpIndex(q));
        const double tv_p = tv_primal_value(u, FracOrder(r), LpIndex(p));
        worst_low = std::max(worst_low, factor * tv_q - tv_p);   // need <= 0
        worst_high = std::max(worst_high, tv_p - tv_q);          // need <= 0
        scale = std::max(scale, tv_q);
    }
    const double slack = tol::kExactSlack * (1.0 + scale);
    rep.add("lower_sandwich", worst_low, slack, true);
    rep.add("upper_sandwich", worst_high, slack, true);
    rep.finalize();
    return rep;
}

ExperimentReport check_monotonicity(double s, double t, int n, std::uint64_t seed) {
    if (!(0.0 < s && s < t && t < 1.0))
        throw std::invalid_argument("check_monotonicity: need 0 < s < t < 1");
    ExperimentReport rep;
    rep.name = "monotonicity";
    rep.params = "s=" + fmt(s) + " t=" + fmt(t) + " n=" + std::to_string(n);
    rep.grid_sizes = {n, 1024};

    const auto corpus = corpus_2d_interior(n, derive_seed(seed, kStreamMonotonicity), 20);
    double worst_order = -1e300, worst_l1 = -1e300;
    for (const auto& u : corpus) {
        if (boundary_sup(u) > 1.0 + tol::kExactSlack)
            throw std::logic_error("monotonicity corpus left the image class");
        const double tv_s = tv_primal_value(u, FracOrder(s), LpIndex(1.0));
        const double tv_t = tv_primal_value(u, FracOrder(t), LpIndex(1.0));
        worst_order = std::max(worst_order, tv_s - tv_t);
        worst_l1 = std::max(worst_l1, l1_integral(u) - tv_t);
    }
    rep.add("order_monotone", worst_order, tol::kMonotonicityC / n);
    rep.add("l1_below_tv", worst_l1, tol::kMonotonicityC / n);

    // 1D ramp closed form 1/((2-s)Gamma(2-s)), increasing in the order
    const int n_ramp = 1024;
    const Signal1D ramp = Signal1D::sample(n_ramp, [](double x) { return x; });
    const auto closed = [](double a) { return 1.0 / ((2.0 - a) * gamma_fn(2.0 - a)); };
    const double tv_ramp_s = tv_primal_value(ramp, FracOrder(s));
    const double tv_ramp_t = tv_primal_value(ramp, FracOrder(t));
    rep.add("ramp_closed_form_s", std::abs(tv_ramp_s - closed(s)) / closed(s),
            tol::kRampClosedFormRel);
    rep.add("ramp_closed_form_t", std::abs(tv_ramp_t - closed(t)) / closed(t),
            tol::kRampClosedFormRel);
    rep.add("ramp_increasing_in_order", tv_ramp_s - tv_ramp_t, 0.0);
    rep.finalize();
    return rep;
}

double interpolation_ratio(const Field2D& u, double r) {
    const FracOrder order(r);
    const double denom = l1_integral(u) + tv_primal_value(u, order, LpIndex(1.0));
    if (denom < 1e-300) return 0.0;
    return tv_primal_value(u, FracOrder(order.frac_part), LpIndex(1.0)) / denom;
}

ExperimentReport check_interpolation(int n, std::uint64_t seed, double r) {
    const FracOrder order(r);
    if (order.floor_part < 1 || order.frac_part == 0.0)
        throw std::invalid_argument("check_interpolation: need non-integer r > 1");
    ExperimentReport rep;
    rep.name = "interpolation";
    const int m = std::min(n, 128);
    rep.params = "r=" + fmt(r) + " n=" + std::to_string(m);
    rep.grid_sizes = {m, 2 * m};

    const std::uint64_t cs = derive_seed(seed, kStreamInterpolation);
    double max_ratio = 0.0, max_ratio_fine = 0.0;
    for (const auto& u : corpus_2d_interior(m, cs, 4))
        max_ratio = std::max(max_ratio, interpolation_ratio(u, r));
    for (const auto& u : corpus_2d_interior(2 * m, cs, 4))
        max_ratio_fine = std::max(max_ratio_fine, interpolation_ratio(u, r));

    rep.add("max_ratio", max_ratio, tol::kInterpolationMaxRatio);
    rep.add("grid_stability_rel", std::abs(max_ratio_fine - max_ratio) / std::max(max_ratio, 1e-300),
            tol::kInterpolationStability);
    rep.finalize();
    return rep;
}

// --- translation estimate -------------------------------------------------------

ExperimentReport check_translation_estimate(const Signal1D& w, double s,
                                            const std::vector<double>& shifts) {
    if (!(s > 0.0 && s < 1.0))
        throw std::invalid_argument("check_translation_estimate: need s in (0,1)");
    ExperimentReport rep;
    rep.name = "translation";
    const int n = w.grid.n;
    rep.params = "s=" + fmt(s) + " n=" + std::to_string(n) +
                 " shifts=" + std::to_string(shifts.size());
    rep.grid_sizes = {n};

    const double c_s = 1.0 / (gamma_fn(1.0 - s) * (1.0 - s)) + 1.0 / gamma_fn(1.0 + s);
    const double tv_s = tv_primal_value(w, FracOrder(s));
    const double boundary = std::max(std::abs(w.values.front()), std::abs(w.values.back()));
    const double sup = sup_abs(w);

    int max_cells = 1;
    for (double sh : shifts) max_cells = std::max(max_cells, int(std::lround(sh * n)));
    const Signal1D ext = extend_by_zero(w, max_cells + 1);

    for (double sh : shifts) {
        const int k = std::max(1, int(std::lround(sh * n)));
        const double hk = k * w.grid.h;  // realized shift distance
        const double lhs = l1_diff(translate(ext, -k), ext);
        const double rhs = std::pow(hk, s) * c_s * (tv_s + boundary) + 2.0 * sup * hk;
        rep.add("shift_" + fmt(sh), lhs, rhs);
    }
    rep.finalize();
    return rep;
}

// --- lower semi-continuity tail bounds -------------------------------------------

ExperimentReport check_lsc_order(const std::string& recipe, int n, std::uint64_t seed) {
    ExperimentReport rep;
    rep.name = "lsc_order";
    const int m = std::min(n, 128);
    rep.params = "recipe=" + recipe + " n=" + std::to_string(m);
    rep.grid_sizes = {m};
    (void)seed;  // recipes are deterministic constructions

    const Field2D base = reference_bump_2d(m);
    const LpIndex p(2.0);
    constexpr int kTailStart = 16, kLadderEnd = 64;

    const auto tail_min = [&](const std::function<double(int)>& order_of,
                              const std::function<Field2D(int)>& field_of) {
        double mn = 1e300;
        for (int idx = kTailStart; idx <= kLadderEnd; ++idx)
            mn = std::min(mn, tv_primal_value(field_of(idx), FracOrder(order_of(idx)), p));
        return mn;
    };

    if (recipe == "constant") {
        const double target = tv_primal_value(base, FracOrder(0.5), p);
        const double mn = tail_min([](int) { return 0.5; }, [&](int) { return base; });
        rep.add("tail_bound", target - mn, tol::kExactSlack * (1.0 + target), true);
    } else if (recipe == "oscillation") {
        const double target = tv_primal_value(base, FracOrder(0.5), p);
        const double mn = tail_min([](int idx) { return 0.5 + 1.0 / idx; },
                                   [&](int idx) {
                                       Field2D u = base;
                                       for (int iy = 0; iy <= m; ++iy)
                                           for (int ix = 0; ix <= m; ++ix)
                                               u.at(ix, iy) +=
                                                   std::sin(2.0 * 3.141592653589793 * idx *
                                                            u.grid.hx * ix) /
                                                   idx;
                                       return u;
                                   });
        rep.add("tail_bound", target - mn, tol::kLscC / m);
    } else if (recipe == "order_drift") {
        const double target = tv_primal_value(base, FracOrder(1.0), p);
        const double mn = tail_min([](int idx) { return 1.0 - 1.0 / idx; },
                                   [&](int) { return base; });
        rep.add("tail_bound_rel", (target - mn) / target, tol::kLscDriftRel);
    } else {
        throw std::invalid_argument("check_lsc_order: unknown recipe '" + recipe + "'");
    }
    rep.finalize();
    return rep;
}

// --- strict approximation scaling -------------------------------------------------

namespace {

double bilinear(const Field2D& u, double x, double y) {
    const int nx = u.grid.nx, ny = u.grid.ny;
    const double fx = std::clamp(x, 0.0, 1.0) / u.grid.hx;
    const double fy = std::clamp(y, 0.0, 1.0) / u.grid.hy;
    const int ix = std::min(static_cast<int>(fx), nx - 1);
    const int iy = std::min(static_cast<int>(fy), ny - 1);
    const double ax = fx - ix, ay = fy - iy;
    return (1.0 - ax) * (1.0 - ay) * u.at(ix, iy) + ax * (1.0 - ay) * u.at(ix + 1, iy) +
           (1.0 - ax) * ay * u.at(ix, iy + 1) + ax * ay * u.at(ix + 1, iy + 1);
}

Field2D center_scale(const Field2D& u, double eps) {
    Field2D out = u;
    for (int iy = 0; iy <= u.grid.ny; ++iy)
        for (int ix = 0; ix <= u.grid.nx; ++ix) {
            const double x = u.grid.hx * ix, y = u.grid.hy * iy;
            out.at(ix, iy) =
                bilinear(u, (x - 0.5) / (1.0 + eps) + 0.5, (y - 0.5) / (1.0 + eps) + 0.5);
        }
    return out;
}

double l1_field_diff(const Field2D& a, const Field2D& b) {
    Field2D d = a;
    for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] -= b.values[i];
    return l1_integral(d);
}

}  // namespace

ExperimentReport check_strict_approx_scaling(const Field2D& u, double r,
                                             const std::vector<double>& eps_ladder) {
    ExperimentReport rep;
    rep.name = "strict_approx";
    const int n = std::max(u.grid.nx, u.grid.ny);
    rep.params = "r=" + fmt(r) + " n=" + std::to_string(n);
    rep.grid_sizes = {n};

    const FracOrder order(r);
    const LpIndex p(2.0);
    const double tv_u = tv_primal_value(u, order, p);
    double prev_l1 = 1e300;
    for (double eps : eps_ladder) {  // ladder is decreasing
        const Field2D ue = center_scale(u, eps);
        const double tv_e = tv_primal_value(ue, order, p);
        const double bound = std::pow(1.0 + eps, order.floor_part + 1) * tv_u + tol::kStrictApproxC / n;
        rep.add("scaling_eps" + fmt(eps), tv_e, bound);
        const double l1 = l1_field_diff(ue, u);
        rep.add("l1_decreasing_eps" + fmt(eps), l1, prev_l1);
        prev_l1 = l1;
    }
    rep.finalize();
    return rep;
}

// --- suite runner ------------------------------------------------------------------

std::vector<ExperimentReport> run_suite(const std::vector<std::string>& names, int n,
                                        std::uint64_t seed) {
    using Job = std::function<ExperimentReport()>;
    std::vector<Job> jobs;
    const std::vector<std::string> known = {
        "power_rule",   "semigroup",    "integral_bound", "caputo",
        "order_limits", "tv_equivalence", "monotonicity", "interpolation",
        "translation",  "lsc_order",    "strict_approx"};

    const auto add_experiment = [&](const std::string& name) {
        if (name == "power_rule") {
            for (double s : {0.25, 0.5, 0.75})
                for (int k : {0, 1, 2}) jobs.push_back([=] { return check_power_rule(s, k, n); });
        } else if (name == "semigroup") {
            jobs.push_back([=] { return check_semigroup(0.5, 0.5, n, seed); });
            jobs.push_back([=] { return check_semigroup(0.3, 0.4, n, seed); });
            jobs.push_back([=] { return check_semigroup(1.0, 1.0, n, seed); });
        } else if (name == "integral_bound") {
            jobs.push_back([=] { return check_integral_bound(0.5, LpIndex(1.0), n, seed); });
            jobs.push_back([=] { return check_integral_bound(1.0, LpIndex(1.0), n, seed); });
            jobs.push_back([=] { return check_integral_bound(2.0, LpIndex::infinity(), n, seed); });
        } else if (name == "caputo") {
            jobs.push_back([=] { return check_caputo_equiv(0.5, n, seed); });
            jobs.push_back([=] { return check_caputo_equiv(1.5, n, seed); });
        } else if (name == "order_limits") {
            jobs.push_back([=] {
                std::vector<double> s_grid;
                for (int i = 1; i <= 19; ++i) s_grid.push_back(0.05 * i);
                return check_order_limits(n, s_grid);
            });
        } else if (name == "tv_equivalence") {
            const int m = std::min(n, 48);
            for (double r : {0.5, 1.0, 1.5})
                for (auto [q, p] : {std::pair<double, double>{1.0, 2.0},
                                    {1.0, std::numeric_limits<double>::infinity()},
                                    {2.0, std::numeric_limits<double>::infinity()}})
                    jobs.push_back([=] { return check_tv_equivalence(r, q, p, m, seed); });
        } else if (name == "monotonicity") {
            jobs.push_back([=] { return check_monotonicity(0.3, 0.7, n, seed); });
        } else if (name == "interpolation") {
            jobs.push_back([=] { return check_interpolation(n, seed, 1.5); });
        } else if (name == "translation") {
            for (double s : {0.3, 0.5, 0.7})
                jobs.push_back([=] {
                    ExperimentReport merged;
                    merged.name = "translation";
                    merged.params = "s=" + fmt(s) + " n=" + std::to_string(n) + " corpus=8";
                    merged.grid_sizes = {n};
                    const std::vector<double> shifts = {1.0 / 64, 1.0 / 32, 1.0 / 16, 1.0 / 8};
                    const auto corpus =
                        corpus_1d(n, derive_seed(seed, kStreamTranslation), 8, true);
                    int idx = 0;
                    for (const auto& w : corpus) {
                        const auto sub = check_translation_estimate(w, s, shifts);
                        for (const auto& c : sub.checks)
                            merged.add("w" + std::to_string(idx) + "_" + c.label, c.measured,
                                       c.bound);
                        ++idx;
                    }
                    merged.finalize();
                    return merged;
                });
        } else if (name == "lsc_order") {
            for (const char* recipe : {"constant", "oscillation", "order_drift"})
                jobs.push_back([=] { return check_lsc_order(recipe, n, seed); });
        } else if (name == "strict_approx") {
            const std::vector<double> ladder = {0.2, 0.1, 0.05};
            jobs.push_back([=] {
                return check_strict_approx_scaling(reference_bump_2d(std::min(n, 192)), 0.5, ladder);
            });
            jobs.push_back([=] {
                return check_strict_approx_scaling(reference_bump_2d(std::min(n, 192)), 1.5, ladder);
            });
        } else {
            throw std::invalid_argument("run_suite: unknown experiment '" + name + "'");
        }
    };

    bool all = false;
    for (const auto& name : names)
        if (name == "all") all = true;
    if (all)
        for (const auto& name : known) add_experiment(name);
    else
        for (const auto& name : names) add_experiment(name);

    std::vector<ExperimentReport> reports(jobs.size());
    parallel_for(static_cast<int>(jobs.size()), [&](int i) { reports[i] = jobs[i](); });
    return reports;
}

bool all_pass(const std::vector<ExperimentReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

void write_reports_csv(const std::vector<ExperimentReport>& reports, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << "name,params,measured,bound,margin,pass\n";
    for (const auto& r : reports) {
        const auto& w = r.worst();
        out << r.name << ",\"" << r.params << "\"," << fmt(w.measured) << "," << fmt(w.bound)
            << "," << fmt(w.margin) << "," << (r.pass ? "true" : "false") << "\n";
    }
    if (!out) throw std::runtime_error(path + ": write error");
}

void write_reports_json(const std::vector<ExperimentReport>& reports, const std::string& path) {
    nlohmann::json root = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json jr;
        jr["name"] = r.name;
        jr["params"] = r.params;
        jr["grid_sizes"] = r.grid_sizes;
        jr["pass"] = r.pass;
        jr["checks"] = nlohmann::json::array();
        for (const auto& c : r.checks)
            jr["checks"].push_back({{"label", c.label},
                                    {"measured", c.measured},
                                    {"bound", c.bound},
                                    {"margin", c.margin},
                                    {"pass", c.pass},
                                    {"exact", c.exact}});
        root.push_back(std::move(jr));
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << root.dump(2) << "\n";
    if (!out) throw std::runtime_error(path + ": write error");
}

}  // namespace fractv
