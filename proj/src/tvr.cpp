#include "fractv/tvr.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "fractv/parallel.hpp"
#include "fractv/rng.hpp"

namespace fractv {

namespace {

// One mixed-partial component as the ordered list of (axis, order) sweeps
// applied to u; integer derivatives first, the fractional factor outermost.
struct OpChain {
    std::vector<std::pair<int, double>> ops;
};

std::vector<OpChain> component_chains(FracOrder r) {
    const int k = r.floor_part;
    std::vector<OpChain> chains{OpChain{}};
    for (int level = 0; level < k; ++level) {
        std::vector<OpChain> next;
        next.reserve(chains.size() * 2);
        for (const auto& c : chains)
            for (int axis = 1; axis <= 2; ++axis) {
                OpChain e = c;
                e.ops.emplace_back(axis, 1.0);
                next.push_back(std::move(e));
            }
        chains = std::move(next);
    }
    if (r.frac_part > 0.0) {
        std::vector<OpChain> next;
        next.reserve(chains.size() * 2);
        // the fractional slot is the outermost (most significant) index digit
        for (int axis = 1; axis <= 2; ++axis)
            for (const auto& c : chains) {
                OpChain e = c;
                e.ops.emplace_back(axis, r.frac_part);
                next.push_back(std::move(e));
            }
        chains = std::move(next);
    }
    return chains;
}

Field2D apply_chain(const Field2D& u, const OpChain& chain) {
    Field2D v = u;
    for (auto [axis, order] : chain.ops) v = partial_frac(v, axis, FracOrder(order), Side::left);
    return v;
}

Field2D apply_chain_transpose(const Field2D& w, const OpChain& chain) {
    Field2D v = w;
    for (auto it = chain.ops.rbegin(); it != chain.ops.rend(); ++it)
        v = detail::partial_transpose(v, it->first, it->second, Side::left);
    return v;
}

int tensor_rank(FracOrder r) { return r.floor_part + (r.frac_part > 0.0 ? 1 : 0); }

}  // namespace

TensorField2D mixed_partial_tensor(const Field2D& u, FracOrder r) {
    const auto chains = component_chains(r);
    TensorField2D t(u.grid, tensor_rank(r));
    for (std::size_t c = 0; c < chains.size(); ++c) t.comps[c] = apply_chain(u, chains[c]);
    return t;
}

double tensor_node_norm(const TensorField2D& t, int node, LpIndex p) {
    const int m = t.num_components();
    if (m == 1) return std::abs(t.comps[0].values[node]);
    const int half = m / 2;
    double inner[2] = {0.0, 0.0};
    for (int c = 0; c < m; ++c) inner[c / half] += std::abs(t.comps[c].values[node]);
    if (p.is_inf()) return std::max(inner[0], inner[1]);
    if (p.p == 1.0) return inner[0] + inner[1];
    if (p.p == 2.0) return std::hypot(inner[0], inner[1]);
    return std::pow(std::pow(inner[0], p.p) + std::pow(inner[1], p.p), 1.0 / p.p);
}

double tv_primal_value(const Field2D& u, FracOrder r, LpIndex p) {
    require_finite(u, "tv_primal");
    const TensorField2D t = mixed_partial_tensor(u, r);
    double acc = 0.0;
    for (int iy = 0; iy <= u.grid.ny; ++iy)
        for (int ix = 0; ix <= u.grid.nx; ++ix) {
            const int node = u.index(ix, iy);
            acc += trapezoid_weight(u.grid, ix, iy) * tensor_node_norm(t, node, p);
        }
    return acc;
}

double tv_primal_value(const Signal1D& w, FracOrder r) {
    require_finite(w, "tv_primal");
    Signal1D v = w;
    for (int level = 0; level < r.floor_part; ++level)
        v = frac_derivative_rl(v, FracOrder(1.0), Side::left);
    if (r.frac_part > 0.0) v = frac_derivative_rl(v, FracOrder(r.frac_part), Side::left);
    return l1_integral(v);
}

TVResult tv_primal(const Field2D& u, FracOrder r, LpIndex p) {
    TVResult res;
    res.value = tv_primal_value(u, r, p);
    res.r = r.r;
    res.p = p.p;
    res.method = "primal";
    res.n = std::max(u.grid.nx, u.grid.ny);
    return res;
}

TVResult tv_primal(const Signal1D& w, FracOrder r, LpIndex p) {
    TVResult res;
    res.value = tv_primal_value(w, r);
    res.r = r.r;
    res.p = p.p;
    res.method = "primal";
    res.n = w.grid.n;
    return res;
}

// --- dual estimator ----------------------------------------------------------

namespace {

// random low-order trig polynomial, degree <= 8 per axis
struct TrigPoly {
    struct Term {
        double amp;
        int jx, jy;
        bool sinx, siny;
    };
    std::vector<Term> terms;

    static TrigPoly random(Rng& rng, bool two_dim) {
        TrigPoly p;
        const int count = rng.uniform_int(3, 6);
        p.terms.reserve(count);
        for (int t = 0; t < count; ++t)
            p.terms.push_back({rng.uniform(-1.0, 1.0), rng.uniform_int(0, 8),
                               two_dim ? rng.uniform_int(0, 8) : 0,
                               static_cast<bool>(rng.next_u64() & 1u),
                               two_dim && static_cast<bool>(rng.next_u64() & 1u)});
        return p;
    }

    double eval(double x, double y) const {
        constexpr double kPi = 3.141592653589793238462643383279502884;
        double s = 0.0;
        for (const auto& t : p_terms()) {
            const double fx = t.sinx ? std::sin(kPi * t.jx * x) : std::cos(kPi * t.jx * x);
            const double fy = t.siny ? std::sin(kPi * t.jy * y) : std::cos(kPi * t.jy * y);
            s += t.amp * fx * fy;
        }
        return s;
    }

    const std::vector<Term>& p_terms() const { return terms; }
};

// pointwise dual norm of the nested tensor norm: l^{p*} across the outer
// digit of the max across inner digits
double dual_node_norm(const std::vector<std::vector<double>>& comps, std::size_t node, LpIndex p) {
    const int m = static_cast<int>(comps.size());
    if (m == 1) return std::abs(comps[0][node]);
    const int half = m / 2;
    double inner[2] = {0.0, 0.0};
    for (int c = 0; c < m; ++c)
        inner[c / half] = std::max(inner[c / half], std::abs(comps[c][node]));
    const LpIndex q = p.dual();
    if (q.is_inf()) return std::max(inner[0], inner[1]);
    if (q.p == 1.0) return inner[0] + inner[1];
    return std::pow(std::pow(inner[0], q.p) + std::pow(inner[1], q.p), 1.0 / q.p);
}

double dual_trial_2d(const Field2D& u, FracOrder r, LpIndex p, std::uint64_t trial_seed) {
    Rng rng(trial_seed);
    const int rank = r.floor_part + 1;
    TensorField2D phi(u.grid, rank);
    const int nx = u.grid.nx, ny = u.grid.ny;
    for (auto& comp : phi.comps) {
        const TrigPoly poly = TrigPoly::random(rng, true);
        for (int iy = 0; iy <= ny; ++iy)
            for (int ix = 0; ix <= nx; ++ix) {
                const double x = u.grid.hx * ix, y = u.grid.hy * iy;
                comp.at(ix, iy) = 16.0 * x * (1.0 - x) * y * (1.0 - y) * poly.eval(x, y);
            }
    }
    std::vector<std::vector<double>> views;
    views.reserve(phi.comps.size());
    for (auto& c : phi.comps) views.push_back(c.values);
    double maxdual = 0.0;
    for (std::size_t node = 0; node < u.values.size(); ++node)
        maxdual = std::max(maxdual, dual_node_norm(views, node, p));
    if (maxdual <= 0.0) return 0.0;
    for (auto& c : phi.comps)
        for (double& v : c.values) v /= maxdual;

    const Field2D d = div_r(phi, r);
    double pairing = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) pairing += u.values[i] * d.values[i];
    return std::abs(pairing * u.grid.hx * u.grid.hy);
}

double dual_trial_1d(const Signal1D& w, FracOrder r, std::uint64_t trial_seed) {
    Rng rng(trial_seed);
    const TrigPoly poly = TrigPoly::random(rng, false);
    const int n = w.grid.n;
    Signal1D phi = w;
    double maxabs = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double x = w.grid.node(i);
        phi.values[i] = 4.0 * x * (1.0 - x) * poly.eval(x, 0.0);
        maxabs = std::max(maxabs, std::abs(phi.values[i]));
    }
    if (maxabs <= 0.0) return 0.0;
    for (double& v : phi.values) v /= maxabs;

    // 1D div_r: scale factor is 1; test-side sweep = -(raw right) per level
    Signal1D d = phi;
    for (int level = 0; level < r.floor_part; ++level) {
        d = detail::frac_derivative_rl_raw(d, FracOrder(1.0), Side::right);
        for (double& v : d.values) v = -v;
    }
    d = detail::frac_derivative_rl_raw(d, FracOrder(r.frac_part), Side::right);
    for (double& v : d.values) v = -v;

    double pairing = 0.0;
    for (int i = 0; i <= n; ++i) pairing += w.values[i] * d.values[i];
    return std::abs(pairing * w.grid.h);
}

}  // namespace

TVResult tv_dual_estimate(const Field2D& u, FracOrder r, LpIndex p, int trials,
                          std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("tv_dual_estimate: need trials >= 1");
    std::vector<double> vals(trials, 0.0);
    parallel_for(trials, [&](int t) { vals[t] = dual_trial_2d(u, r, p, derive_seed(seed, t)); });
    TVResult res;
    res.value = *std::max_element(vals.begin(), vals.end());
    res.r = r.r;
    res.p = p.p;
    res.method = "dual";
    res.n = std::max(u.grid.nx, u.grid.ny);
    res.trials = trials;
    res.seed = seed;
    return res;
}

TVResult tv_dual_estimate(const Signal1D& w, FracOrder r, LpIndex p, int trials,
                          std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("tv_dual_estimate: need trials >= 1");
    std::vector<double> vals(trials, 0.0);
    parallel_for(trials, [&](int t) { vals[t] = dual_trial_1d(w, r, derive_seed(seed, t)); });
    TVResult res;
    res.value = *std::max_element(vals.begin(), vals.end());
    res.r = r.r;
    res.p = p.p;
    res.method = "dual";
    res.n = w.grid.n;
    res.trials = trials;
    res.seed = seed;
    return res;
}

// --- loss and ROF energy ------------------------------------------------------

double tvr_loss(const Field2D& u, const Field2D& v, FracOrder r, LpIndex p, double beta0,
                double beta1) {
    if (!(u.grid == v.grid)) throw std::invalid_argument("tvr_loss: shape mismatch");
    if (beta0 < 0.0 || beta1 < 0.0) throw std::invalid_argument("tvr_loss: need beta >= 0");
    Field2D diff = u;
    for (std::size_t i = 0; i < diff.values.size(); ++i) diff.values[i] -= v.values[i];
    double loss = 0.0;
    if (beta0 > 0.0) loss += beta0 * l1_integral(diff);
    if (beta1 > 0.0) loss += beta1 * tv_primal_value(diff, r, p);
    return loss;
}

namespace {

// Smoothed pointwise tensor norm and its derivative w.r.t. each component.
// p = 2: flat isotropic sqrt(sum T_c^2 + eps^2) - eps (smooth everywhere);
// p = 1: componentwise Huber.
double smoothed_norm(const std::vector<double>& t, LpIndex p, double eps,
                     std::vector<double>* dnorm) {
    if (p.p == 2.0) {
        double sq = eps * eps;
        for (double v : t) sq += v * v;
        const double root = std::sqrt(sq);
        if (dnorm)
            for (std::size_t c = 0; c < t.size(); ++c) (*dnorm)[c] = t[c] / root;
        return root - eps;
    }
    if (p.p == 1.0) {
        double s = 0.0;
        for (std::size_t c = 0; c < t.size(); ++c) {
            const double a = std::abs(t[c]);
            if (a <= eps) {
                s += 0.5 * t[c] * t[c] / eps;
                if (dnorm) (*dnorm)[c] = t[c] / eps;
            } else {
                s += a - 0.5 * eps;
                if (dnorm) (*dnorm)[c] = (t[c] > 0.0) ? 1.0 : -1.0;
            }
        }
        return s;
    }
    throw std::invalid_argument("rof_energy: smoothed norm defined for p in {1, 2} only");
}

}  // namespace

double rof_energy_grad(const Field2D& u, const Field2D& u_eta, double alpha, FracOrder r,
                       LpIndex p, double eps, Field2D* grad) {
    if (!(u.grid == u_eta.grid)) throw std::invalid_argument("rof_energy: shape mismatch");
    if (!(alpha > 0.0)) throw std::invalid_argument("rof_energy: need alpha > 0");
    if (!(eps > 0.0)) throw std::invalid_argument("rof_energy: need eps > 0");

    const auto chains = component_chains(r);
    std::vector<Field2D> comps;
    comps.reserve(chains.size());
    for (const auto& c : chains) comps.push_back(apply_chain(u, c));

    std::vector<Field2D> weighted;
    if (grad) weighted.assign(comps.size(), Field2D::zeros(u.grid.nx, u.grid.ny));

    double fidelity = 0.0, tv = 0.0;
    std::vector<double> t(comps.size()), dn(comps.size());
    for (int iy = 0; iy <= u.grid.ny; ++iy)
        for (int ix = 0; ix <= u.grid.nx; ++ix) {
            const int node = u.index(ix, iy);
            const double w = trapezoid_weight(u.grid, ix, iy);
            const double diff = u.values[node] - u_eta.values[node];
            fidelity += w * diff * diff;
            for (std::size_t c = 0; c < comps.size(); ++c) t[c] = comps[c].values[node];
            tv += w * smoothed_norm(t, p, eps, grad ? &dn : nullptr);
            if (grad)
                for (std::size_t c = 0; c < comps.size(); ++c)
                    weighted[c].values[node] = w * dn[c];
        }

    if (grad) {
        *grad = Field2D::zeros(u.grid.nx, u.grid.ny);
        for (int iy = 0; iy <= u.grid.ny; ++iy)
            for (int ix = 0; ix <= u.grid.nx; ++ix) {
                const int node = u.index(ix, iy);
                grad->values[node] = 2.0 * trapezoid_weight(u.grid, ix, iy) *
                                     (u.values[node] - u_eta.values[node]);
            }
        for (std::size_t c = 0; c < comps.size(); ++c) {
            const Field2D back = apply_chain_transpose(weighted[c], chains[c]);
            for (std::size_t i = 0; i < grad->values.size(); ++i)
                grad->values[i] += alpha * back.values[i];
        }
    }
    return fidelity + alpha * tv;
}

double rof_energy(const Field2D& u, const Field2D& u_eta, double alpha, FracOrder r, LpIndex p,
                  double eps) {
    return rof_energy_grad(u, u_eta, alpha, r, p, eps, nullptr);
}

std::string TVResult::to_json() const {
    nlohmann::json j;
    j["value"] = value;
    j["r"] = r;
    j["p"] = std::isinf(p) ? nlohmann::json("inf") : nlohmann::json(p);
    j["method"] = method;
    j["n"] = n;
    j["trials"] = trials;
    j["seed"] = seed;
    return j.dump();
}

}  // namespace fractv
