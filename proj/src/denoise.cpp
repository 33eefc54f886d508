#include "fractv/denoise.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "fractv/frac1d.hpp"
#include "fractv/parallel.hpp"

namespace fractv {

void DenoiseConfig::validate() const {
    if (!(alpha > 0.0)) throw std::invalid_argument("DenoiseConfig: need alpha > 0");
    if (!(eps > 0.0)) throw std::invalid_argument("DenoiseConfig: need eps > 0");
    if (max_iters < 1) throw std::invalid_argument("DenoiseConfig: need max_iters >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("DenoiseConfig: need tol > 0");
    if (p.p != 1.0 && p.p != 2.0)
        throw std::invalid_argument("DenoiseConfig: smoothed solver supports p in {1, 2}");
}

double DenoiseConfig::initial_step(double h) const {
    return 1.0 / (8.0 * alpha * std::pow(h, -2.0 * r.r) + 2.0);
}

namespace {

struct DescentTrace {
    std::vector<double> values;
    std::vector<double> energy;
    int iterations = 0;
    bool converged = false;
};

// Backtracking gradient descent over a flat value vector.  energy_grad must
// return the energy and, when grad != nullptr, fill the gradient.
DescentTrace descend(std::vector<double> u, const DenoiseConfig& cfg, double step0,
                     const std::function<double(const std::vector<double>&,
                                                std::vector<double>*)>& energy_grad) {
    DescentTrace out;
    std::vector<double> grad(u.size()), trial(u.size());
    double energy = energy_grad(u, &grad);
    if (!std::isfinite(energy))
        throw std::runtime_error("denoise: non-finite energy at iteration 0");
    out.energy.push_back(energy);

    double step = step0;
    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
        double trial_energy = 0.0;
        bool accepted = false;
        while (step > 1e-300) {
            for (std::size_t i = 0; i < u.size(); ++i) trial[i] = u[i] - step * grad[i];
            trial_energy = energy_grad(trial, nullptr);
            if (std::isfinite(trial_energy) && trial_energy <= energy) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {  // no descent direction at representable step sizes
            out.converged = true;
            break;
        }
        u.swap(trial);
        const double prev = energy;
        energy = energy_grad(u, &grad);
        if (!std::isfinite(energy))
            throw std::runtime_error("denoise: non-finite energy at iteration " +
                                     std::to_string(iter));
        out.energy.push_back(energy);
        out.iterations = iter;
        const double rel = (prev - energy) / std::max(std::abs(prev), 1e-300);
        if (rel < cfg.tol) {
            out.converged = true;
            break;
        }
        step *= 1.2;  // recover from over-conservative halving
    }
    out.values = std::move(u);
    return out;
}

}  // namespace

DenoiseReport denoise(const Field2D& u_eta, const DenoiseConfig& cfg) {
    cfg.validate();
    require_finite(u_eta, "denoise");
    const double h = std::min(u_eta.grid.hx, u_eta.grid.hy);
    // the Lipschitz surrogate is stated for the unweighted node sums; the
    // trapezoid-weighted gradient carries an extra cell-measure factor
    const double step0 = cfg.step > 0.0
                             ? cfg.step
                             : cfg.initial_step(h) / (u_eta.grid.hx * u_eta.grid.hy);

    auto energy_grad = [&](const std::vector<double>& vals, std::vector<double>* g) {
        Field2D u(u_eta.grid, vals);
        if (!g) return rof_energy(u, u_eta, cfg.alpha, cfg.r, cfg.p, cfg.eps);
        Field2D gf;
        const double e = rof_energy_grad(u, u_eta, cfg.alpha, cfg.r, cfg.p, cfg.eps, &gf);
        *g = std::move(gf.values);
        return e;
    };

    DescentTrace t = descend(u_eta.values, cfg, step0, energy_grad);
    DenoiseReport rep;
    rep.output = Field2D(u_eta.grid, std::move(t.values));
    rep.energy = std::move(t.energy);
    rep.iterations = t.iterations;
    rep.converged = t.converged;
    return rep;
}

namespace {

// 1D smoothed ROF energy: trapezoid L^2 fidelity plus the smoothed |.| of the
// single mixed-derivative chain d^s d^floor(r) u.
double rof_energy_grad_1d(const Signal1D& u, const Signal1D& eta, const DenoiseConfig& cfg,
                          Signal1D* grad) {
    const int n = u.grid.n;
    Signal1D t = u;
    for (int level = 0; level < cfg.r.floor_part; ++level)
        t = frac_derivative_rl(t, FracOrder(1.0), Side::left);
    if (cfg.r.frac_part > 0.0) t = frac_derivative_rl(t, FracOrder(cfg.r.frac_part), Side::left);

    double fidelity = 0.0, tv = 0.0;
    Signal1D weighted = u;
    for (int i = 0; i <= n; ++i) {
        const double w = trapezoid_weight(u.grid, i);
        const double diff = u.values[i] - eta.values[i];
        fidelity += w * diff * diff;
        const double x = t.values[i];
        if (cfg.p.p == 2.0) {
            const double root = std::sqrt(x * x + cfg.eps * cfg.eps);
            tv += w * (root - cfg.eps);
            weighted.values[i] = w * x / root;
        } else {  // Huber
            const double a = std::abs(x);
            if (a <= cfg.eps) {
                tv += w * 0.5 * x * x / cfg.eps;
                weighted.values[i] = w * x / cfg.eps;
            } else {
                tv += w * (a - 0.5 * cfg.eps);
                weighted.values[i] = w * (x > 0.0 ? 1.0 : -1.0);
            }
        }
    }
    if (grad) {
        Signal1D back = weighted;
        if (cfg.r.frac_part > 0.0) back = adjoint_apply(back, FracOrder(cfg.r.frac_part), Side::left);
        for (int level = 0; level < cfg.r.floor_part; ++level)
            back = adjoint_apply(back, FracOrder(1.0), Side::left);
        *grad = u;
        for (int i = 0; i <= n; ++i)
            grad->values[i] = 2.0 * trapezoid_weight(u.grid, i) * (u.values[i] - eta.values[i]) +
                              cfg.alpha * back.values[i];
    }
    return fidelity + cfg.alpha * tv;
}

}  // namespace

DenoiseReport1D denoise(const Signal1D& w_eta, const DenoiseConfig& cfg) {
    cfg.validate();
    require_finite(w_eta, "denoise");
    const double step0 =
        cfg.step > 0.0 ? cfg.step : cfg.initial_step(w_eta.grid.h) / w_eta.grid.h;

    auto energy_grad = [&](const std::vector<double>& vals, std::vector<double>* g) {
        Signal1D u(w_eta.grid, vals);
        if (!g) return rof_energy_grad_1d(u, w_eta, cfg, nullptr);
        Signal1D gs;
        const double e = rof_energy_grad_1d(u, w_eta, cfg, &gs);
        *g = std::move(gs.values);
        return e;
    };

    DescentTrace t = descend(w_eta.values, cfg, step0, energy_grad);
    DenoiseReport1D rep;
    rep.output = Signal1D(w_eta.grid, std::move(t.values));
    rep.energy = std::move(t.energy);
    rep.iterations = t.iterations;
    rep.converged = t.converged;
    return rep;
}

OrderSearchResult order_search(const Dataset& ds, const std::vector<double>& orders,
                               const DenoiseConfig& cfg_base, const LossSpec& loss) {
    if (ds.pairs.empty()) throw std::invalid_argument("order_search: empty dataset");
    if (orders.empty()) throw std::invalid_argument("order_search: no candidate orders");
    for (double r : orders)
        if (!(r > 0.0)) throw std::invalid_argument("order_search: orders must be > 0");

    std::vector<double> sorted = orders;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    const int num_orders = static_cast<int>(sorted.size());
    const int num_pairs = static_cast<int>(ds.pairs.size());
    std::vector<std::vector<double>> losses(num_orders, std::vector<double>(num_pairs, 0.0));

    parallel_for(num_orders * num_pairs, [&](int job) {
        const int oi = job / num_pairs;
        const int pi = job % num_pairs;
        DenoiseConfig cfg = cfg_base;
        cfg.r = FracOrder(sorted[oi]);
        try {
            const DenoiseReport rep = denoise(ds.pairs[pi].noisy, cfg);
            const FracOrder r_loss(loss.r ? *loss.r : sorted[oi]);
            losses[oi][pi] =
                tvr_loss(rep.output, ds.pairs[pi].clean, r_loss, loss.p, loss.beta0, loss.beta1);
        } catch (const std::exception& e) {
            throw std::runtime_error("order_search: candidate r=" + std::to_string(sorted[oi]) +
                                     ", pair '" + ds.pairs[pi].name + "': " + e.what());
        }
    });

    OrderSearchResult res;
    res.table.reserve(num_orders);
    for (int oi = 0; oi < num_orders; ++oi) {
        OrderSearchResult::Row row;
        row.r = sorted[oi];
        row.per_pair = losses[oi];
        row.total_loss = 0.0;
        for (double l : losses[oi]) row.total_loss += l;
        res.table.push_back(std::move(row));
    }
    // argmin with ties toward the smallest r (rows are ascending)
    int best = 0;
    for (int oi = 1; oi < num_orders; ++oi)
        if (res.table[oi].total_loss < res.table[best].total_loss) best = oi;
    res.best_r = res.table[best].r;
    return res;
}

std::string OrderSearchResult::to_json(const DenoiseConfig& cfg, const LossSpec& loss) const {
    nlohmann::json j;
    j["best_r"] = best_r;
    j["table"] = nlohmann::json::array();
    for (const auto& row : table)
        j["table"].push_back({{"r", row.r}, {"total_loss", row.total_loss}, {"per_pair", row.per_pair}});
    j["config"] = {{"alpha", cfg.alpha},
                   {"p", cfg.p.p},
                   {"eps", cfg.eps},
                   {"max_iters", cfg.max_iters},
                   {"tol", cfg.tol},
                   {"beta0", loss.beta0},
                   {"beta1", loss.beta1},
                   {"loss_p", loss.p.p},
                   {"loss_r", loss.r ? nlohmann::json(*loss.r) : nlohmann::json("candidate")}};
    return j.dump(2);
}

}  // namespace fractv
