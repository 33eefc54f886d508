// fractv: fractional-order derivatives, integrals, TV^r semi-norms, an
// ROF-type denoiser, order search, and the verification suite.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fractv/corpus.hpp"
#include "fractv/denoise.hpp"
#include "fractv/frac1d.hpp"
#include "fractv/io.hpp"
#include "fractv/tvr.hpp"
#include "fractv/verify.hpp"

namespace {

using namespace fractv;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitVerifyFailed = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_lp(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF") return std::numeric_limits<double>::infinity();
    try {
        return std::stod(s);
    } catch (const std::exception&) {
        throw UsageError("--lp: expected a number or 'inf', got '" + s + "'");
    }
}

Side parse_side(const std::string& s) {
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    throw UsageError("--side: expected left|right, got '" + s + "'");
}

// 1D signal (single-column CSV) or 2D field (CSV matrix / PGM)
struct AnyInput {
    std::optional<Signal1D> signal;
    std::optional<Field2D> field;
};

AnyInput read_input(const std::string& path) {
    AnyInput in;
    try {
        if (path.size() > 4 && path.compare(path.size() - 4, 4, ".pgm") == 0) {
            in.field = read_field_pgm(path);
            return in;
        }
        std::ifstream probe(path);
        if (!probe) throw std::runtime_error(path + ": cannot open");
        std::string first_line;
        std::getline(probe, first_line);
        probe.close();
        if (first_line.find(',') == std::string::npos)
            in.signal = read_signal_csv(path);
        else
            in.field = read_field_csv(path);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    return in;
}

void write_like_input(const AnyInput& shape, const Signal1D* sig, const Field2D* fld,
                      const std::string& path) {
    if (sig) {
        write_signal_csv(*sig, path);
    } else if (fld) {
        if (path.size() > 4 && path.compare(path.size() - 4, 4, ".pgm") == 0)
            write_field_pgm(*fld, path);
        else
            write_field_csv(*fld, path);
    }
    (void)shape;
}

int cmd_deriv(const std::string& input, const std::string& output, double order,
              const std::string& side_s, const std::string& kind, int axis) {
    const AnyInput in = read_input(input);
    const Side side = parse_side(side_s);
    const FracOrder r(order);
    if (in.signal) {
        Signal1D out = *in.signal;
        if (kind == "rl")
            out = frac_derivative_rl(*in.signal, r, side);
        else if (kind == "caputo")
            out = frac_derivative_caputo(*in.signal, r, side);
        else if (kind == "revised")
            out = frac_derivative_revised(*in.signal, order);
        else
            throw UsageError("--kind: expected rl|caputo|revised");
        if (!output.empty())
            write_signal_csv(out, output);
        else
            for (double v : out.values) std::cout << format_double(v) << "\n";
    } else {
        if (kind != "rl") throw UsageError("2D inputs support --kind rl only");
        const Field2D out = partial_frac(*in.field, axis, r, side);
        if (output.empty()) throw UsageError("2D derivative needs --output");
        write_like_input(in, nullptr, &out, output);
    }
    return kExitOk;
}

int cmd_integral(const std::string& input, const std::string& output, double order,
                 const std::string& side_s) {
    const AnyInput in = read_input(input);
    if (!in.signal) throw UsageError("integral expects a 1D signal input");
    const Signal1D out = frac_integral(*in.signal, order, parse_side(side_s));
    if (!output.empty())
        write_signal_csv(out, output);
    else
        for (double v : out.values) std::cout << format_double(v) << "\n";
    return kExitOk;
}

int cmd_tv(const std::string& input, double order, double lp, const std::string& method,
           int trials, std::uint64_t seed) {
    const AnyInput in = read_input(input);
    const FracOrder r(order);
    const LpIndex p(lp);
    TVResult res;
    if (method == "primal")
        res = in.signal ? tv_primal(*in.signal, r, p) : tv_primal(*in.field, r, p);
    else if (method == "dual")
        res = in.signal ? tv_dual_estimate(*in.signal, r, p, trials, seed)
                        : tv_dual_estimate(*in.field, r, p, trials, seed);
    else
        throw UsageError("--method: expected primal|dual");
    std::cout << format_double(res.value) << "\n";
    std::cerr << res.to_json() << "\n";
    return kExitOk;
}

int cmd_denoise(const std::string& input, const std::string& output, const std::string& report,
                const DenoiseConfig& cfg) {
    const AnyInput in = read_input(input);
    nlohmann::json j;
    if (in.signal) {
        const DenoiseReport1D rep = denoise(*in.signal, cfg);
        if (!output.empty()) write_signal_csv(rep.output, output);
        j = {{"iterations", rep.iterations},
             {"converged", rep.converged},
             {"energy", rep.energy}};
    } else {
        const DenoiseReport rep = denoise(*in.field, cfg);
        if (!output.empty()) write_like_input(in, nullptr, &rep.output, output);
        j = {{"iterations", rep.iterations},
             {"converged", rep.converged},
             {"energy", rep.energy}};
    }
    j["config"] = {{"alpha", cfg.alpha}, {"r", cfg.r.r},       {"p", cfg.p.p},
                   {"eps", cfg.eps},     {"iters", cfg.max_iters}, {"tol", cfg.tol}};
    if (!report.empty()) {
        std::ofstream out(report);
        if (!out) throw std::runtime_error(report + ": cannot open for writing");
        out << j.dump(2) << "\n";
    }
    std::cout << "iterations=" << j["iterations"] << " converged=" << j["converged"]
              << " final_energy=" << format_double(j["energy"].back().get<double>()) << "\n";
    return kExitOk;
}

int cmd_order_search(const std::string& dataset_dir, const std::string& orders_spec,
                     const std::string& report, DenoiseConfig cfg, LossSpec loss) {
    Dataset ds;
    try {
        ds = load_dataset(dataset_dir);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    std::vector<double> orders;
    try {
        orders = parse_order_ladder(orders_spec);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--orders: ") + e.what());
    }
    const OrderSearchResult res = order_search(ds, orders, cfg, loss);
    if (!report.empty()) {
        std::ofstream out(report);
        if (!out) throw std::runtime_error(report + ": cannot open for writing");
        out << res.to_json(cfg, loss) << "\n";
    }
    std::cout << "best_r=" << format_double(res.best_r) << "\n";
    for (const auto& row : res.table)
        std::cout << "  r=" << format_double(row.r)
                  << " total_loss=" << format_double(row.total_loss) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite, int n, std::uint64_t seed, const std::string& report) {
    std::vector<std::string> names;
    std::size_t pos = 0;
    while (pos <= suite.size()) {
        auto comma = suite.find(',', pos);
        if (comma == std::string::npos) comma = suite.size();
        const std::string name = suite.substr(pos, comma - pos);
        if (!name.empty()) names.push_back(name);
        pos = comma + 1;
        if (comma == suite.size()) break;
    }
    if (names.empty()) {
        std::cout << "no experiments selected\n";
        return kExitOk;
    }
    const auto reports = run_suite(names, n, seed);
    for (const auto& r : reports)
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.params
                  << ") margin=" << format_double(r.worst().margin) << "\n";
    if (!report.empty()) {
        std::string json_path = report, csv_path = report;
        if (json_path.size() > 5 && json_path.compare(json_path.size() - 5, 5, ".json") == 0)
            csv_path = json_path.substr(0, json_path.size() - 5) + ".csv";
        else {
            json_path += ".json";
            csv_path += ".csv";
        }
        write_reports_json(reports, json_path);
        write_reports_csv(reports, csv_path);
    }
    const bool ok = all_pass(reports);
    std::cout << (ok ? "suite: PASS" : "suite: FAIL") << " (" << reports.size()
              << " experiments)\n";
    return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional-order total variation toolkit"};
    app.require_subcommand(1);

    std::string input, output, report, side = "left", kind = "rl", method = "primal";
    std::string dataset_dir, orders_spec, suite = "all";
    double order = 0.5, alpha = 0.1, eps = 1e-6, tolerance = 1e-6;
    double beta0 = 1.0, beta1 = 1.0, loss_lp = 1.0, loss_r = -1.0;
    int axis = 1, trials = 64, iters = 200, n = 256;
    std::uint64_t seed = 0;

    auto* deriv = app.add_subcommand("deriv", "fractional derivative of a signal/field");
    deriv->add_option("--input", input)->required();
    deriv->add_option("--output", output);
    deriv->add_option("--order", order)->required();
    deriv->add_option("--side", side);
    deriv->add_option("--kind", kind);
    deriv->add_option("--axis", axis);

    auto* integral = app.add_subcommand("integral", "fractional integral of a signal");
    integral->add_option("--input", input)->required();
    integral->add_option("--output", output);
    integral->add_option("--order", order)->required();
    integral->add_option("--side", side);

    auto* tv = app.add_subcommand("tv", "r-order total variation");
    tv->add_option("--input", input)->required();
    tv->add_option("--order", order)->required();
    std::string lp_str = "2";
    tv->add_option("--lp", lp_str);
    tv->add_option("--method", method);
    tv->add_option("--trials", trials);
    tv->add_option("--seed", seed);

    auto* den = app.add_subcommand("denoise", "ROF-type denoising");
    den->add_option("--input", input)->required();
    den->add_option("--output", output);
    den->add_option("--report", report);
    den->add_option("--alpha", alpha)->required();
    den->add_option("--order", order)->required();
    std::string den_lp = "2";
    den->add_option("--lp", den_lp);
    den->add_option("--eps", eps);
    den->add_option("--iters", iters);
    den->add_option("--tol", tolerance);

    auto* osearch = app.add_subcommand("order-search", "grid search over derivative orders");
    osearch->add_option("--dataset", dataset_dir)->required();
    osearch->add_option("--orders", orders_spec)->required();
    osearch->add_option("--report", report);
    osearch->add_option("--alpha", alpha);
    std::string os_lp = "2";
    osearch->add_option("--lp", os_lp);
    osearch->add_option("--eps", eps);
    osearch->add_option("--iters", iters);
    osearch->add_option("--tol", tolerance);
    osearch->add_option("--beta0", beta0);
    osearch->add_option("--beta1", beta1);
    osearch->add_option("--loss-lp", loss_lp);
    osearch->add_option("--loss-r", loss_r);

    auto* verify = app.add_subcommand("verify", "run verification experiments");
    verify->add_option("--suite", suite);
    verify->add_option("--n", n);
    verify->add_option("--seed", seed);
    verify->add_option("--report", report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitUsage : kExitOk;
    }

    try {
        if (deriv->parsed()) return cmd_deriv(input, output, order, side, kind, axis);
        if (integral->parsed()) return cmd_integral(input, output, order, side);
        if (tv->parsed()) return cmd_tv(input, order, parse_lp(lp_str), method, trials, seed);
        if (den->parsed() || osearch->parsed()) {
            DenoiseConfig cfg;
            cfg.alpha = alpha;
            cfg.r = FracOrder(order);
            cfg.p = LpIndex(parse_lp(den->parsed() ? den_lp : os_lp));
            cfg.eps = eps;
            cfg.max_iters = iters;
            cfg.tol = tolerance;
            if (den->parsed()) return cmd_denoise(input, output, report, cfg);
            LossSpec loss;
            loss.beta0 = beta0;
            loss.beta1 = beta1;
            loss.p = LpIndex(parse_lp(std::to_string(loss_lp)));
            if (loss_r > 0.0) loss.r = loss_r;
            return cmd_order_search(dataset_dir, orders_spec, report, cfg, loss);
        }
        if (verify->parsed()) return cmd_verify(suite, n, seed, report);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
