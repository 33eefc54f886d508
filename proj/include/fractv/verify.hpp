/// @file verify.hpp
/// @brief Numerical experiments that check the library's quantitative
///        guarantees at desk scale.  Each experiment returns a structured
///        pass/fail report; the suite runner shares one (n, seed) pair so
///        repeated runs are byte-identical.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fractv/grid.hpp"

namespace fractv {

struct ExperimentCheck {
    std::string label;
    double measured = 0.0;
    double bound = 0.0;
    double margin = 0.0;  // bound - measured; pass <=> margin >= 0
    bool pass = false;
    bool exact = false;   // machine-precision assertion (not on the C/n schedule)
};

struct ExperimentReport {
    std::string name;
    std::string params;
    std::vector<int> grid_sizes;
    std::vector<ExperimentCheck> checks;
    bool pass = false;

    void add(const std::string& label, double measured, double bound, bool exact = false);
    void finalize();
    const ExperimentCheck& worst() const;
};

// Single-statement experiments (parameters as in the suite; each is
// deterministic given its arguments).
ExperimentReport check_power_rule(double s, int k, int n);
ExperimentReport check_semigroup(double r1, double r2, int n, std::uint64_t seed);
ExperimentReport check_integral_bound(double r, LpIndex p, int n, std::uint64_t seed);
ExperimentReport check_caputo_equiv(double r, int n, std::uint64_t seed);
ExperimentReport check_order_limits(int n, const std::vector<double>& s_grid);
ExperimentReport check_tv_equivalence(double r, double q, double p, int n, std::uint64_t seed);
ExperimentReport check_monotonicity(double s, double t, int n, std::uint64_t seed);
ExperimentReport check_interpolation(int n, std::uint64_t seed, double r);
ExperimentReport check_translation_estimate(const Signal1D& w, double s,
                                            const std::vector<double>& shifts);
ExperimentReport check_lsc_order(const std::string& recipe, int n, std::uint64_t seed);
ExperimentReport check_strict_approx_scaling(const Field2D& u, double r,
                                             const std::vector<double>& eps_ladder);

/// TV^s(u) / (||u||_L1 + TV^r(u)) with the 0/0 -> 0 convention.
double interpolation_ratio(const Field2D& u, double r);

/// Suite runner.  Known names: power_rule, semigroup, integral_bound, caputo,
/// order_limits, tv_equivalence, monotonicity, interpolation, translation,
/// lsc_order, strict_approx, or "all".  Unknown names throw.
std::vector<ExperimentReport> run_suite(const std::vector<std::string>& names, int n,
                                        std::uint64_t seed);

bool all_pass(const std::vector<ExperimentReport>& reports);

/// One CSV row per experiment (worst check); JSON mirror carries every check.
void write_reports_csv(const std::vector<ExperimentReport>& reports, const std::string& path);
void write_reports_json(const std::vector<ExperimentReport>& reports, const std::string& path);

}  // namespace fractv
