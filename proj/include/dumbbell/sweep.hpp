#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dumbbell {

struct SweepConfig {
    double R = 2.0;
    double L = 1.0;
    std::vector<double> eps = {0.2, 0.1, 0.05, 0.025};  // 1/i, i = 5..40 dyadic
    double p = 1.5;
    double K = 0.0;
    int grid_n = 4000;
    int m_max = 2;
    int k_eigs = 4;
    int jobs = 1;
    double tol_quad = 1e-10;
};

struct SweepRow {
    double eps = 0.0;
    double lambda1 = 0.0;
    double rayleigh_bound = 0.0;  // 2*eps/(L*R^2)
    double kbar_p0 = 0.0;
    double kbar_pK = 0.0;
    double M1_est = 0.0;
    double M2_est = 0.0;
    double area = 0.0;
    double meridian_length = 0.0;
    double diam_bound = 0.0;
    double gauss_bonnet = 0.0;
    double convergence_gap = 0.0;
    std::string status = "ok";  // error text when a computation failed
};

// eps = 1/i for i = i0, 2*i0, 4*i0, ... <= i1.
std::vector<double> dyadic_eps(int i0, int i1);

// One row per eps, computed concurrently up to config.jobs and assembled in
// the configured (descending) eps order.  Per-row failures are recorded in
// the row's status field, never thrown.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

// Empty string when every row is "ok" and all row/column invariants hold
// (lambda1 below the test-function bound and strictly decreasing, Minkowski
// chain for kbar, area sandwich, meridian below the diameter bound,
// Gauss-Bonnet within 1e-6 relative); otherwise the first violation.
std::string check_sweep_invariants(const SweepConfig& config,
                                   const std::vector<SweepRow>& rows);

// 12 significant digits; reruns must be byte-identical.
std::string fmt_sig12(double v);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_sweep_json(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace dumbbell
