#pragma once

#include <string>
#include <vector>

#include "dumbbell/profile.hpp"

namespace dumbbell {

// One numerically verified inequality.  worst_margin is the signed distance
// to violation on the sampled grid; pass iff worst_margin > 0.
struct ClaimReport {
    std::string claim_id;
    std::string grid_spec;
    bool pass;
    double worst_margin;
};

// Step-function facts: the symmetry identity s(x)+s(1-x)=1, flat-tail decay
// of s^(n)(x) x^{-m} along dyadic x, and the log-space decay ratios with
// exponent budget a+b = 5/2.
std::vector<ClaimReport> verify_claim1();

// The two sides of the normalized comparison inequality behind the neck
// convexity argument, y in (0, 1/2]:
//   A(y) = (1 - 2y + 2y^2) / (y^2 (1-y)^2),  B(y) = 1 / ((1-y)(2y - y^2)).
double claim2_A(double y);
double claim2_B(double y);

// Neck convexity (g'' > 0 near x1) over an eps grid, and the comparison
// inequality A(x*) > B(x*) on (0, 1/2].  Empty grids select the documented
// defaults.
std::vector<ClaimReport> verify_claim2(const DumbbellParams& p,
                                       std::vector<double> eps_grid = {},
                                       std::vector<double> x_grid = {});

// Profile domination g_eps >= g_0 on (x1, x2), plus the finite-difference
// check that the neck profile is non-decreasing in eps.
ClaimReport verify_claim3(const DumbbellParams& p, std::vector<double> eps_grid = {},
                          std::vector<double> x_grid = {});

// Boundedness and decay of Q(x) = U^3/(c0 s) along x = x1 + R 2^{-k}, with a
// naive-vs-log dual-path consistency check where both are representable.
ClaimReport verify_claim4(const DumbbellParams& p, int k_lo = 3, int k_hi = 12);

// All seven reports in fixed order: C1_symmetry, C1_decay, C1_ratio,
// C2_positivity, C2_AB, C3_domination, C4_boundedness.
std::vector<ClaimReport> run_all_claims(const DumbbellParams& p);

}  // namespace dumbbell
