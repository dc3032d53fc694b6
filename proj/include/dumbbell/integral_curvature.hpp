#pragma once

#include "dumbbell/profile.hpp"

namespace dumbbell {

struct IntegralCurvatureResult {
    double p;
    double K;
    double area;
    double rho_integral;  // integral of rho_K^p over the surface
    double kbar;          // (rho_integral / area)^{1/p}
};

// Pointwise curvature deficiency max(K - kappa, 0) (two-dimensional case:
// the Ricci eigenvalue is the Gaussian curvature).  Requires K >= 0.
double rho_K(double kappa, double K);

// Area-normalized L^p norm of rho_K.  Requires p > 1, K >= 0.  Cylinder and
// cap contributions are closed-form (kappa is exactly 0 resp. 1/R^2 there);
// the neck is adaptive quadrature with dyadic refinement toward x1, where the
// integrand vanishes to all orders.
IntegralCurvatureResult kbar(const ProfileCurve& curve, double p, double K,
                             double rel_tol = 1e-10);

struct NeckBounds {
    double M1_est;       // eps-independent majorant integral over [x1, xi]
    double M2_est;       // direct integral of sqrt(|g''|^3/g) over [xi, x1+R]
    double neck_lp;      // integral of (kappa^-)^{3/2} over the whole surface
    double chain_slack;  // 2*pi*(M1+M2) - neck_lp, must be >= 0
};

// The two bounding integrals behind the uniform k-bar estimate, split at xi.
// Requires x1 < xi <= x1 + R/4.  Also recomputes the negative-curvature norm
// directly and checks it against 2*pi*(M1+M2); a violation throws.
NeckBounds neck_bound_integrals(const DumbbellParams& p, double xi,
                                double rel_tol = 1e-10);

// Majorant U(x) of |g''| on (x1, x1+R/4], independent of eps:
//   U = 4/(sqrt(3) R) c0'(x) s'(2(x-x1)/R) + 4/(3R^2) c0(x) s''(2(x-x1)/R)
// with c0 the eps=0 semicircle (centered at x1+R).  Both terms are positive
// on the stated interval.
double majorant_U(const DumbbellParams& p, double x);

// log of Q(x) = U(x)^3 / (c0(x) s((x-x1)/R)), assembled fully in log space:
// naive evaluation is 0/0 in doubles within ~R/100 of x1.
double log_majorant_Q(const DumbbellParams& p, double x);

}  // namespace dumbbell
