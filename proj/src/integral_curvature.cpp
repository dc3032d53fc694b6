#include "dumbbell/integral_curvature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dumbbell/geometry.hpp"
#include "dumbbell/quadrature.hpp"
#include "dumbbell/smoothstep.hpp"

namespace dumbbell {

double rho_K(double kappa, double K) {
    if (!(K >= 0.0)) throw std::domain_error("rho_K: K must be >= 0");
    return std::max(K - kappa, 0.0);
}

IntegralCurvatureResult kbar(const ProfileCurve& curve, double p, double K,
                             double rel_tol) {
    if (!(p > 1.0)) throw std::domain_error("kbar: requires p > 1");
    if (!(K >= 0.0)) throw std::domain_error("kbar: requires K >= 0");
    const auto& par = curve.params();
    if (!(par.eps > 0.0)) throw std::domain_error("kbar: surface requires eps > 0");

    const double cyl = std::pow(rho_K(0.0, K), p) * 2.0 * M_PI * par.eps * par.x1;
    const double cap =
        std::pow(rho_K(1.0 / (par.R * par.R), K), p) * 2.0 * M_PI * par.R * par.R;
    auto f = [&](double x) {
        return std::pow(rho_K(gaussian_curvature(curve, x), K), p) *
               area_element(curve, x);
    };
    const double neck = integrate_segments(f, par.x1, par.x2,
                                           graded_splits(par.x1, par.x2), rel_tol);
    IntegralCurvatureResult res;
    res.p = p;
    res.K = K;
    res.area = surface_area(curve, rel_tol);
    res.rho_integral = 2.0 * (cyl + neck + cap);
    res.kbar = std::pow(res.rho_integral / res.area, 1.0 / p);
    return res;
}

double majorant_U(const DumbbellParams& p, double x) {
    if (x <= p.x1) return 0.0;  // s', s'' vanish; avoids inf*0 from c0' at x1
    const double d = x - (p.x1 + p.R);
    const double c0 = std::sqrt(std::max(p.R * p.R - d * d, 0.0));
    const double c0p = -d / c0;
    const StepEval st = step_eval(2.0 * (x - p.x1) / p.R);
    return 4.0 / (std::sqrt(3.0) * p.R) * c0p * st.s1 +
           4.0 / (3.0 * p.R * p.R) * c0 * st.s2;
}

double log_majorant_Q(const DumbbellParams& p, double x) {
    if (!(x < p.x1 + p.R))
        throw std::domain_error("log_majorant_Q: x must lie below x1 + R");
    // Q -> 0 as x -> x1+ (every factor vanishes faster than s); continuous
    // log-extension keeps quadrature nodes that round onto x1 harmless.
    if (x <= p.x1) return -HUGE_VAL;
    const double d = x - (p.x1 + p.R);
    const double c0 = std::sqrt(std::max(p.R * p.R - d * d, 0.0));
    const double c0p = -d / c0;
    const double u = 2.0 * (x - p.x1) / p.R;
    // Both U terms are positive for u in (0, 1/2]; log-sum-exp them.
    const double la =
        std::log(4.0 / (std::sqrt(3.0) * p.R)) + std::log(c0p) + log_step_d1(u);
    const double lb =
        std::log(4.0 / (3.0 * p.R * p.R)) + std::log(c0) + log_step_d2_abs(u);
    const double hi = std::max(la, lb), lo = std::min(la, lb);
    const double log_u3 = 3.0 * (hi + std::log1p(std::exp(lo - hi)));
    return log_u3 - std::log(c0) - log_step((x - p.x1) / p.R);
}

NeckBounds neck_bound_integrals(const DumbbellParams& p, double xi, double rel_tol) {
    if (!(xi > p.x1) || !(xi <= p.x1 + p.R / 4.0))
        throw std::domain_error("neck_bound_integrals: need x1 < xi <= x1 + R/4");
    if (!(p.eps > 0.0))
        throw std::domain_error("neck_bound_integrals: surface requires eps > 0");
    ProfileCurve curve(p);

    NeckBounds nb;
    nb.M1_est = integrate_segments(
        [&](double x) { return std::exp(0.5 * log_majorant_Q(p, x)); }, p.x1, xi,
        graded_splits(p.x1, xi), rel_tol);
    nb.M2_est = integrate_segments(
        [&](double x) {
            const auto [g, g1, g2] = curve.eval(x);
            return std::sqrt(std::fabs(g2) * std::fabs(g2) * std::fabs(g2) / g);
        },
        xi, p.x1 + p.R, {p.x2}, rel_tol);
    nb.neck_lp = 2.0 * integrate_segments(
                           [&](double x) {
                               const double neg =
                                   std::max(-gaussian_curvature(curve, x), 0.0);
                               return std::pow(neg, 1.5) * area_element(curve, x);
                           },
                           p.x1, p.x2, graded_splits(p.x1, p.x2), rel_tol);
    nb.chain_slack = 2.0 * M_PI * (nb.M1_est + nb.M2_est) - nb.neck_lp;
    if (nb.chain_slack < 0.0)
        throw std::runtime_error(
            "neck_bound_integrals: majorant chain violated (neck L^{3/2} mass "
            "exceeds 2*pi*(M1+M2))");
    return nb;
}

}  // namespace dumbbell
