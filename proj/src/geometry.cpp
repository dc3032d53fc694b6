#include "dumbbell/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "dumbbell/quadrature.hpp"

namespace dumbbell {

double gaussian_curvature(const ProfileCurve& curve, double x) {
    const auto [g, g1, g2] = curve.eval(x);
    if (!(g > 0.0))
        throw std::domain_error("gaussian_curvature: undefined where g = 0 (pole)");
    const double q = g1 * g1 + 1.0;
    return -g2 / (g * q * q);
}

double area_element(const ProfileCurve& curve, double x) {
    const auto [g, g1, g2] = curve.eval(x);
    return 2.0 * M_PI * g * std::sqrt(1.0 + g1 * g1);
}

double surface_area(const ProfileCurve& curve, double rel_tol) {
    const auto& p = curve.params();
    if (!(p.eps > 0.0))
        throw std::domain_error("surface_area: surface requires eps > 0");
    const double cyl = 2.0 * M_PI * p.eps * p.x1;
    const double neck =
        integrate([&](double x) { return area_element(curve, x); }, p.x1, p.x2, rel_tol);
    const double cap = 2.0 * M_PI * p.R * p.R;  // hemisphere of radius R
    return 2.0 * (cyl + neck + cap);
}

double gauss_bonnet_total(const ProfileCurve& curve, double rel_tol) {
    const auto& p = curve.params();
    if (!(p.eps > 0.0))
        throw std::domain_error("gauss_bonnet_total: surface requires eps > 0");
    // Neck integrand is -2*pi*g''/(1+g'^2)^{3/2}; its exact integral is 0
    // because g' vanishes at both junctions.  Error control against the L1
    // panel mass (inside integrate) keeps the cancellation honest.
    const double neck = integrate(
        [&](double x) { return gaussian_curvature(curve, x) * area_element(curve, x); },
        p.x1, p.x2, rel_tol, 1.0);
    return 2.0 * (neck + 2.0 * M_PI);
}

double sphere_area(double R, double rel_tol) {
    if (!(R > 0.0)) throw std::domain_error("sphere_area: R must be positive");
    return integrate([&](double t) { return 2.0 * M_PI * R * std::sin(t / R); }, 0.0,
                     M_PI * R, rel_tol);
}

GeometrySummary bounds_summary(const DumbbellParams& p, const ProfileCurve& curve,
                               double rel_tol) {
    if (p.eps > 1.0)
        throw std::domain_error("bounds_summary: stated bounds assume eps <= 1");
    GeometrySummary s;
    s.diam_bound = (2.0 * M_PI + 8.0) * p.R + 2.0 * p.L;
    s.area_bound = 10.0 * M_PI * p.R * p.R + 2.0 * M_PI * p.L;
    s.area = surface_area(curve, rel_tol);
    s.meridian_length = meridian_length(p, rel_tol);
    s.gauss_bonnet = gauss_bonnet_total(curve, rel_tol);
    // Monotone-piece length bound: a positive monotone C^1 graph over [a,b]
    // has length at most (b-a) + |g(b)-g(a)|.
    const double neck = neck_arclength(p, rel_tol);
    const double lemma = (p.x2 - p.x1) + (p.R - p.eps);
    if (neck > lemma * (1.0 + 1e-12))
        throw std::runtime_error("bounds_summary: monotone piece length bound violated");
    return s;
}

}  // namespace dumbbell
