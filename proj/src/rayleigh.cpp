#include "dumbbell/rayleigh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dumbbell/geometry.hpp"
#include "dumbbell/quadrature.hpp"

namespace dumbbell {

TestQuotient test_quotient(const ProfileCurve& curve, double c, double rel_tol) {
    if (!(c > 0.0)) throw std::domain_error("test_quotient: c must be positive");
    const auto& p = curve.params();
    if (!(p.eps > 0.0))
        throw std::domain_error("test_quotient: surface requires eps > 0");
    const double slope = 2.0 * c / p.L;  // = c/x1, in arc length on the cylinder

    // |grad f| vanishes off the cylinder; quadrature split lands exactly on
    // the kink at x1 by construction.
    const double dir = 2.0 * integrate(
                                 [&](double x) {
                                     return slope * slope * area_element(curve, x);
                                 },
                                 0.0, p.x1, rel_tol);
    const double mass_cyl = integrate(
        [&](double x) {
            const double f = c * x / p.x1;
            return f * f * area_element(curve, x);
        },
        0.0, p.x1, rel_tol);
    const double mass_neck =
        c * c * integrate([&](double x) { return area_element(curve, x); }, p.x1,
                          p.x2, rel_tol);
    const double mass_cap = c * c * 2.0 * M_PI * p.R * p.R;
    TestQuotient q;
    q.dirichlet = dir;
    q.mass = 2.0 * (mass_cyl + mass_neck + mass_cap);
    q.quotient = q.dirichlet / q.mass;
    return q;
}

std::vector<BoundRow> sweep_bound(double R, double L,
                                  const std::vector<double>& eps_list) {
    if (!(R > 0.0) || !(L > 0.0))
        throw std::domain_error("sweep_bound: R, L must be positive");
    for (size_t i = 0; i < eps_list.size(); ++i) {
        if (!(eps_list[i] > 0.0))
            throw std::domain_error("sweep_bound: eps values must be positive");
        if (i > 0 && !(eps_list[i] < eps_list[i - 1]))
            throw std::domain_error("sweep_bound: eps list must be strictly descending");
    }
    std::vector<BoundRow> rows;
    rows.reserve(eps_list.size());
    for (double e : eps_list) rows.push_back({e, 2.0 * e / (L * R * R)});
    return rows;
}

std::vector<double> sample_test_function(const DumbbellParams& p,
                                         const MeridianGrid& grid, double c) {
    std::vector<double> f(grid.t.size());
    for (size_t j = 0; j < grid.t.size(); ++j) {
        const double u = (grid.t[j] - grid.T / 2.0) / p.x1;
        f[j] = c * std::clamp(u, -1.0, 1.0);
    }
    return f;
}

}  // namespace dumbbell
