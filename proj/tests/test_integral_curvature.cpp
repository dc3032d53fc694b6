#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dumbbell/geometry.hpp"
#include "dumbbell/integral_curvature.hpp"
#include "dumbbell/profile.hpp"
#include "dumbbell/quadrature.hpp"
#include "dumbbell/smoothstep.hpp"

using namespace dumbbell;

namespace {

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

struct FrozenRow {
    double eps, kbar0, rho0, kbar1, M2, bound;
};

// Independently computed at rel_tol 1e-12 and cross-checked against a 1e6-point
// composite trapezoid; frozen here to 16 digits.
const FrozenRow kRows[] = {
    {0.2, 0.44619010181228175, 26.95083772814491, 1.0257032340078687,
     7.694305926751455, 11.248497988519643},
    {0.1, 0.5509354603467106, 36.4269323485188, 1.088867747277589,
     9.54550180814909, 11.294447497192477},
    {0.05, 0.6576270845690885, 47.12005454733205, 1.1613024315190525,
     11.21737418008523, 11.335865738191893},
    {0.025, 0.7610937422098193, 58.419375636663915, 1.23728565897068,
     12.675881677971045, 11.371936466574441},
    {0.0125, 0.856123089181929, 69.54540454073046, 1.3108320490337948,
     13.896909394089798, 11.402090082188431},
};

const double kM1 = 294.11441825771215;  // eps-independent by construction

}  // namespace

TEST_SUITE("integral_curvature") {

TEST_CASE("excess below the level: clamped difference") {
    CHECK(rho_K(0.25, 0.0) == 0.0);
    CHECK(rho_K(-0.3, 0.0) == 0.3);
    CHECK(rho_K(0.25, 0.5) == 0.25);
    CHECK(rho_K(0.0, 0.0) == 0.0);
    CHECK_THROWS_AS(rho_K(0.0, -1.0), std::domain_error);
}

TEST_CASE("constant-curvature round sphere gives the excess itself") {
    // rho is constant on a sphere, so the normalized L^p mean must equal it.
    for (double R : {1.0, 2.0}) {
        for (double K : {0.0, 2.0}) {
            const double rho = rho_K(1.0 / (R * R), K);
            const double num = integrate(
                [&](double t) {
                    return std::pow(rho, 1.5) * 2.0 * M_PI * R * std::sin(t / R);
                },
                0.0, M_PI * R, 1e-12, 1.0);
            const double mean = std::pow(num / (4.0 * M_PI * R * R), 1.0 / 1.5);
            if (K == 0.0) {
                CHECK(mean == 0.0);
            } else {
                CHECK(rel_err(mean, rho) <= 1e-12);
            }
        }
    }
}

TEST_CASE("frozen dumbbell norms across the neck family") {
    for (const FrozenRow& row : kRows) {
        ProfileCurve c(make_params(2.0, 1.0, row.eps));
        const IntegralCurvatureResult k0 = kbar(c, 1.5, 0.0);
        CHECK(rel_err(k0.kbar, row.kbar0) <= 1e-8);
        CHECK(rel_err(k0.rho_integral, row.rho0) <= 1e-8);
        CHECK(rel_err(k0.area, surface_area(c)) <= 1e-12);
        CHECK(k0.p == 1.5);
        CHECK(k0.K == 0.0);
        const IntegralCurvatureResult k1 = kbar(c, 1.5, 1.0);
        CHECK(rel_err(k1.kbar, row.kbar1) <= 1e-8);
    }
}

TEST_CASE("adaptive result agrees with a dense composite trapezoid") {
    const DumbbellParams p = make_params(2.0, 1.0, 0.1);
    ProfileCurve c(p);
    const long N = 1000000;
    double acc = 0.0;
    for (long i = 0; i <= N; ++i) {
        const double x = p.x1 + (p.x2 - p.x1) * i / static_cast<double>(N);
        const double neg = std::max(-gaussian_curvature(c, x), 0.0);
        const double f = std::pow(neg, 1.5) * area_element(c, x);
        acc += (i == 0 || i == N) ? 0.5 * f : f;
    }
    const double brute = 2.0 * acc * (p.x2 - p.x1) / static_cast<double>(N);
    const IntegralCurvatureResult k0 = kbar(c, 1.5, 0.0);
    CHECK(rel_err(k0.rho_integral, brute) <= 1e-4);
}

TEST_CASE("at level zero only the neck carries excess") {
    const DumbbellParams p = make_params(2.0, 1.0, 0.1);
    ProfileCurve c(p);
    for (double x : {0.1, 0.4, p.x2 + 0.5, p.pole() - 0.01})
        CHECK(rho_K(gaussian_curvature(c, x), 0.0) == 0.0);
}

TEST_CASE("raising the level obeys the triangle-style bound") {
    for (double eps : {0.2, 0.05}) {
        ProfileCurve c(make_params(2.0, 1.0, eps));
        const double base = kbar(c, 1.5, 0.0).kbar;
        double prev = base;
        for (double K : {0.1, 1.0}) {
            const double v = kbar(c, 1.5, K).kbar;
            CHECK(v <= K + base + 1e-8);
            CHECK(v >= prev - 1e-12);
            prev = v;
        }
    }
}

TEST_CASE("majorant pieces: frozen values and the chain inequality") {
    for (const FrozenRow& row : kRows) {
        const DumbbellParams p = make_params(2.0, 1.0, row.eps);
        const NeckBounds nb = neck_bound_integrals(p, p.x1 + 0.25);
        CHECK(rel_err(nb.M1_est, kM1) <= 1e-6);
        CHECK(rel_err(nb.M2_est, row.M2) <= 1e-6);
        CHECK(rel_err(nb.neck_lp, row.rho0) <= 1e-8);
        CHECK(nb.chain_slack > 0.0);
        const double bound =
            std::pow((nb.M1_est + nb.M2_est) / (2.0 * p.R * p.R), 2.0 / 3.0);
        CHECK(rel_err(bound, row.bound) <= 1e-6);
    }
}

TEST_CASE("pointwise majorant samples") {
    const DumbbellParams p = make_params(2.0, 1.0, 0.1);
    CHECK(rel_err(majorant_U(p, 0.7), 4.207617349271207) <= 1e-10);
    CHECK(majorant_U(p, 0.5) == 0.0);
    CHECK(majorant_U(p, 0.2) == 0.0);
    // log form against the plain ratio where both are representable
    const double x = p.x1 + 0.25;
    const double u3 = std::pow(majorant_U(p, x), 3.0);
    const double c0 = std::sqrt(4.0 - std::pow(x - (p.x1 + 2.0), 2.0));
    const double naive = u3 / (c0 * step_eval((x - p.x1) / 2.0).s);
    CHECK(rel_err(std::exp(log_majorant_Q(p, x)), naive) <= 1e-10);
    CHECK_THROWS_AS(log_majorant_Q(p, p.x1 + 2.5), std::domain_error);
}

// The normalized norms all sit far below the chained majorant bound, but they
// are not close to constant at these neck widths: the collar mass still grows
// like log(1/eps) here (it saturates only near eps ~ 1e-4, at kbar ~ 1.2).
// Measured spread across eps in {0.2,...,0.0125}: (max-min)/min = 0.919.
TEST_CASE("uniformity across the neck family: bound yes, tight spread no") {
    std::vector<double> vals, bounds;
    for (const FrozenRow& row : kRows) {
        ProfileCurve c(make_params(2.0, 1.0, row.eps));
        const DumbbellParams p = c.params();
        vals.push_back(kbar(c, 1.5, 0.0).kbar);
        const NeckBounds nb = neck_bound_integrals(p, p.x1 + 0.25);
        bounds.push_back(
            std::pow((nb.M1_est + nb.M2_est) / (2.0 * p.R * p.R), 2.0 / 3.0));
    }
    double vmin = vals[0], vmax = vals[0];
    for (size_t i = 0; i < vals.size(); ++i) {
        CHECK(vals[i] < bounds[i]);  // uniform domination holds with huge margin
        vmin = std::min(vmin, vals[i]);
        vmax = std::max(vmax, vals[i]);
    }
    CHECK((vmax - vmin) / vmin <= 0.25);  // known to fail at desk scale: 0.919
}

TEST_CASE("rejected inputs") {
    ProfileCurve c(make_params(2.0, 1.0, 0.1));
    CHECK_THROWS_AS(kbar(c, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(kbar(c, 1.5, -0.5), std::domain_error);
    ProfileCurve degenerate(make_params(2.0, 1.0, 0.0));
    CHECK_THROWS_AS(kbar(degenerate, 1.5, 0.0), std::domain_error);
    const DumbbellParams p = make_params(2.0, 1.0, 0.1);
    CHECK_THROWS_AS(neck_bound_integrals(p, p.x1), std::domain_error);
    CHECK_THROWS_AS(neck_bound_integrals(p, p.x1 + 1.0), std::domain_error);
}

}  // TEST_SUITE
