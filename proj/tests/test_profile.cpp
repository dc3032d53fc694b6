#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "dumbbell/profile.hpp"

using namespace dumbbell;

namespace {
double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}
}  // namespace

TEST_SUITE("profile") {

TEST_CASE("parameter validation and derived abscissas") {
    const DumbbellParams p = make_params(2.0, 1.0, 0.1);
    CHECK(p.x1 == 0.5);
    CHECK(rel_err(p.x2, 2.497498435543818) <= 1e-14);
    CHECK(rel_err(p.pole(), p.x2 + 2.0) <= 1e-15);

    CHECK_NOTHROW(make_params(2.0, 1.0, 0.0));  // degenerate comparison profile
    CHECK_THROWS_AS(make_params(2.0, 1.0, 1.0), std::domain_error);   // eps = R/2
    CHECK_THROWS_AS(make_params(2.0, 1.0, -0.1), std::domain_error);
    CHECK_THROWS_AS(make_params(0.0, 1.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(make_params(2.0, 0.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(make_params(2.0, 1.0, NAN), std::domain_error);
}

TEST_CASE("cylinder, junctions, and equator take exact values") {
    const DumbbellParams p = make_params(2.0, 1.0, 0.1);
    ProfileCurve c(p);
    for (double x : {0.0, 0.2, p.x1}) {
        const auto [g, g1, g2] = c.eval(x);
        CHECK(g == 0.1);
        CHECK(g1 == 0.0);
        CHECK(g2 == 0.0);
    }
    const auto [ge, g1e, g2e] = c.eval(p.x2);
    CHECK(rel_err(ge, 2.0) <= 1e-14);          // bulb equator
    CHECK(std::fabs(g1e) <= 1e-14);
    CHECK(rel_err(g2e, -0.5) <= 1e-12);        // -1/R
}

TEST_CASE("neck samples match independently computed values") {
    ProfileCurve c(make_params(2.0, 1.0, 0.1));
    struct Row {
        double dx, g, g1, g2;
    };
    const Row rows[] = {
        {0.25, 0.10092650005048913, 0.032091952085851215, 0.8660688345562108},
        {0.50, 0.1800481446568818, 0.7382309476491583, 3.9404869758270085},
        {1.00, 0.9187920411964713, 1.9239699354700988, 0.7632894993010952},
    };
    for (const Row& r : rows) {
        const auto [g, g1, g2] = c.eval(0.5 + r.dx);
        CHECK(rel_err(g, r.g) <= 1e-12);
        CHECK(rel_err(g1, r.g1) <= 1e-12);
        CHECK(rel_err(g2, r.g2) <= 1e-12);
    }
}

TEST_CASE("degenerate profile reduces to the shifted semicircle") {
    const DumbbellParams p0 = make_params(2.0, 1.0, 0.0);
    CHECK(p0.x2 == p0.x1 + 2.0);
    const ProfilePoint v = semicircle_eval(p0, p0.x1 + 1.0);
    CHECK(rel_err(v.g, std::sqrt(3.0)) <= 1e-14);
    CHECK(rel_err(v.g1, 1.0 / std::sqrt(3.0)) <= 1e-13);
    CHECK(rel_err(v.g2, -4.0 / (3.0 * std::sqrt(3.0))) <= 1e-13);
    CHECK_THROWS_AS(semicircle_eval(p0, p0.x1 - 0.5), std::domain_error);
    CHECK_THROWS_AS(semicircle_eval(p0, p0.pole() + 0.5), std::domain_error);
}

TEST_CASE("derivatives agree with central finite differences across the neck") {
    const DumbbellParams p = make_params(2.0, 1.0, 0.1);
    ProfileCurve c(p);
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> u(p.x1, p.x2);
    const double h = 1e-6;
    for (int i = 0; i < 50; ++i) {
        const double x = u(rng);
        if (x - h <= p.x1 || x + h >= p.x2) continue;
        const double fd1 = (c.eval(x + h).g - c.eval(x - h).g) / (2.0 * h);
        const double fd2 = (c.eval(x + h).g1 - c.eval(x - h).g1) / (2.0 * h);
        const auto [g, g1, g2] = c.eval(x);
        CHECK(std::fabs(g1 - fd1) <= 1e-6 * std::max(1.0, std::fabs(g1)));
        CHECK(std::fabs(g2 - fd2) <= 1e-5 * std::max(1.0, std::fabs(g2)));
    }
}

TEST_CASE("junctions are smooth to second order") {
    const DumbbellParams p = make_params(2.0, 1.0, 0.1);
    ProfileCurve c(p);
    const double h = 1e-6, h2 = 1e-5;
    for (double xj : {p.x1, p.x2}) {
        // Straddling finite differences mix both pieces; agreement with the
        // analytic derivatives certifies the junction to O(h^2).
        const double fd1 = (c.eval(xj + h).g - c.eval(xj - h).g) / (2.0 * h);
        const double fd2 =
            (c.eval(xj + h2).g - 2.0 * c.eval(xj).g + c.eval(xj - h2).g) / (h2 * h2);
        const auto [g, g1, g2] = c.eval(xj);
        CHECK(std::fabs(g1 - fd1) <= 1e-6);
        CHECK(std::fabs(g2 - fd2) <= 1e-4);
        CHECK(std::fabs(c.eval(xj - 1e-12).g - c.eval(xj + 1e-12).g) <= 1e-11);
    }
}

TEST_CASE("profile is monotone and pinched across the neck") {
    const DumbbellParams p = make_params(2.0, 1.0, 0.1);
    ProfileCurve c(p);
    for (int i = 0; i <= 4000; ++i) {
        const double x = p.x1 + (p.x2 - p.x1) * i / 4000.0;
        const auto [g, g1, g2] = c.eval(x);
        CHECK(g1 >= -1e-12);
        CHECK(g >= 0.1 - 1e-14);
        CHECK(g <= 2.0 + 1e-14);
    }
}

TEST_CASE("profiles dominate the degenerate semicircle on the neck") {
    const DumbbellParams p0 = make_params(2.0, 1.0, 0.0);
    ProfileCurve c0(p0);
    for (double eps : {0.04, 0.1, 0.2, 0.4}) {
        const DumbbellParams p = make_params(2.0, 1.0, eps);
        ProfileCurve c(p);
        for (int i = 1; i < 1000; ++i) {
            const double x = p.x1 + (p.x2 - p.x1) * i / 1000.0;
            CHECK(c.eval(x).g >= c0.eval(x).g - 1e-12);
        }
    }
}

TEST_CASE("neck arclength and total meridian length") {
    const double lemma_slack = 1e-12;
    for (double eps : {0.2, 0.1, 0.05, 0.025, 0.0125}) {
        const DumbbellParams p = make_params(2.0, 1.0, eps);
        const double neck = neck_arclength(p);
        // arc of a monotone graph over [x1,x2] rising (x2-x1 run, <= R-eps rise)
        CHECK(neck <= (p.x2 - p.x1) + (2.0 - eps) + lemma_slack);
        CHECK(neck >= p.x2 - p.x1);
    }
    CHECK(rel_err(neck_arclength(make_params(2.0, 1.0, 0.1)), 3.000898561850238) <=
          1e-10);
    struct Row {
        double eps, T;
    };
    const Row rows[] = {{0.2, 13.11425851568719},
                        {0.1, 13.284982430880063},
                        {0.05, 13.368426513887144},
                        {0.025, 13.409679207356113},
                        {0.0125, 13.43018934920032}};
    for (const Row& r : rows)
        CHECK(rel_err(meridian_length(make_params(2.0, 1.0, r.eps)), r.T) <= 1e-10);
}

TEST_CASE("meridian grid: symmetry, positivity, and piecewise structure") {
    const DumbbellParams p = make_params(2.0, 1.0, 0.1);
    const MeridianGrid g = build_meridian(p, 501);
    REQUIRE(g.n == 501);
    REQUIRE(g.t.size() == 503);
    REQUIRE(g.r.size() == 503);
    REQUIRE(g.r_half.size() == 502);
    CHECK(rel_err(g.T, 13.284982430880063) <= 1e-9);
    CHECK(rel_err(g.h, g.T / 502.0) <= 1e-15);
    CHECK(g.r.front() == 0.0);
    CHECK(g.r.back() == 0.0);
    for (int j = 1; j <= g.n; ++j) {
        CHECK(g.r[j] > 0.0);
        CHECK(std::fabs(g.r[j] - g.r[g.n + 1 - j]) <= 1e-13);  // mirror symmetry
        CHECK(rel_err(g.t[j], j * g.h) <= 1e-14);
    }
    for (int j = 0; j <= g.n; ++j) CHECK(g.r_half[j] > 0.0);

    // cap piece: r = R sin(tau/R)
    for (int j = 1; j <= g.n; ++j) {
        if (g.t[j] < M_PI) CHECK(rel_err(g.r[j], 2.0 * std::sin(g.t[j] / 2.0)) <= 1e-9);
    }
    // cylinder piece around the waist: r = eps exactly
    bool saw_waist = false;
    for (int j = 1; j <= g.n; ++j) {
        if (std::fabs(g.t[j] - g.T / 2.0) < 0.4) {
            CHECK(g.r[j] == 0.1);
            saw_waist = true;
        }
    }
    CHECK(saw_waist);
}

TEST_CASE("meridian grid rejects degenerate inputs") {
    CHECK_THROWS_AS(build_meridian(make_params(2.0, 1.0, 0.1), 99),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_meridian(make_params(2.0, 1.0, 0.0), 400),
                    std::domain_error);
}

TEST_CASE("sphere meridian is the sine profile") {
    const MeridianGrid g = sphere_meridian(1.0, 300);
    CHECK(rel_err(g.T, M_PI) <= 1e-15);
    for (int j = 1; j <= g.n; ++j)
        CHECK(rel_err(g.r[j], std::sin(g.t[j])) <= 1e-12);
    CHECK(g.r.front() == 0.0);
    CHECK(g.r.back() == 0.0);
}

}  // TEST_SUITE
