#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dumbbell/profile.hpp"
#include "dumbbell/rayleigh.hpp"
#include "dumbbell/spectrum.hpp"

using namespace dumbbell;

namespace {
double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}
constexpr double kPi = 3.14159265358979323846;
}  // namespace

TEST_SUITE("rayleigh") {

TEST_CASE("dirichlet energy of the step function is exactly 8 pi eps c^2 / L") {
    ProfileCurve curve(make_params(2.0, 1.0, 0.1));
    const auto q = test_quotient(curve, 1.0);
    // Gradient 2c/L on the cylinder of area 2 pi eps L, zero elsewhere.
    CHECK(rel_err(q.dirichlet, 0.8 * kPi) <= 1e-12);
    CHECK(rel_err(q.dirichlet, 2.5132741228718345) <= 1e-10);
}

TEST_CASE("frozen mass and quotient at the reference neck") {
    ProfileCurve curve(make_params(2.0, 1.0, 0.1));
    const auto q = test_quotient(curve, 1.0);
    CHECK(rel_err(q.mass, 88.65933682898948) <= 1e-9);
    CHECK(rel_err(q.quotient, 0.028347540290308757) <= 1e-9);
    CHECK(q.quotient > 0.0);
    CHECK(q.quotient <= 0.051);  // 2 eps / (L R^2) = 0.05 plus slack
    CHECK(q.mass >= 4.0 * kPi * 4.0);  // f = +-c on the caps alone
}

TEST_CASE("quotient is scale invariant in c") {
    ProfileCurve curve(make_params(2.0, 1.0, 0.1));
    const auto a = test_quotient(curve, 1.0);
    const auto b = test_quotient(curve, 7.3);
    CHECK(rel_err(b.quotient, a.quotient) <= 1e-12);
    CHECK(rel_err(b.dirichlet, a.dirichlet * 7.3 * 7.3) <= 1e-12);
}

TEST_CASE("quotient dominates the true lambda1") {
    const DumbbellParams p = make_params(2.0, 1.0, 0.1);
    const auto q = test_quotient(ProfileCurve(p), 1.0);
    const double lam1 = first_eigenvalue(p, 1000).lambda1;
    CHECK(lam1 <= q.quotient);
    CHECK(lam1 >= 0.25 * q.quotient);  // same order: the step is a fair ansatz
}

TEST_CASE("bound table is 2 eps / (L R^2) rowwise") {
    const auto rows = sweep_bound(2.0, 1.0, {0.2, 0.1, 0.05});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].bound == 0.1);
    CHECK(rows[1].bound == 0.05);
    CHECK(rows[2].bound == 0.025);
    for (const auto& r : rows) CHECK(r.bound == 2.0 * r.eps / 4.0);
    CHECK_THROWS_AS(sweep_bound(2.0, 1.0, {0.05, 0.1}), std::domain_error);
    CHECK_THROWS_AS(sweep_bound(2.0, 1.0, {0.1, 0.0}), std::domain_error);
}

TEST_CASE("sampled test function: odd, clamped, pinned at the junctions") {
    const DumbbellParams p = make_params(2.0, 1.0, 0.1);
    const MeridianGrid g = build_meridian(p, 1000);
    const double c = 2.5;
    const auto f = sample_test_function(p, g, c);
    REQUIRE(f.size() == static_cast<size_t>(g.n) + 2);

    double mass_mean = 0.0, mass = 0.0;
    for (int j = 1; j <= g.n; ++j) {
        const size_t k = static_cast<size_t>(j);
        CHECK(std::fabs(f[k]) <= c);
        // Antisymmetry across the mirror plane, node for node.
        CHECK(std::fabs(f[k] + f[static_cast<size_t>(g.n) + 1 - k]) <= 1e-13 * c);
        mass_mean += g.r[k] * f[k];
        mass += g.r[k];
    }
    CHECK(std::fabs(mass_mean / mass) <= 1e-10 * c);
    // Deep in either cap the clamp saturates.
    CHECK(f[1] == -c);
    CHECK(f[static_cast<size_t>(g.n)] == c);
}

TEST_CASE("discrete quotient of the sampled step tracks the continuum value") {
    const DumbbellParams p = make_params(2.0, 1.0, 0.1);
    const MeridianGrid g = build_meridian(p, 1000);
    const auto f = sample_test_function(p, g, 1.0);
    const double rq = discrete_quotient(g, f);
    CHECK(rel_err(rq, 0.02823939405007748) <= 1e-8);
    const double cont = test_quotient(ProfileCurve(p), 1.0).quotient;
    CHECK(std::fabs(rq - cont) / cont <= 0.01);
}

TEST_CASE("rejected inputs") {
    ProfileCurve curve(make_params(2.0, 1.0, 0.1));
    CHECK_THROWS_AS(test_quotient(curve, 0.0), std::domain_error);
    CHECK_THROWS_AS(test_quotient(curve, -1.0), std::domain_error);
    // The eps = 0 limit profile is a valid curve but a degenerate surface.
    ProfileCurve pinched(make_params(2.0, 1.0, 0.0));
    CHECK_THROWS_AS(test_quotient(pinched, 1.0), std::domain_error);
}

}  // TEST_SUITE
