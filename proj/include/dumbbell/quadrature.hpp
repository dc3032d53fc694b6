#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dumbbell {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// 15-point Gauss-Legendre nodes/weights on [-1,1], generated once by Newton
// iteration on P_15 (exact to double roundoff; avoids hard-coded tables).
struct Gl15 {
    std::array<double, 15> xs{};
    std::array<double, 15> ws{};
    Gl15() {
        constexpr int n = 15;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                const double dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::fabs(dx) < 1e-15) break;
            }
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (x * p1 - p0) / (x * x - 1.0);
            xs[i] = x;
            ws[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

inline const Gl15& gl15() {
    static const Gl15 g;
    return g;
}

template <class F>
inline void gl15_panel(F&& f, double a, double b, double& integral, double& l1) {
    const auto& g = gl15();
    const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    double s = 0.0, s1 = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double v = f(c + hw * g.xs[i]);
        s += g.ws[i] * v;
        s1 += g.ws[i] * std::fabs(v);
    }
    integral = hw * s;
    l1 = hw * s1;
}

template <class F>
double integrate_rec(F&& f, double a, double b, double coarse, double rel_tol,
                     double abs_scale, int depth) {
    const double mid = 0.5 * (a + b);
    double left, right, l1l, l1r;
    gl15_panel(f, a, mid, left, l1l);
    gl15_panel(f, mid, b, right, l1r);
    const double fine = left + right;
    const double err = std::fabs(fine - coarse);
    // The L1 mass of the panel keeps the acceptance test meaningful on
    // cancelling integrands (net ~0 but large positive/negative lobes).
    const double scale = std::max({std::fabs(fine), l1l + l1r, abs_scale});
    if (err <= rel_tol * scale || mid <= a || mid >= b) return fine;
    if (depth >= 60)
        throw QuadratureError("adaptive quadrature: max subdivision depth reached");
    return integrate_rec(f, a, mid, left, rel_tol, abs_scale, depth + 1) +
           integrate_rec(f, mid, b, right, rel_tol, abs_scale, depth + 1);
}

}  // namespace detail

// Adaptive bisection with 15-point Gauss-Legendre panels.  Error control is
// relative to max(|integral|, panel L1 mass, abs_scale); raises QuadratureError
// past depth 60.
//
// A composite pre-pass estimates the L1 mass of the whole interval and feeds
// it into the acceptance test as an absolute floor.  Without it, a panel near
// an interior zero of the integrand can never meet a purely panel-relative
// tolerance: when f is itself a difference of O(1) terms, its relative
// accuracy degrades like eps_machine/|f| toward the zero, and the recursion
// would chase cancellation noise down to roundoff-width panels.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-10,
                 double abs_scale = 0.0) {
    if (a == b) return 0.0;
    double l1_whole = 0.0;
    constexpr int kPre = 64;
    for (int i = 0; i < kPre; ++i) {
        const double pa = a + (b - a) * i / kPre;
        const double pb = a + (b - a) * (i + 1) / kPre;
        double pi, pl1;
        detail::gl15_panel(f, pa, pb, pi, pl1);
        l1_whole += pl1;
    }
    double coarse, l1;
    detail::gl15_panel(f, a, b, coarse, l1);
    return detail::integrate_rec(f, a, b, coarse, rel_tol,
                                 std::max(abs_scale, std::fabs(l1_whole)), 0);
}

// Same, but with mandatory split points (piecewise-defined integrands,
// interior kinks).  Points outside (a,b) are ignored; order is irrelevant.
template <class F>
double integrate_segments(F&& f, double a, double b, const std::vector<double>& pts,
                          double rel_tol = 1e-10, double abs_scale = 0.0) {
    std::vector<double> knots{a};
    for (double p : pts)
        if (p > a && p < b) knots.push_back(p);
    knots.push_back(b);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    double total = 0.0;
    for (size_t i = 0; i + 1 < knots.size(); ++i)
        total += integrate(f, knots[i], knots[i + 1], rel_tol, abs_scale);
    return total;
}

// Dyadic split points accumulating toward `a`, for integrands that vanish with
// all derivatives at `a` but peak in the interior: a + (b-a)*2^{-k}, k=1..levels.
inline std::vector<double> graded_splits(double a, double b, int levels = 48) {
    std::vector<double> pts;
    double d = (b - a) * 0.5;
    for (int k = 0; k < levels && a + d > a; ++k, d *= 0.5) pts.push_back(a + d);
    return pts;
}

}  // namespace dumbbell
