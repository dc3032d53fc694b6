#include "dumbbell/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dumbbell/quadrature.hpp"
#include "dumbbell/smoothstep.hpp"

namespace dumbbell {

DumbbellParams make_params(double R, double L, double eps) {
    if (!(R > 0.0) || !std::isfinite(R))
        throw std::domain_error("params: R must be positive and finite");
    if (!(L > 0.0) || !std::isfinite(L))
        throw std::domain_error("params: L must be positive and finite");
    if (!(eps >= 0.0) || !(eps < R / 2.0))
        throw std::domain_error("params: need 0 <= eps < R/2, got eps=" +
                                std::to_string(eps) + " R=" + std::to_string(R));
    DumbbellParams p;
    p.R = R;
    p.L = L;
    p.eps = eps;
    p.x1 = L / 2.0;
    p.x2 = p.x1 + std::sqrt(R * R - eps * eps);
    return p;
}

ProfilePoint semicircle_eval(const DumbbellParams& p, double x) {
    const double tol = 1e-12 * (p.pole() + 1.0);
    if (x < p.x1 - tol || x > p.pole() + tol)
        throw std::domain_error("semicircle_eval: x outside [x1, x2+R]");
    const double d = x - p.x2;
    const double c = std::sqrt(std::max(p.R * p.R - d * d, 0.0));
    // At the exact pole c = 0 and the tangent is vertical; IEEE division gives
    // the correct signed infinities rather than NaN.
    return {c, -d / c, -(p.R * p.R) / (c * c * c)};
}

ProfileCurve::ProfileCurve(const DumbbellParams& p) : p_(p), w_(p.x2 - p.x1) {}

ProfilePoint ProfileCurve::eval(double x) const {
    const double tol = 1e-12 * (p_.pole() + 1.0);
    if (x < -tol || x > p_.pole() + tol)
        throw std::domain_error("profile_eval: x outside [0, x2+R]");
    if (x < p_.x1) return {p_.eps, 0.0, 0.0};
    if (x > p_.x2) return semicircle_eval(p_, std::min(x, p_.pole()));
    const auto [c, c1, c2] = semicircle_eval(p_, x);
    const StepEval st = step_eval((x - p_.x1) / w_);
    const double d = c - p_.eps;
    return {p_.eps + d * st.s,
            c1 * st.s + d * st.s1 / w_,
            c2 * st.s + 2.0 * c1 * st.s1 / w_ + d * st.s2 / (w_ * w_)};
}

double neck_arclength(const DumbbellParams& p, double rel_tol) {
    ProfileCurve curve(p);
    return integrate([&](double x) { return std::hypot(1.0, curve.eval(x).g1); },
                     p.x1, p.x2, rel_tol);
}

double meridian_length(const DumbbellParams& p, double rel_tol) {
    return p.L + 2.0 * neck_arclength(p, rel_tol) + M_PI * p.R;
}

namespace {

// Dense cumulative-trapezoid table of arc length over the neck, used to invert
// t(x) monotonically.  The interpolation error of the inversion is O(dx^2);
// radii are then exact profile values at the recovered abscissa.
struct NeckArcTable {
    std::vector<double> x;
    std::vector<double> s;  // arc length from x1
    double total = 0.0;

    explicit NeckArcTable(const ProfileCurve& curve, int samples = 200001) {
        const auto& p = curve.params();
        x.resize(samples);
        s.resize(samples);
        double prev = 1.0;  // sqrt(1+g'^2) = 1 at x1 (flat junction)
        x[0] = p.x1;
        s[0] = 0.0;
        for (int i = 1; i < samples; ++i) {
            x[i] = p.x1 + (p.x2 - p.x1) * i / (samples - 1.0);
            const double f = std::hypot(1.0, curve.eval(x[i]).g1);
            s[i] = s[i - 1] + 0.5 * (prev + f) * (x[i] - x[i - 1]);
            prev = f;
        }
        total = s.back();
    }

    double invert(double target) const {  // arc length from x1 -> abscissa
        target = std::clamp(target, 0.0, total);
        auto it = std::upper_bound(s.begin(), s.end(), target);
        size_t i = std::clamp<size_t>(it - s.begin(), 1, s.size() - 1);
        const double ds = s[i] - s[i - 1];
        const double f = ds > 0.0 ? (target - s[i - 1]) / ds : 0.0;
        return x[i - 1] + f * (x[i] - x[i - 1]);
    }
};

}  // namespace

MeridianGrid build_meridian(const DumbbellParams& p, int n) {
    if (n < 100) throw std::invalid_argument("build_meridian: need n >= 100");
    if (!(p.eps > 0.0))
        throw std::domain_error("build_meridian: surface requires eps > 0");
    ProfileCurve curve(p);
    NeckArcTable tab(curve);
    const double cap_arc = 0.5 * M_PI * p.R;
    const double half = p.x1 + tab.total + cap_arc;
    const double T = 2.0 * half;

    // Arc distance tau from the nearest pole: cap for tau <= pi R/2, then the
    // neck (inverted through the table), then the cylinder.  min(t, T-t) makes
    // the mirror symmetry exact by construction.
    auto radius = [&](double t) {
        const double tau = std::min(t, T - t);
        if (tau <= cap_arc) return p.R * std::sin(tau / p.R);
        if (tau >= cap_arc + tab.total) return p.eps;
        const double xx = tab.invert(tab.total - (tau - cap_arc));
        return curve.eval(xx).g;
    };

    MeridianGrid grid;
    grid.n = n;
    grid.T = T;
    grid.h = T / (n + 1);
    grid.t.resize(n + 2);
    grid.r.resize(n + 2);
    grid.r_half.resize(n + 1);
    for (int j = 0; j <= n + 1; ++j) {
        grid.t[j] = j * grid.h;
        grid.r[j] = radius(grid.t[j]);
    }
    grid.r[0] = grid.r[n + 1] = 0.0;  // poles exactly
    for (int j = 0; j <= n; ++j) grid.r_half[j] = radius((j + 0.5) * grid.h);
    return grid;
}

MeridianGrid sphere_meridian(double R, int n) {
    if (n < 100) throw std::invalid_argument("sphere_meridian: need n >= 100");
    if (!(R > 0.0)) throw std::domain_error("sphere_meridian: R must be positive");
    MeridianGrid grid;
    grid.n = n;
    grid.T = M_PI * R;
    grid.h = grid.T / (n + 1);
    grid.t.resize(n + 2);
    grid.r.resize(n + 2);
    grid.r_half.resize(n + 1);
    for (int j = 0; j <= n + 1; ++j) {
        grid.t[j] = j * grid.h;
        grid.r[j] = R * std::sin(grid.t[j] / R);
    }
    grid.r[0] = grid.r[n + 1] = 0.0;
    for (int j = 0; j <= n; ++j)
        grid.r_half[j] = R * std::sin((j + 0.5) * grid.h / R);
    return grid;
}

}  // namespace dumbbell
