#include "dumbbell/smoothstep.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dumbbell {

namespace {

inline double t_of(double x) { return 1.0 / x - 1.0 / (1.0 - x); }

}  // namespace

StepEval step_eval(double x) noexcept {
    if (!(x > 0.0)) return {x, 0.0, 0.0, 0.0};
    if (x >= 1.0) return {x, 1.0, 0.0, 0.0};
    const double t = t_of(x);
    double s;
    if (t >= 0.0) {
        const double e = std::exp(-t);
        s = e / (1.0 + e);
    } else {
        const double e = std::exp(t);
        s = 1.0 / (1.0 + e);
    }
    const double w = s * (1.0 - s);
    // Once w underflows, the true derivatives are far below denormal range.
    // Returning exact zeros here also blocks 0 * inf = NaN at x ~ 1e-308,
    // where r and r' overflow.
    if (w == 0.0) return {x, s, 0.0, 0.0};
    const double ix = 1.0 / x, iy = 1.0 / (1.0 - x);
    const double r = ix * ix + iy * iy;
    const double rp = 2.0 * (iy * iy * iy - ix * ix * ix);
    const double s1 = w * r;
    const double s2 = w * ((1.0 - 2.0 * s) * r * r + rp);
    return {x, s, s1, s2};
}

double log_step(double x) noexcept {
    const double t = t_of(x);
    if (t >= 0.0) return -t - std::log1p(std::exp(-t));
    return -std::log1p(std::exp(t));
}

double log_one_minus_step(double x) noexcept {
    const double t = t_of(x);
    if (t <= 0.0) return t - std::log1p(std::exp(t));
    return -std::log1p(std::exp(-t));
}

double log_step_d1(double x) noexcept {
    const double ix = 1.0 / x, iy = 1.0 / (1.0 - x);
    const double r = ix * ix + iy * iy;
    return log_step(x) + log_one_minus_step(x) + std::log(r);
}

double log_step_d2_abs(double x) noexcept {
    const double s = step_eval(x).s;
    const double ix = 1.0 / x, iy = 1.0 / (1.0 - x);
    const double r = ix * ix + iy * iy;
    const double rp = 2.0 * (iy * iy * iy - ix * ix * ix);
    const double bracket = (1.0 - 2.0 * s) * r * r + rp;
    return log_step(x) + log_one_minus_step(x) + std::log(std::fabs(bracket));
}

double step_decay_ratio(double x, double a, double b) {
    if (!(a >= 0.0) || !(b >= 0.0) || !(a + b > 2.0))
        throw std::domain_error("step_decay_ratio: requires a,b >= 0 and a+b > 2, got a=" +
                                std::to_string(a) + " b=" + std::to_string(b));
    if (!(x > 0.0 && x < 0.5))
        throw std::domain_error("step_decay_ratio: x must lie in (0, 1/2)");
    double lg = -log_step(x);
    if (a > 0.0) lg += a * log_step_d1(2.0 * x);
    if (b > 0.0) lg += b * log_step_d2_abs(2.0 * x);
    return std::exp(lg);
}

}  // namespace dumbbell
