#pragma once

namespace dumbbell {

// Mollified step: s = 1/(1 + e^{1/x - 1/(1-x)}) on (0,1), clamped to 0/1 outside.
// All derivatives vanish at both endpoints, so the clamp is C^inf.
struct StepEval {
    double x;
    double s;   // value in [0,1]
    double s1;  // first derivative, >= 0
    double s2;  // second derivative
};

StepEval step_eval(double x) noexcept;

// Log-space pieces for 0 < x < 1.  The raw quotient forms overflow below
// x ~ 1.4e-3; these stay finite down to denormal x.
double log_step(double x) noexcept;            // log s(x)
double log_one_minus_step(double x) noexcept;  // log(1 - s(x))
double log_step_d1(double x) noexcept;         // log s'(x)
double log_step_d2_abs(double x) noexcept;     // log |s''(x)|

// s'(2x)^a * |s''(2x)|^b / s(x), assembled in log space.
// Requires a,b >= 0 with a+b > 2 and 0 < x < 1/2; throws std::domain_error.
// The second derivative enters through its magnitude so that non-integer b
// stays real past the inflection of s.
double step_decay_ratio(double x, double a, double b);

}  // namespace dumbbell
