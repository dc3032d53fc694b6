#pragma once

#include <vector>

namespace dumbbell {

// One dumbbell surface: caps of radius R, cylinder of length L and radius eps,
// mollified neck joining them.  x1 = L/2 is the cylinder/neck junction,
// x2 = x1 + sqrt(R^2 - eps^2) the neck/cap junction, x2 + R the pole.
struct DumbbellParams {
    double R;
    double L;
    double eps;
    double x1;
    double x2;
    double pole() const { return x2 + R; }
};

// Validates R > 0, L > 0, 0 <= eps < R/2.  eps = 0 is admitted as the
// degenerate comparison profile g_0 (pointwise evaluation only); everything
// that builds a surface out of the curve requires eps > 0.
DumbbellParams make_params(double R, double L, double eps);

struct ProfilePoint {
    double g;
    double g1;
    double g2;
};

// Upper semicircle of radius R centered at (x2, 0): c(x) = sqrt(R^2-(x-x2)^2).
// c(x1) = eps identically in exact arithmetic.  Domain [x1, x2+R].
ProfilePoint semicircle_eval(const DumbbellParams& p, double x);

// Piecewise profile: eps on [0,x1); eps + (c-eps)*s((x-x1)/(x2-x1)) on
// [x1,x2]; the semicircle beyond.  C^inf across both junctions because every
// derivative of s vanishes at 0 and 1.
class ProfileCurve {
public:
    explicit ProfileCurve(const DumbbellParams& p);
    const DumbbellParams& params() const { return p_; }
    ProfilePoint eval(double x) const;  // domain [0, x2+R]

private:
    DumbbellParams p_;
    double w_;  // x2 - x1
};

// Uniform arc-length sampling of the full pole-to-pole meridian.
struct MeridianGrid {
    int n;                       // interior node count
    double T;                    // total meridian length
    double h;                    // spacing T/(n+1)
    std::vector<double> t;       // n+2 nodes, t[0] = 0, t[n+1] = T
    std::vector<double> r;       // radius at nodes; 0 at the poles
    std::vector<double> r_half;  // n+1 radii at (j+1/2)h — exact profile
                                 // values, not interpolants, so the flux
                                 // discretization sees the true coefficient
};

// Requires n >= 100 and eps > 0.  Radii come from exact profile evaluation at
// abscissae recovered by monotone inversion of the cumulative arc length.
MeridianGrid build_meridian(const DumbbellParams& p, int n);

// Round sphere of radius R: T = pi*R, r(t) = R sin(t/R).  Oracle geometry for
// the classical spectrum checks.
MeridianGrid sphere_meridian(double R, int n);

// Arc length of the neck piece [x1, x2], by adaptive quadrature.
double neck_arclength(const DumbbellParams& p, double rel_tol = 1e-12);

// T = L + 2*neck + pi*R (cylinder and cap pieces have closed-form length).
double meridian_length(const DumbbellParams& p, double rel_tol = 1e-12);

}  // namespace dumbbell
