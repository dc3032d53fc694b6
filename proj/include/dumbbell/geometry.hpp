#pragma once

#include "dumbbell/profile.hpp"

namespace dumbbell {

struct GeometrySummary {
    double area;
    double meridian_length;
    double diam_bound;   // (2*pi+8)R + 2L
    double area_bound;   // 10*pi*R^2 + 2*pi*L
    double gauss_bonnet;
};

// kappa = -g'' / (g (g'^2+1)^2).  Exactly 0 on the cylinder, exactly 1/R^2 on
// the cap.  Domain error where g = 0 (poles).
double gaussian_curvature(const ProfileCurve& curve, double x);

// dS/dx = 2*pi*g*sqrt(1+g'^2).
double area_element(const ProfileCurve& curve, double x);

// Twice the half-profile integral of the area element.  Cylinder and cap
// contributions are closed-form (the cap piece is exactly round, which also
// sidesteps the removable g->0 endpoint); only the neck is quadrature.
double surface_area(const ProfileCurve& curve, double rel_tol = 1e-10);

// Quadrature of kappa * (dS/dx) over the neck (a cancelling integral, ~0)
// plus the closed-form hemispherical caps (2*pi each).  Returns ~4*pi.
double gauss_bonnet_total(const ProfileCurve& curve, double rel_tol = 1e-10);

// Round-sphere area by quadrature in arc-length parametrization; oracle value
// 4*pi*R^2.
double sphere_area(double R, double rel_tol = 1e-10);

// Assembles the summary and checks the monotone-piece length bound
// neck <= (x2-x1) + (R-eps).  Requires eps <= 1.
GeometrySummary bounds_summary(const DumbbellParams& p, const ProfileCurve& curve,
                               double rel_tol = 1e-10);

}  // namespace dumbbell
