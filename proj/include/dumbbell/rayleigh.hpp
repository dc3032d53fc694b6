#pragma once

#include <vector>

#include "dumbbell/profile.hpp"

namespace dumbbell {

// The odd step test function: -c on the left cap+neck, +c on the right,
// linear in x (equivalently, in arc length) across the cylinder.  Lipschitz,
// mean-zero by antisymmetry, so it is admissible in the Rayleigh quotient.
struct TestQuotient {
    double dirichlet;  // integral of |grad f|^2 over the surface
    double mass;       // integral of f^2
    double quotient;
};

// dirichlet = 8*pi*eps*c^2/L exactly (gradient 2c/L on the cylinder, zero
// elsewhere); mass >= 4*pi*R^2*c^2; quotient <= 2*eps/(L*R^2).
TestQuotient test_quotient(const ProfileCurve& curve, double c,
                           double rel_tol = 1e-10);

struct BoundRow {
    double eps;
    double bound;  // 2*eps/(L*R^2)
};

// Requires a positive, strictly descending eps list.
std::vector<BoundRow> sweep_bound(double R, double L,
                                  const std::vector<double>& eps_list);

// Test function sampled at the meridian grid nodes (n+2 values):
// f(t) = c * clamp((t - T/2)/x1, -1, 1).  On the cylinder arc length equals
// the profile abscissa, so this is the same function as in test_quotient.
std::vector<double> sample_test_function(const DumbbellParams& p,
                                         const MeridianGrid& grid, double c);

}  // namespace dumbbell
