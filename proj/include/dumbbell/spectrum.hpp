#pragma once

#include <vector>

#include "dumbbell/profile.hpp"

namespace dumbbell {

struct ModeSpectrum {
    int m;
    int n;
    std::vector<double> eigenvalues;  // ascending, the k smallest
};

// Fourier-mode m reduction of the Laplace-Beltrami eigenproblem on the
// meridian: -(r f')' + (m^2/r) f = lambda r f on (0,T).  Finite-volume
// discretization with the exact half-node radii as flux coefficients and
// lumped mass r_j h.  m=0 gets the reflecting (regular) pole condition, m>=1
// a Dirichlet pin.  Eigenvalues by Sturm-sequence bisection.
ModeSpectrum mode_eigenvalues(const MeridianGrid& grid, int m, int k);

struct SpectrumResult {
    double lambda1;
    int mode_of_lambda1;
    std::vector<ModeSpectrum> per_mode;
    double convergence_gap;  // |lambda1(grid) - lambda1(coarse)| / lambda1(grid)
};

// lambda1 = smallest eigenvalue above the zero-mode threshold over modes
// m = 0..m_max; coarse_grid supplies the convergence gap (callers normally
// pass the same surface at half the resolution).
SpectrumResult first_eigenvalue(const MeridianGrid& grid,
                                const MeridianGrid& coarse_grid, int m_max, int k);

// Convenience: builds the n and n/2 meridians itself.
SpectrumResult first_eigenvalue(const DumbbellParams& p, int n, int m_max = 2,
                                int k = 4);

struct SymmetryCheck {
    double lambda1_full;
    double lambda1_half;  // first eigenvalue of the half-meridian problem,
                          // Dirichlet at the center (lambda1's eigenfunction
                          // is odd across the mirror plane)
    double rel_disagreement;
};

SymmetryCheck symmetry_crosscheck(const MeridianGrid& grid);

// Rayleigh quotient of nodal values f (size n+2, pole entries unused) in the
// exact discrete m=0 form, after projecting out the discrete mean.  The
// constant vector returns exactly 0.
double discrete_quotient(const MeridianGrid& grid, const std::vector<double>& f);

}  // namespace dumbbell
