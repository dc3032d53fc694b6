#include "dumbbell/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dumbbell {

namespace {

// Symmetric tridiagonal (diag a, off-diag b), already folded to the standard
// eigenproblem.
struct Tridiag {
    std::vector<double> a;
    std::vector<double> b;
};

// Number of eigenvalues strictly below sigma, via the LDL^T inertia count.
int count_below(const Tridiag& t, double sigma, double pivmin) {
    int count = 0;
    double d = t.a[0] - sigma;
    if (d < 0.0) ++count;
    for (size_t i = 1; i < t.a.size(); ++i) {
        if (std::fabs(d) < pivmin) d = (d < 0.0) ? -pivmin : pivmin;
        d = (t.a[i] - sigma) - t.b[i - 1] * t.b[i - 1] / d;
        if (d < 0.0) ++count;
    }
    return count;
}

std::vector<double> smallest_eigenvalues(const Tridiag& t, int k) {
    const size_t n = t.a.size();
    if (k < 1 || static_cast<size_t>(k) > n)
        throw std::invalid_argument("smallest_eigenvalues: need 1 <= k <= n");
    double glo = std::numeric_limits<double>::infinity();
    double ghi = -glo;
    for (size_t i = 0; i < n; ++i) {
        const double bl = i > 0 ? std::fabs(t.b[i - 1]) : 0.0;
        const double br = i + 1 < n ? std::fabs(t.b[i]) : 0.0;
        glo = std::min(glo, t.a[i] - bl - br);
        ghi = std::max(ghi, t.a[i] + bl + br);
    }
    double bmax2 = 1.0;
    for (double b : t.b) bmax2 = std::max(bmax2, b * b);
    const double pivmin = std::numeric_limits<double>::min() * bmax2;
    const double span = ghi - glo;
    glo -= 1e-12 * std::fabs(span) + 1e-300;
    ghi += 1e-12 * std::fabs(span) + 1e-300;

    std::vector<double> vals(k);
    for (int idx = 1; idx <= k; ++idx) {
        double lo = glo, hi = ghi;
        for (int it = 0; it < 220; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (count_below(t, mid, pivmin) >= idx)
                hi = mid;
            else
                lo = mid;
            if (hi - lo <=
                4.0 * std::numeric_limits<double>::epsilon() *
                        std::max(std::fabs(lo), std::fabs(hi)) +
                    std::numeric_limits<double>::min())
                break;
        }
        vals[idx - 1] = 0.5 * (lo + hi);
    }
    return vals;
}

// Assemble the mode-m pencil on interior nodes j = 1..last (inclusive) and
// fold by the diagonal mass.  Flags modify the boundary handling:
//   pole_reflect: drop the pole-side flux of the first cell (m=0 regularity)
//   right_kind:   0 = mirror of the pole treatment at j=n (full problem),
//                 1 = Dirichlet neighbor at last+1 (value pinned to 0),
//                 2 = antisymmetric neighbor (f_{last+1} = -f_last)
Tridiag assemble(const MeridianGrid& grid, int m, int last, int right_kind) {
    const double h = grid.h;
    const int q = last;
    std::vector<double> diag(q), off(q > 0 ? q - 1 : 0), mass(q);
    for (int j = 1; j <= q; ++j) {
        double left = grid.r_half[j - 1] / h;
        double right = grid.r_half[j] / h;
        if (m == 0 && j == 1) left = 0.0;
        if (j == q) {
            if (right_kind == 0 && m == 0) right = 0.0;
            if (right_kind == 2) right = 2.0 * grid.r_half[j] / h;
        }
        double d = left + right;
        if (m > 0) d += static_cast<double>(m) * m * h / grid.r[j];
        diag[j - 1] = d;
        mass[j - 1] = grid.r[j] * h;
        if (j < q) off[j - 1] = -grid.r_half[j] / h;
    }
    Tridiag t;
    t.a.resize(q);
    t.b.resize(q > 0 ? q - 1 : 0);
    for (int i = 0; i < q; ++i) t.a[i] = diag[i] / mass[i];
    for (int i = 0; i + 1 < q; ++i)
        t.b[i] = off[i] / std::sqrt(mass[i] * mass[i + 1]);
    return t;
}

double first_above_threshold(const std::vector<ModeSpectrum>& modes, double thr,
                             int* mode_out) {
    double best = std::numeric_limits<double>::infinity();
    int best_m = -1;
    for (const auto& ms : modes) {
        for (double ev : ms.eigenvalues) {
            if (ev > thr) {
                if (ev < best) {
                    best = ev;
                    best_m = ms.m;
                }
                break;
            }
        }
    }
    if (best_m < 0)
        throw std::runtime_error(
            "first_eigenvalue: zero-mode ambiguity — no eigenvalue clears the "
            "zero threshold; refine the grid");
    if (mode_out) *mode_out = best_m;
    return best;
}

double lambda1_of(const MeridianGrid& grid, int m_max, int k, int* mode_out,
                  std::vector<ModeSpectrum>* modes_out) {
    std::vector<ModeSpectrum> modes;
    double scale = 0.0;
    for (int m = 0; m <= m_max; ++m) {
        modes.push_back(mode_eigenvalues(grid, m, k));
        for (double ev : modes.back().eigenvalues)
            scale = std::max(scale, std::fabs(ev));
    }
    const double thr = 1e-8 * scale;
    const double l1 = first_above_threshold(modes, thr, mode_out);
    if (modes_out) *modes_out = std::move(modes);
    return l1;
}

}  // namespace

ModeSpectrum mode_eigenvalues(const MeridianGrid& grid, int m, int k) {
    if (grid.n < 100)
        throw std::invalid_argument("mode_eigenvalues: grid too coarse (n < 100)");
    if (m < 0) throw std::invalid_argument("mode_eigenvalues: m must be >= 0");
    if (k < 1) throw std::invalid_argument("mode_eigenvalues: k must be >= 1");
    const int bc = (m == 0) ? 0 : 1;  // Dirichlet pin at poles for m >= 1
    const Tridiag t = assemble(grid, m, grid.n, bc);
    ModeSpectrum ms;
    ms.m = m;
    ms.n = grid.n;
    ms.eigenvalues = smallest_eigenvalues(t, k);
    return ms;
}

SpectrumResult first_eigenvalue(const MeridianGrid& grid,
                                const MeridianGrid& coarse_grid, int m_max, int k) {
    if (m_max < 1) throw std::invalid_argument("first_eigenvalue: m_max must be >= 1");
    SpectrumResult res;
    res.lambda1 = lambda1_of(grid, m_max, k, &res.mode_of_lambda1, &res.per_mode);
    const double l1c = lambda1_of(coarse_grid, m_max, k, nullptr, nullptr);
    res.convergence_gap = std::fabs(res.lambda1 - l1c) / res.lambda1;
    return res;
}

SpectrumResult first_eigenvalue(const DumbbellParams& p, int n, int m_max, int k) {
    const MeridianGrid grid = build_meridian(p, n);
    const MeridianGrid coarse = build_meridian(p, std::max(100, n / 2));
    return first_eigenvalue(grid, coarse, m_max, k);
}

SymmetryCheck symmetry_crosscheck(const MeridianGrid& grid) {
    const int n = grid.n;
    double rmax = 0.0, asym = 0.0;
    for (int j = 0; j <= n + 1; ++j) {
        rmax = std::max(rmax, grid.r[j]);
        asym = std::max(asym, std::fabs(grid.r[j] - grid.r[n + 1 - j]));
    }
    if (asym > 1e-8 * rmax)
        throw std::invalid_argument("symmetry_crosscheck: grid is not mirror-symmetric");

    SymmetryCheck sc;
    const ModeSpectrum full = mode_eigenvalues(grid, 0, 2);
    const double scale =
        std::max(std::fabs(full.eigenvalues[0]), std::fabs(full.eigenvalues[1]));
    sc.lambda1_full = first_above_threshold({full}, 1e-8 * scale, nullptr);

    // Half problem: Dirichlet at the center of the meridian.  With n+1 cells,
    // the center T/2 is a node when n is odd (pin it), and a cell face when n
    // is even (impose antisymmetry through it).
    Tridiag t;
    if ((n + 1) % 2 == 0) {
        const int c = (n + 1) / 2;
        t = assemble(grid, 0, c - 1, 1);
    } else {
        const int q = (n + 1) / 2;
        t = assemble(grid, 0, q, 2);
    }
    sc.lambda1_half = smallest_eigenvalues(t, 1)[0];
    sc.rel_disagreement =
        std::fabs(sc.lambda1_half - sc.lambda1_full) / sc.lambda1_full;
    return sc;
}

double discrete_quotient(const MeridianGrid& grid, const std::vector<double>& f) {
    const int n = grid.n;
    if (f.size() != static_cast<size_t>(n + 2))
        throw std::invalid_argument("discrete_quotient: need n+2 nodal values");
    double wsum = 0.0, fsum = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double w = grid.r[j] * grid.h;
        wsum += w;
        fsum += w * f[j];
    }
    const double mean = fsum / wsum;
    double num = 0.0, den = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double fj = f[j] - mean;
        if (j < n) {
            const double df = (f[j + 1] - mean) - fj;
            num += grid.r_half[j] * df * df / grid.h;
        }
        den += grid.r[j] * grid.h * fj * fj;
    }
    return den == 0.0 ? 0.0 : num / den;
}

}  // namespace dumbbell
