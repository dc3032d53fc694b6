#include "dumbbell/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "dumbbell/geometry.hpp"
#include "dumbbell/integral_curvature.hpp"
#include "dumbbell/profile.hpp"
#include "dumbbell/spectrum.hpp"

namespace dumbbell {

std::vector<double> dyadic_eps(int i0, int i1) {
    if (i0 < 1 || i1 < i0) throw std::domain_error("dyadic_eps: need 1 <= i0 <= i1");
    std::vector<double> eps;
    for (long i = i0; i <= i1; i *= 2) eps.push_back(1.0 / static_cast<double>(i));
    return eps;
}

namespace {

SweepRow compute_row(const SweepConfig& cfg, double eps) {
    SweepRow row;
    row.eps = eps;
    row.rayleigh_bound = 2.0 * eps / (cfg.L * cfg.R * cfg.R);
    row.diam_bound = (2.0 * M_PI + 8.0) * cfg.R + 2.0 * cfg.L;
    try {
        const DumbbellParams p = make_params(cfg.R, cfg.L, eps);
        ProfileCurve curve(p);

        const SpectrumResult sp = first_eigenvalue(p, cfg.grid_n, cfg.m_max, cfg.k_eigs);
        row.lambda1 = sp.lambda1;
        row.convergence_gap = sp.convergence_gap;

        const IntegralCurvatureResult k0 = kbar(curve, cfg.p, 0.0, cfg.tol_quad);
        row.kbar_p0 = k0.kbar;
        row.kbar_pK =
            cfg.K == 0.0 ? k0.kbar : kbar(curve, cfg.p, cfg.K, cfg.tol_quad).kbar;
        row.area = k0.area;

        const NeckBounds nb = neck_bound_integrals(p, p.x1 + p.R / 8.0, cfg.tol_quad);
        row.M1_est = nb.M1_est;
        row.M2_est = nb.M2_est;

        row.meridian_length = meridian_length(p);
        row.gauss_bonnet = gauss_bonnet_total(curve, cfg.tol_quad);
    } catch (const std::exception& e) {
        row.status = e.what();
    }
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    std::vector<SweepRow> rows(cfg.eps.size());
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || rows.size() <= 1) {
        for (size_t i = 0; i < cfg.eps.size(); ++i) rows[i] = compute_row(cfg, cfg.eps[i]);
        return rows;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < cfg.eps.size(); i = next.fetch_add(1))
            rows[i] = compute_row(cfg, cfg.eps[i]);
    };
    std::vector<std::thread> pool;
    const size_t count = std::min<size_t>(jobs, cfg.eps.size());
    pool.reserve(count);
    for (size_t i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return rows;
}

std::string check_sweep_invariants(const SweepConfig& cfg,
                                   const std::vector<SweepRow>& rows) {
    const double area_lo = 4.0 * M_PI * cfg.R * cfg.R;
    const double area_hi = 10.0 * M_PI * cfg.R * cfg.R + 2.0 * M_PI * cfg.L;
    for (size_t i = 0; i < rows.size(); ++i) {
        const SweepRow& r = rows[i];
        const std::string where = "row eps=" + fmt_sig12(r.eps) + ": ";
        if (r.status != "ok") return where + "computation failed: " + r.status;
        if (!(r.lambda1 <= r.rayleigh_bound))
            return where + "lambda1 exceeds the test-function bound";
        if (i > 0 && !(r.lambda1 < rows[i - 1].lambda1))
            return where + "lambda1 column is not strictly decreasing";
        if (!(r.kbar_pK <= cfg.K + r.kbar_p0 + 1e-8))
            return where + "kbar(p,K) violates the Minkowski chain";
        if (!(r.area >= area_lo && r.area <= area_hi))
            return where + "area outside [4piR^2, 10piR^2+2piL]";
        if (!(r.meridian_length <= r.diam_bound))
            return where + "meridian length exceeds the diameter bound";
        if (!(std::fabs(r.gauss_bonnet - 4.0 * M_PI) / (4.0 * M_PI) <= 1e-6))
            return where + "Gauss-Bonnet defect above 1e-6 relative";
    }
    return "";
}

std::string fmt_sig12(double v) {
    if (v == 0.0) v = 0.0;  // print -0.0 as "0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

constexpr const char* kSchema = "sweep.v1";

const char* kColumns[] = {"eps",    "lambda1",  "rayleigh_bound",
                          "kbar_p0", "kbar_pK",  "M1_est",
                          "M2_est",  "area",     "meridian_length",
                          "diam_bound", "gauss_bonnet", "convergence_gap"};

std::vector<double> row_values(const SweepRow& r) {
    return {r.eps,    r.lambda1,  r.rayleigh_bound, r.kbar_p0,
            r.kbar_pK, r.M1_est,   r.M2_est,         r.area,
            r.meridian_length, r.diam_bound, r.gauss_bonnet, r.convergence_gap};
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (static_cast<unsigned char>(c) < 0x20) { out += ' '; continue; }
        out += c;
    }
    return out;
}

}  // namespace

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "schema";
    for (const char* c : kColumns) os << ',' << c;
    os << ",status\n";
    for (const SweepRow& r : rows) {
        os << kSchema;
        for (double v : row_values(r)) os << ',' << fmt_sig12(v);
        os << ',' << r.status << '\n';
    }
}

void write_sweep_json(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        os << "  {\"schema\": \"" << kSchema << '"';
        const auto vals = row_values(rows[i]);
        for (size_t c = 0; c < vals.size(); ++c)
            os << ", \"" << kColumns[c] << "\": " << fmt_sig12(vals[c]);
        os << ", \"status\": \"" << json_escape(rows[i].status) << "\"}";
        os << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    os << "]\n";
}

}  // namespace dumbbell
