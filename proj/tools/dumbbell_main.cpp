#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dumbbell/claims.hpp"
#include "dumbbell/geometry.hpp"
#include "dumbbell/profile.hpp"
#include "dumbbell/spectrum.hpp"
#include "dumbbell/sweep.hpp"

using namespace dumbbell;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << '\n';
    return kExitUsage;
}

// Flat key=value config; '#' starts a comment.  Returns false on malformed
// lines or keys outside `known`.
bool read_flat_config(const std::string& path, const std::vector<std::string>& known,
                      std::map<std::string, std::string>& out, std::string& err) {
    std::ifstream in(path);
    if (!in) {
        err = "cannot open config file: " + path;
        return false;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        if (strip(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            err = "config line " + std::to_string(lineno) + ": expected key=value";
            return false;
        }
        const std::string key = strip(line.substr(0, eq));
        const std::string val = strip(line.substr(eq + 1));
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            err = "config line " + std::to_string(lineno) + ": unknown key '" + key + "'";
            return false;
        }
        out[key] = val;
    }
    return true;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::string t = s;
    for (char& c : t)
        if (c == ',') c = ' ';
    std::istringstream is(t);
    std::vector<double> vals;
    double v;
    while (is >> v) vals.push_back(v);
    return vals;
}

bool parse_dyadic(const std::string& s, int& i0, int& i1) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) return false;
    try {
        i0 = std::stoi(s.substr(0, colon));
        i1 = std::stoi(s.substr(colon + 1));
    } catch (...) {
        return false;
    }
    return i0 >= 1 && i1 >= i0;
}

struct SweepArgs {
    SweepConfig cfg;
    std::vector<double> eps_list;
    std::string eps_dyadic;
    std::string out_csv, out_json, config_path;
};

int do_sweep(CLI::App* cmd, SweepArgs& a) {
    static const std::vector<std::string> keys = {
        "R",     "L",      "eps-list", "eps-dyadic", "p",       "K",       "grid-n",
        "m-max", "k-eigs", "jobs",     "out-csv",    "out-json", "tol-quad"};
    std::map<std::string, std::string> file;
    if (!a.config_path.empty()) {
        std::string err;
        if (!read_flat_config(a.config_path, keys, file, err)) return usage_error(err);
    }
    // Precedence: explicit flag > config file > default.
    const auto passed = [&](const std::string& flag) {
        return cmd->count("--" + flag) > 0;
    };
    const auto fval = [&](const std::string& key) -> const std::string* {
        auto it = file.find(key);
        return it == file.end() ? nullptr : &it->second;
    };
    try {
        if (!passed("R"))
            if (auto* v = fval("R")) a.cfg.R = std::stod(*v);
        if (!passed("L"))
            if (auto* v = fval("L")) a.cfg.L = std::stod(*v);
        if (!passed("p"))
            if (auto* v = fval("p")) a.cfg.p = std::stod(*v);
        if (!passed("K"))
            if (auto* v = fval("K")) a.cfg.K = std::stod(*v);
        if (!passed("grid-n"))
            if (auto* v = fval("grid-n")) a.cfg.grid_n = std::stoi(*v);
        if (!passed("m-max"))
            if (auto* v = fval("m-max")) a.cfg.m_max = std::stoi(*v);
        if (!passed("k-eigs"))
            if (auto* v = fval("k-eigs")) a.cfg.k_eigs = std::stoi(*v);
        if (!passed("jobs"))
            if (auto* v = fval("jobs")) a.cfg.jobs = std::stoi(*v);
        if (!passed("tol-quad"))
            if (auto* v = fval("tol-quad")) a.cfg.tol_quad = std::stod(*v);
        if (a.out_csv.empty())
            if (auto* v = fval("out-csv")) a.out_csv = *v;
        if (a.out_json.empty())
            if (auto* v = fval("out-json")) a.out_json = *v;
    } catch (const std::exception&) {
        return usage_error("config file: malformed numeric value");
    }

    // eps selection, same precedence; the two spellings are mutually exclusive
    // within one source.
    if (passed("eps-list")) {
        a.cfg.eps = a.eps_list;
    } else if (passed("eps-dyadic")) {
        int i0, i1;
        if (!parse_dyadic(a.eps_dyadic, i0, i1))
            return usage_error("--eps-dyadic expects i0:i1 with 1 <= i0 <= i1");
        a.cfg.eps = dyadic_eps(i0, i1);
    } else if (fval("eps-list") && fval("eps-dyadic")) {
        return usage_error("config file sets both eps-list and eps-dyadic");
    } else if (auto* v = fval("eps-list")) {
        a.cfg.eps = parse_double_list(*v);
    } else if (auto* v = fval("eps-dyadic")) {
        int i0, i1;
        if (!parse_dyadic(*v, i0, i1))
            return usage_error("config eps-dyadic expects i0:i1 with 1 <= i0 <= i1");
        a.cfg.eps = dyadic_eps(i0, i1);
    }  // else keep default

    if (!(a.cfg.R > 0.0) || !(a.cfg.L > 0.0)) return usage_error("R and L must be positive");
    if (!(a.cfg.p > 1.0 && a.cfg.p <= 2.0)) return usage_error("p must lie in (1, 2]");
    if (!(a.cfg.K >= 0.0)) return usage_error("K must be >= 0");
    if (a.cfg.grid_n < 200) return usage_error("grid-n must be >= 200");
    if (a.cfg.m_max < 1) return usage_error("m-max must be >= 1");
    if (a.cfg.k_eigs < 2) return usage_error("k-eigs must be >= 2");
    if (a.cfg.jobs < 1) return usage_error("jobs must be >= 1");
    if (!(a.cfg.tol_quad > 0.0 && a.cfg.tol_quad <= 1e-4))
        return usage_error("tol-quad must lie in (0, 1e-4]");
    if (a.cfg.eps.empty()) return usage_error("eps list is empty");
    for (size_t i = 0; i < a.cfg.eps.size(); ++i) {
        if (!(a.cfg.eps[i] > 0.0 && a.cfg.eps[i] < a.cfg.R / 2.0))
            return usage_error("eps values must lie in (0, R/2)");
        if (i > 0 && !(a.cfg.eps[i] < a.cfg.eps[i - 1]))
            return usage_error("eps values must be strictly descending");
    }

    const std::vector<SweepRow> rows = run_sweep(a.cfg);

    std::cout << "eps           lambda1       2eps/(LR^2)   kbar_p0       kbar_pK     "
                 "  area          gap           status\n";
    for (const auto& r : rows) {
        std::ostringstream os;
        const double cols[] = {r.eps,    r.lambda1, r.rayleigh_bound,
                               r.kbar_p0, r.kbar_pK, r.area,
                               r.convergence_gap};
        for (double v : cols) {
            std::string f = fmt_sig12(v);
            f.resize(std::max<size_t>(f.size(), 13), ' ');
            os << f << ' ';
        }
        std::cout << os.str() << r.status << '\n';
    }

    if (!a.out_csv.empty()) {
        std::ofstream f(a.out_csv, std::ios::binary);
        if (!f) return usage_error("cannot write " + a.out_csv);
        write_sweep_csv(f, rows);
    }
    if (!a.out_json.empty()) {
        std::ofstream f(a.out_json, std::ios::binary);
        if (!f) return usage_error("cannot write " + a.out_json);
        write_sweep_json(f, rows);
    }

    const std::string bad = check_sweep_invariants(a.cfg, rows);
    if (!bad.empty()) {
        std::cerr << "invariant violation: " << bad << '\n';
        return kExitInvariant;
    }
    std::cout << "invariants: ok\n";
    return kExitOk;
}

struct SpectrumArgs {
    double R = 2.0, L = 1.0, eps = 0.1;
    bool sphere = false;
    int grid_n = 4000, m_max = 2, k_eigs = 4;
    std::string out_json;
};

int do_spectrum(const SpectrumArgs& a) {
    SpectrumResult res;
    if (a.sphere) {
        const MeridianGrid g = sphere_meridian(a.R, a.grid_n);
        const MeridianGrid gh = sphere_meridian(a.R, std::max(100, a.grid_n / 2));
        res = first_eigenvalue(g, gh, a.m_max, a.k_eigs);
    } else {
        res = first_eigenvalue(make_params(a.R, a.L, a.eps), a.grid_n, a.m_max, a.k_eigs);
    }
    for (const auto& ms : res.per_mode) {
        std::cout << "m=" << ms.m << ":";
        for (double ev : ms.eigenvalues) std::cout << ' ' << fmt_sig12(ev);
        std::cout << '\n';
    }
    std::cout << "lambda1 = " << fmt_sig12(res.lambda1) << " (mode " << res.mode_of_lambda1
              << "), convergence_gap = " << fmt_sig12(res.convergence_gap) << '\n';
    if (!a.out_json.empty()) {
        std::ofstream f(a.out_json, std::ios::binary);
        if (!f) return usage_error("cannot write " + a.out_json);
        f << "{\"schema\": \"spectrum.v1\", \"lambda1\": " << fmt_sig12(res.lambda1)
          << ", \"mode_of_lambda1\": " << res.mode_of_lambda1
          << ", \"convergence_gap\": " << fmt_sig12(res.convergence_gap)
          << ", \"per_mode\": [";
        for (size_t i = 0; i < res.per_mode.size(); ++i) {
            const auto& ms = res.per_mode[i];
            f << (i ? ", " : "") << "{\"m\": " << ms.m << ", \"n\": " << ms.n
              << ", \"eigenvalues\": [";
            for (size_t j = 0; j < ms.eigenvalues.size(); ++j)
                f << (j ? ", " : "") << fmt_sig12(ms.eigenvalues[j]);
            f << "]}";
        }
        f << "]}\n";
    }
    if (res.convergence_gap > 0.01) {
        std::cerr << "invariant violation: convergence gap above 1%\n";
        return kExitInvariant;
    }
    return kExitOk;
}

struct ProfileArgs {
    double R = 2.0, L = 1.0, eps = 0.1;
    int samples = 400;
    std::string out_csv;
};

int do_profile(const ProfileArgs& a) {
    if (a.samples < 2) return usage_error("samples must be >= 2");
    const DumbbellParams p = make_params(a.R, a.L, a.eps);
    ProfileCurve curve(p);
    std::ostringstream os;
    os << "x,g,g1,g2,kappa\n";
    for (int i = 0; i < a.samples; ++i) {
        const double x = p.pole() * i / (a.samples - 1.0);
        const auto [g, g1, g2] = curve.eval(x);
        // kappa at the pole itself is the exact cap value 1/R^2.
        const double kap =
            (i + 1 == a.samples) ? 1.0 / (p.R * p.R) : gaussian_curvature(curve, x);
        os << fmt_sig12(x) << ',' << fmt_sig12(g) << ',' << fmt_sig12(g1) << ','
           << fmt_sig12(g2) << ',' << fmt_sig12(kap) << '\n';
    }
    if (a.out_csv.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(a.out_csv, std::ios::binary);
        if (!f) return usage_error("cannot write " + a.out_csv);
        f << os.str();
    }
    double min_g1 = 0.0;
    for (int i = 1; i < 2000; ++i) {
        const double x = p.x1 + (p.x2 - p.x1) * i / 2000.0;
        min_g1 = std::min(min_g1, curve.eval(x).g1);
    }
    if (min_g1 < -1e-12) {
        std::cerr << "invariant violation: profile not monotone on [x1, x2]\n";
        return kExitInvariant;
    }
    return kExitOk;
}

struct ClaimsArgs {
    double R = 2.0, L = 1.0;
    std::string out_json;
};

int do_claims(const ClaimsArgs& a) {
    const auto reports = run_all_claims(make_params(a.R, a.L, 0.0));
    bool all = true;
    for (const auto& r : reports) {
        all = all && r.pass;
        std::cout << r.claim_id << ": " << (r.pass ? "pass" : "FAIL")
                  << " (worst_margin = " << fmt_sig12(r.worst_margin) << ")\n";
    }
    if (!a.out_json.empty()) {
        std::ofstream f(a.out_json, std::ios::binary);
        if (!f) return usage_error("cannot write " + a.out_json);
        f << "[\n";
        for (size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            f << "  {\"schema\": \"claims.v1\", \"claim_id\": \"" << r.claim_id
              << "\", \"grid_spec\": \"" << r.grid_spec << "\", \"pass\": "
              << (r.pass ? "true" : "false")
              << ", \"worst_margin\": " << fmt_sig12(r.worst_margin) << "}"
              << (i + 1 < reports.size() ? ",\n" : "\n");
        }
        f << "]\n";
    }
    if (!all) {
        std::cerr << "invariant violation: claim suite has failures\n";
        return kExitInvariant;
    }
    return kExitOk;
}

struct GbArgs {
    double R = 2.0, L = 1.0, eps = 0.1;
    double tol_quad = 1e-10;
};

int do_gaussbonnet(const GbArgs& a) {
    ProfileCurve curve(make_params(a.R, a.L, a.eps));
    const double total = gauss_bonnet_total(curve, a.tol_quad);
    const double rel = std::fabs(total - 4.0 * M_PI) / (4.0 * M_PI);
    std::cout << "total curvature = " << fmt_sig12(total) << " (4*pi = "
              << fmt_sig12(4.0 * M_PI) << ", rel defect " << fmt_sig12(rel) << ")\n";
    if (rel > 1e-6) {
        std::cerr << "invariant violation: Gauss-Bonnet defect above 1e-6\n";
        return kExitInvariant;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dumbbell surfaces: profile, spectra, curvature norms"};
    app.require_subcommand(1);

    SweepArgs sw;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "eigenvalue/curvature table over a descending eps list");
    sweep->add_option("--R", sw.cfg.R, "cap radius");
    sweep->add_option("--L", sw.cfg.L, "cylinder length");
    auto* optl = sweep->add_option("--eps-list", sw.eps_list, "explicit eps values");
    auto* optd = sweep->add_option("--eps-dyadic", sw.eps_dyadic,
                                   "i0:i1 -> eps = 1/i, i doubling (default 5:40)");
    optl->excludes(optd);
    optd->excludes(optl);
    sweep->add_option("--p", sw.cfg.p, "norm exponent in (1,2]");
    sweep->add_option("--K", sw.cfg.K, "curvature level");
    sweep->add_option("--grid-n", sw.cfg.grid_n, "meridian interior nodes");
    sweep->add_option("--m-max", sw.cfg.m_max, "highest Fourier mode");
    sweep->add_option("--k-eigs", sw.cfg.k_eigs, "eigenvalues per mode");
    sweep->add_option("--jobs", sw.cfg.jobs, "concurrent rows");
    sweep->add_option("--out-csv", sw.out_csv, "CSV output path");
    sweep->add_option("--out-json", sw.out_json, "JSON output path");
    sweep->add_option("--tol-quad", sw.cfg.tol_quad, "quadrature tolerance");
    sweep->add_option("--config", sw.config_path, "flat key=value config file");

    SpectrumArgs sp;
    CLI::App* spectrum = app.add_subcommand("spectrum", "per-mode eigenvalue table");
    spectrum->add_option("--R", sp.R, "cap/sphere radius");
    spectrum->add_option("--L", sp.L, "cylinder length");
    spectrum->add_option("--eps", sp.eps, "neck radius");
    spectrum->add_flag("--sphere", sp.sphere, "round sphere of radius R instead");
    spectrum->add_option("--grid-n", sp.grid_n, "meridian interior nodes");
    spectrum->add_option("--m-max", sp.m_max, "highest Fourier mode");
    spectrum->add_option("--k-eigs", sp.k_eigs, "eigenvalues per mode");
    spectrum->add_option("--out-json", sp.out_json, "JSON output path");

    ProfileArgs pr;
    CLI::App* profile = app.add_subcommand("profile", "sampled profile curve CSV");
    profile->add_option("--R", pr.R, "cap radius");
    profile->add_option("--L", pr.L, "cylinder length");
    profile->add_option("--eps", pr.eps, "neck radius");
    profile->add_option("--samples", pr.samples, "row count");
    profile->add_option("--out-csv", pr.out_csv, "CSV output path (default stdout)");

    ClaimsArgs cl;
    CLI::App* claims = app.add_subcommand("claims", "inequality verification suite");
    claims->add_option("--R", cl.R, "cap radius");
    claims->add_option("--L", cl.L, "cylinder length");
    claims->add_option("--out-json", cl.out_json, "JSON output path");

    GbArgs gb;
    CLI::App* gaussbonnet =
        app.add_subcommand("gaussbonnet", "total-curvature quadrature check");
    gaussbonnet->add_option("--R", gb.R, "cap radius");
    gaussbonnet->add_option("--L", gb.L, "cylinder length");
    gaussbonnet->add_option("--eps", gb.eps, "neck radius");
    gaussbonnet->add_option("--tol-quad", gb.tol_quad, "quadrature tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sweep->parsed()) return do_sweep(sweep, sw);
        if (spectrum->parsed()) return do_spectrum(sp);
        if (profile->parsed()) return do_profile(pr);
        if (claims->parsed()) return do_claims(cl);
        if (gaussbonnet->parsed()) return do_gaussbonnet(gb);
    } catch (const std::domain_error& e) {
        return usage_error(e.what());
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << '\n';
        return kExitInvariant;
    }
    return usage_error("no subcommand given");
}
