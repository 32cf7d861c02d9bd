// torusgf: critical points of the torus Green's function, the associated
// curvature-1 conic metrics, and entire-function growth checks.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "torusgf/dynamics.hpp"
#include "torusgf/elliptic.hpp"
#include "torusgf/errors.hpp"
#include "torusgf/green.hpp"
#include "torusgf/io.hpp"
#include "torusgf/lattice.hpp"
#include "torusgf/metric.hpp"
#include "torusgf/region.hpp"
#include "torusgf/wv.hpp"

namespace {

using namespace torusgf;

std::string jstr(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(errname::io_error, "cannot open " + path);
    f << text;
}

cplx parse_tau_arg(const std::string& text) {
    cplx tau;
    try {
        tau = parse_complex(text);
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--tau", e.what());
    }
    if (!(tau.imag() > 0.0)) {
        throw CLI::ValidationError("--tau", "Im(tau) must be positive");
    }
    return tau;
}

std::string lattice_json(const TorusLattice& L) {
    std::ostringstream os;
    os << "{\n"
       << "  \"tau\": " << format_complex_json(L.tau) << ",\n"
       << "  \"eta1\": " << format_complex_json(L.eta1) << ",\n"
       << "  \"eta2\": " << format_complex_json(L.eta2) << ",\n"
       << "  \"e\": [" << format_complex_json(L.e[0]) << ", "
       << format_complex_json(L.e[1]) << ", " << format_complex_json(L.e[2])
       << "],\n"
       << "  \"g2\": " << format_complex_json(L.g2) << ",\n"
       << "  \"g3\": " << format_complex_json(L.g3) << ",\n"
       << "  \"area\": " << format_double(L.area) << "\n"
       << "}";
    return os.str();
}

const char* kind_name(PointKind k) {
    return k == PointKind::trivial_halfperiod ? "trivial_halfperiod"
                                              : "nontrivial";
}

const char* stability_name(Stability s) {
    switch (s) {
        case Stability::attracting: return "attracting";
        case Stability::repelling: return "repelling";
        default: return "indeterminate";
    }
}

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::ok: return "ok";
        case SolveStatus::boundary_indeterminate: return "boundary_indeterminate";
        default: return "solver_incomplete";
    }
}

std::string report_json(const CriticalPointReport& r) {
    std::ostringstream os;
    os << "{\n"
       << "  \"tau\": " << format_complex_json(r.lattice.tau) << ",\n"
       << "  \"status\": " << jstr(status_name(r.status)) << ",\n"
       << "  \"total\": " << r.total << ",\n"
       << "  \"n_plus\": " << r.n_plus << ",\n"
       << "  \"n_minus\": " << r.n_minus << ",\n"
       << "  \"points\": [";
    for (size_t i = 0; i < r.points.size(); ++i) {
        const CriticalPoint& p = r.points[i];
        os << (i ? ",\n    " : "\n    ") << "{\"a\": "
           << format_complex_json(p.location) << ", \"kind\": "
           << jstr(kind_name(p.kind)) << ", \"stability\": "
           << jstr(stability_name(p.stability)) << ", \"multiplier_modulus\": "
           << format_double(p.multiplier_modulus) << ", \"orientation\": "
           << p.orientation_sign << ", \"residual\": "
           << format_double(p.residual_norm) << "}";
    }
    os << "\n  ]\n}";
    return os.str();
}

// deterministic uniform doubles independent of the standard library
double uniform01(std::mt19937_64& gen) {
    return double(gen() >> 11) * 0x1.0p-53;
}

int run(int argc, char** argv) {
    CLI::App app{"critical points of the torus Green's function and "
                 "related numerics"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for grid scans")
        ->capture_default_str();

    // ---- lattice ----------------------------------------------------------
    auto* cmd_lat = app.add_subcommand("lattice", "lattice constants as JSON");
    std::string lat_tau, lat_eval, lat_json;
    cmd_lat->add_option("--tau", lat_tau, "modulus, e.g. 0.3+0.8i")->required();
    cmd_lat->add_option("--eval", lat_eval,
                        "also print sigma/zeta/wp/wp' at this point");
    cmd_lat->add_option("--json", lat_json, "output path (default stdout)");
    cmd_lat->callback([&] {
        const TorusLattice L = lattice_from_tau(parse_tau_arg(lat_tau));
        std::string out = lattice_json(L);
        if (!lat_eval.empty()) {
            const WeierstrassBundle b = weierstrass(parse_complex(lat_eval), L);
            std::ostringstream os;
            os << out.substr(0, out.size() - 2) << ",\n  \"weierstrass\": {"
               << "\"at\": " << format_complex_json(b.at)
               << ", \"sigma\": " << format_complex_json(b.sigma)
               << ", \"zeta\": " << format_complex_json(b.zeta)
               << ", \"p\": " << format_complex_json(b.p)
               << ", \"p_prime\": " << format_complex_json(b.p_prime)
               << "}\n}";
            out = os.str();
        }
        emit(out + "\n", lat_json);
    });

    // ---- critical-points --------------------------------------------------
    auto* cmd_cp = app.add_subcommand("critical-points",
                                      "solve the fixed-point equation");
    std::string cp_tau, cp_json;
    cmd_cp->add_option("--tau", cp_tau)->required();
    cmd_cp->add_option("--json", cp_json, "output path (default stdout)");
    cmd_cp->callback([&] {
        const TorusLattice L = lattice_from_tau(parse_tau_arg(cp_tau));
        SolverOptions opts;
        opts.threads = threads;
        const CriticalPointReport rep = solve_critical_points(L, opts);
        emit(report_json(rep) + "\n", cp_json);
        if (rep.status != SolveStatus::ok) {
            throw Error(status_name(rep.status),
                        "critical point solve ended with status " +
                            std::string(status_name(rep.status)));
        }
    });

    // ---- orbit -------------------------------------------------------------
    auto* cmd_orbit = app.add_subcommand("orbit", "iterate the map g");
    std::string ob_tau, ob_z0, ob_out;
    int ob_max = 200;
    cmd_orbit->add_option("--tau", ob_tau)->required();
    cmd_orbit->add_option("--z0", ob_z0)->required();
    cmd_orbit->add_option("--max-iter", ob_max)->capture_default_str();
    cmd_orbit->add_option("--out", ob_out, "CSV path (default stdout)");
    cmd_orbit->callback([&] {
        const TorusLattice L = lattice_from_tau(parse_tau_arg(ob_tau));
        const OrbitRecord rec =
            iterate_orbit(parse_complex(ob_z0), ob_max, L);
        std::ostringstream os;
        os << "step,re,im\n";
        for (size_t k = 0; k < rec.points.size(); ++k) {
            os << k << ',' << format_double(rec.points[k].real()) << ','
               << format_double(rec.points[k].imag()) << "\n";
        }
        emit(os.str(), ob_out);
    });

    // ---- region ------------------------------------------------------------
    auto* cmd_region = app.add_subcommand("region", "tau-plane region tools");
    cmd_region->require_subcommand(1);
    auto* cmd_scan = cmd_region->add_subcommand("scan", "scan a tau window");
    double sc_remin = -0.5, sc_remax = 0.5, sc_immin = 0.5, sc_immax = 2.0;
    int sc_nx = 100, sc_ny = 100;
    bool sc_cross = false;
    std::string sc_out, sc_svg;
    cmd_scan->add_option("--re-min", sc_remin)->capture_default_str();
    cmd_scan->add_option("--re-max", sc_remax)->capture_default_str();
    cmd_scan->add_option("--im-min", sc_immin)->capture_default_str();
    cmd_scan->add_option("--im-max", sc_immax)->capture_default_str();
    cmd_scan->add_option("--nx", sc_nx)->capture_default_str();
    cmd_scan->add_option("--ny", sc_ny)->capture_default_str();
    cmd_scan->add_flag("--cross-validate", sc_cross,
                       "also run the solver per sample");
    cmd_scan->add_option("--out", sc_out, "CSV path (default stdout)");
    cmd_scan->add_option("--svg", sc_svg, "SVG path");
    cmd_scan->callback([&] {
        if (!(sc_immin >= kTauImFloor)) {
            throw CLI::ValidationError("--im-min",
                                       "window must stay at or above 0.05");
        }
        if (!(sc_immax > sc_immin) || !(sc_remax > sc_remin)) {
            throw CLI::ValidationError("region scan", "empty window");
        }
        ScanOptions opts;
        opts.cross_validate = sc_cross;
        opts.threads = threads;
        const TauRegionMap map =
            scan_region(sc_remin, sc_remax, sc_immin, sc_immax, sc_nx, sc_ny,
                        opts);
        std::ostringstream os;
        write_region_csv(map, os);
        emit(os.str(), sc_out);
        if (!sc_svg.empty()) {
            std::ostringstream svg;
            write_region_svg(map, svg);
            emit(svg.str(), sc_svg);
        }
    });

    // ---- metric ------------------------------------------------------------
    auto* cmd_metric = app.add_subcommand(
        "metric", "curvature-1 conic metric from a nontrivial solution");
    std::string mt_tau, mt_c = "1", mt_a, mt_csv, mt_json;
    int mt_nx = 48, mt_ny = 48;
    cmd_metric->add_option("--tau", mt_tau)->required();
    cmd_metric->add_option("--c", mt_c, "scale parameter (default 1)")
        ->capture_default_str();
    cmd_metric->add_option("--a", mt_a,
                           "use this solution instead of solving");
    cmd_metric->add_option("--nx", mt_nx)->capture_default_str();
    cmd_metric->add_option("--ny", mt_ny)->capture_default_str();
    cmd_metric->add_option("--out-csv", mt_csv, "grid of u (re,im,u)");
    cmd_metric->add_option("--json", mt_json, "summary path (default stdout)");
    cmd_metric->callback([&] {
        const TorusLattice L = lattice_from_tau(parse_tau_arg(mt_tau));
        cplx a;
        if (!mt_a.empty()) {
            a = parse_complex(mt_a);
        } else {
            const CriticalPointReport rep = solve_critical_points(L);
            const CriticalPoint* pick = nullptr;
            for (const CriticalPoint& p : rep.points) {
                if (p.kind == PointKind::nontrivial) {
                    if (!pick || p.location.imag() < pick->location.imag()) {
                        pick = &p;
                    }
                }
            }
            if (!pick) {
                throw Error("no_nontrivial_solution",
                            "tau is outside the five-point region; no "
                            "nontrivial solution exists");
            }
            a = pick->location;
        }
        const MetricSolution sol =
            make_metric_solution(a, parse_complex(mt_c), L);
        const auto [l1, l2] = multipliers(sol);

        if (!mt_csv.empty()) {
            std::ostringstream os;
            os << "re,im,u\n";
            for (int j = 0; j < mt_ny; ++j) {
                for (int i = 0; i < mt_nx; ++i) {
                    const cplx z = (i + 0.5) / double(mt_nx) +
                                   L.tau * ((j + 0.5) / double(mt_ny));
                    os << format_double(z.real()) << ','
                       << format_double(z.imag()) << ','
                       << format_double(metric_u(z, sol)) << "\n";
                }
            }
            emit(os.str(), mt_csv);
        }

        const std::vector<double> radii = {1e-2, 5.6234132519034907e-3,
                                           3.1622776601683794e-3,
                                           1.7782794100389228e-3, 1e-3,
                                           5.6234132519034907e-4,
                                           3.1622776601683794e-4,
                                           1.7782794100389228e-4, 1e-4};
        const double angle = cone_angle(sol, radii);
        double max_res = 0.0;
        for (int i = 1; i <= 5; ++i) {
            for (int j = 1; j <= 5; ++j) {
                const cplx z = i / 6.0 + L.tau * (j / 6.0);
                if (lattice_distance(z, L) <= 1e-2) continue;
                max_res = std::max(max_res,
                                   std::abs(pde_residual(z, 1e-3, sol)));
            }
        }
        std::ostringstream os;
        os << "{\n  \"a\": " << format_complex_json(sol.a)
           << ",\n  \"lambda1\": " << format_complex_json(l1)
           << ",\n  \"lambda2\": " << format_complex_json(l2)
           << ",\n  \"cone_angle\": " << format_double(angle)
           << ",\n  \"max_pde_residual\": " << format_double(max_res)
           << "\n}\n";
        emit(os.str(), mt_json);
    });

    // ---- wv ----------------------------------------------------------------
    auto* cmd_wv = app.add_subcommand("wv", "entire-function growth analysis");
    cmd_wv->require_subcommand(1);

    auto* cmd_an = cmd_wv->add_subcommand("analyze", "per-radius snapshots");
    std::string an_series = "exp", an_radii = "25:2:10", an_out;
    double an_eps = 0.1;
    cmd_an->add_option("--series", an_series,
                       "exp | cosh | poly:<d> | file:<path>")
        ->capture_default_str();
    cmd_an->add_option("--radii", an_radii, "start:factor:count")
        ->capture_default_str();
    cmd_an->add_option("--eps", an_eps)->capture_default_str();
    cmd_an->add_option("--out", an_out, "CSV path (default stdout)");
    cmd_an->callback([&] {
        double start, factor;
        int count;
        {
            std::string spec = an_radii;
            for (char& ch : spec) {
                if (ch == ':') ch = ' ';
            }
            std::istringstream ss(spec);
            if (!(ss >> start >> factor >> count) || start <= 0 ||
                factor <= 0 || count < 1) {
                throw CLI::ValidationError("--radii",
                                           "expected start:factor:count");
            }
        }
        std::vector<double> radii(static_cast<size_t>(count));
        radii[0] = start;
        for (int k = 1; k < count; ++k) radii[k] = radii[k - 1] * factor;

        CoefficientSeries series;
        const double rmax = radii.back() * std::max(1.0, factor);
        if (an_series == "exp") {
            series = CoefficientSeries::exponential(rmax);
        } else if (an_series == "cosh") {
            series = CoefficientSeries::cosh_series(rmax);
        } else if (an_series.rfind("poly:", 0) == 0) {
            series = CoefficientSeries::monomial(std::stoi(an_series.substr(5)));
        } else if (an_series.rfind("file:", 0) == 0) {
            series = CoefficientSeries::from_file(an_series.substr(5));
        } else {
            throw CLI::ValidationError("--series", "unknown series " + an_series);
        }
        std::vector<WVSnapshot> snaps(radii.size());
        parallel_for(int(radii.size()), threads, [&](int i) {
            snaps[size_t(i)] = wv_snapshot(radii[size_t(i)], an_eps, series);
        });
        std::ostringstream os;
        write_wv_csv(snaps, os);
        emit(os.str(), an_out);
    });

    auto* cmd_esc = cmd_wv->add_subcommand("escape", "iterate z -> f(z)");
    std::string esc_map = "exp", esc_z0 = "1", esc_out;
    double esc_bound = 1e10;
    int esc_max = 100;
    cmd_esc->add_option("--map", esc_map, "exp | square")->capture_default_str();
    cmd_esc->add_option("--z0", esc_z0)->capture_default_str();
    cmd_esc->add_option("--bound", esc_bound)->capture_default_str();
    cmd_esc->add_option("--max-iter", esc_max)->capture_default_str();
    cmd_esc->add_option("--out", esc_out, "CSV path (default stdout)");
    cmd_esc->callback([&] {
        std::function<cplx(cplx)> f;
        if (esc_map == "exp") {
            f = [](cplx z) { return std::exp(z); };
        } else if (esc_map == "square") {
            f = [](cplx z) { return z * z; };
        } else {
            throw CLI::ValidationError("--map", "unknown map " + esc_map);
        }
        const EscapeRecord rec =
            escaping_orbit(f, parse_complex(esc_z0), esc_bound, esc_max);
        std::ostringstream os;
        os << "step,re,im\n";
        for (size_t k = 0; k < rec.orbit.size(); ++k) {
            os << k << ',' << format_double(rec.orbit[k].real()) << ','
               << format_double(rec.orbit[k].imag()) << "\n";
        }
        const char* st = rec.status == EscapeStatus::bounded ? "bounded"
                         : rec.status == EscapeStatus::escaped
                             ? "escaped"
                             : "escaped_overflow";
        os << "# status=" << st << " escaped_at=" << rec.escaped_at << "\n";
        emit(os.str(), esc_out);
    });

    // ---- check-rs ----------------------------------------------------------
    auto* cmd_rs = app.add_subcommand(
        "check-rs", "logarithmic-derivative inequality sweep for c*e^z");
    double rs_scale = 1.0, rs_R = 1.0;
    double rs_remin = 3.0, rs_remax = 30.0, rs_immin = -10.0, rs_immax = 10.0;
    int rs_samples = 50;
    unsigned long long rs_seed = 1;
    std::string rs_json;
    cmd_rs->add_option("--scale", rs_scale, "g(z) = scale * e^z")
        ->capture_default_str();
    cmd_rs->add_option("--R", rs_R, "critical/asymptotic value radius")
        ->capture_default_str();
    cmd_rs->add_option("--samples", rs_samples)->capture_default_str();
    cmd_rs->add_option("--seed", rs_seed)->capture_default_str();
    cmd_rs->add_option("--re-min", rs_remin)->capture_default_str();
    cmd_rs->add_option("--re-max", rs_remax)->capture_default_str();
    cmd_rs->add_option("--im-min", rs_immin)->capture_default_str();
    cmd_rs->add_option("--im-max", rs_immax)->capture_default_str();
    cmd_rs->add_option("--json", rs_json, "output path (default stdout)");
    cmd_rs->callback([&] {
        std::mt19937_64 gen(rs_seed);
        std::vector<cplx> samples;
        samples.reserve(size_t(rs_samples));
        for (int i = 0; i < rs_samples; ++i) {
            const double re = rs_remin + (rs_remax - rs_remin) * uniform01(gen);
            const double im = rs_immin + (rs_immax - rs_immin) * uniform01(gen);
            samples.emplace_back(re, im);
        }
        auto g = [rs_scale](cplx z) { return rs_scale * std::exp(z); };
        const RSReport rep = rippon_stallard_check(g, g, rs_R, samples);
        std::ostringstream os;
        os << "{\n  \"qualifying\": " << rep.n_qualifying
           << ",\n  \"vacuous\": " << rep.n_vacuous
           << ",\n  \"violations\": " << rep.n_violations
           << ",\n  \"min_margin\": " << format_double(rep.min_margin)
           << ",\n  \"samples\": [";
        for (size_t i = 0; i < rep.samples.size(); ++i) {
            const RSSample& s = rep.samples[i];
            os << (i ? ",\n    " : "\n    ") << "{\"z\": "
               << format_complex_json(s.z) << ", \"lhs\": "
               << format_double(s.lhs) << ", \"rhs\": " << format_double(s.rhs)
               << ", \"qualifying\": " << (s.qualifying ? "true" : "false")
               << ", \"holds\": " << (s.holds ? "true" : "false") << "}";
        }
        os << "\n  ]\n}\n";
        emit(os.str(), rs_json);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << "{\"error\": \"usage\", \"message\": " << jstr(e.what())
                  << "}\n";
        return 2;
    } catch (const torusgf::Error& e) {
        std::cerr << "{\"error\": " << jstr(e.name()) << ", \"message\": "
                  << jstr(e.what()) << "}\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\": \"internal\", \"message\": " << jstr(e.what())
                  << "}\n";
        return 1;
    }
}
