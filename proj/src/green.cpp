#include "torusgf/green.hpp"

#include <algorithm>
#include <cmath>

#include "torusgf/dynamics.hpp"
#include "torusgf/elliptic.hpp"
#include "torusgf/errors.hpp"

namespace torusgf {

AntiConstants constants_AB(const TorusLattice& L) {
    const double s = L.tau.imag();
    return {kPi / s - 2.0 * L.eta1, -kPi / s};
}

double green_value(cplx z, const TorusLattice& L, double C) {
    if (!is_finite(z)) {
        throw Error(errname::nonfinite_input, "z must be finite");
    }
    if (lattice_distance(z, L) < 1e-9) {
        throw Error(errname::pole_proximity,
                    "G has a logarithmic pole at lattice points");
    }
    const cplx th = theta1(z, L.tau);
    const double y = z.imag();
    return -std::log(std::abs(th)) / (2.0 * kPi) +
           y * y / (2.0 * L.tau.imag()) + C;
}

cplx green_grad(cplx z, const TorusLattice& L) {
    constexpr double h = 1e-6;
    if (lattice_distance(z, L) < kPoleExclusionRadius) {
        throw Error(errname::pole_proximity, "stencil too close to a pole");
    }
    const double gx =
        (green_value(z + cplx(h, 0.0), L) - green_value(z - cplx(h, 0.0), L)) /
        (2.0 * h);
    const double gy =
        (green_value(z + cplx(0.0, h), L) - green_value(z - cplx(0.0, h), L)) /
        (2.0 * h);
    return {gx, gy};
}

cplx residual_R(cplx a, const TorusLattice& L) {
    if (!is_finite(a)) {
        throw Error(errname::nonfinite_input, "a must be finite");
    }
    if (lattice_distance(a, L) < kPoleExclusionRadius) {
        throw Error(errname::pole_proximity, "zeta has poles on the lattice");
    }
    const AntiConstants c = constants_AB(L);
    return c.A * a + c.B * std::conj(a) + detail::zeta_raw(a, L);
}

namespace {

struct NewtonResult {
    cplx root;
    double residual;
    bool converged;
};

// Damped Newton for R(a) = 0 viewed as a real 2D system. With the Wirtinger
// pair p = dR/da = A - wp(a), q = dR/dconj(a) = B, the step solves
// p*d + q*conj(d) = -R, i.e. d = (q*conj(R) - conj(p)*R) / (|p|^2 - |q|^2).
NewtonResult newton_root(cplx seed, const TorusLattice& L,
                         const AntiConstants& C, const SolverOptions& opts) {
    cplx a = seed;
    cplx R;
    double rnorm;
    auto eval = [&](cplx x, cplx& Rout) -> bool {
        if (lattice_distance(x, L) < kPoleExclusionRadius) return false;
        const auto b = detail::weierstrass_raw(x, L);
        Rout = C.A * x + C.B * std::conj(x) + b.zeta;
        return true;
    };
    cplx p;  // A - wp(a), refreshed each iteration
    if (!eval(a, R)) return {a, 1e300, false};
    rnorm = std::abs(R);
    for (int it = 0; it < opts.max_newton_iter; ++it) {
        if (rnorm < 1e-13) break;
        const auto b = detail::weierstrass_raw(a, L);
        p = C.A - b.p;
        const double det = std::norm(p) - C.B * C.B;
        if (std::abs(det) < 1e-14 * (std::norm(p) + C.B * C.B)) {
            return {a, rnorm, rnorm < opts.residual_tol};
        }
        cplx step = (C.B * std::conj(R) - std::conj(p) * R) / det;
        bool improved = false;
        for (int halving = 0; halving < 24; ++halving) {
            cplx RR;
            const cplx cand = a + step;
            if (eval(cand, RR) && std::abs(RR) < rnorm) {
                a = cand;
                R = RR;
                rnorm = std::abs(RR);
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if (!improved) break;
    }
    return {a, rnorm, rnorm < opts.residual_tol};
}

bool near_halfperiod(cplx z, const TorusLattice& L, double tol, cplx& which) {
    const cplx hp[3] = {L.omega1, L.omega2, L.omega1 + L.omega2};
    for (const cplx& h : hp) {
        if (torus_distance(z, h, L) < tol) {
            which = h;
            return true;
        }
    }
    return false;
}

std::vector<cplx> collect_roots(const TorusLattice& L, const AntiConstants& C,
                                const SolverOptions& opts, int grid) {
    std::vector<cplx> seeds;
    seeds.reserve(static_cast<size_t>(grid) * grid + 3);
    // The half-periods are exact roots by the invariance identity; seed them
    // directly so the trivial solutions are never missed.
    seeds.push_back(L.omega1);
    seeds.push_back(L.omega2);
    seeds.push_back(L.omega1 + L.omega2);
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            const cplx s = (i + 0.5) / double(grid) +
                           L.tau * ((j + 0.5) / double(grid));
            if (lattice_distance(s, L) < 4.0 * kPoleExclusionRadius) continue;
            seeds.push_back(s);
        }
    }

    std::vector<cplx> roots;
    auto add_root = [&](cplx r) {
        const cplx red = reduce_point(r, L);
        for (const cplx& have : roots) {
            if (torus_distance(red, have, L) < opts.dedup_tol) return;
        }
        roots.push_back(red);
    };
    for (const cplx& s : seeds) {
        const NewtonResult nr = newton_root(s, L, C, opts);
        if (nr.converged) {
            add_root(nr.root);
            // R is odd, so the mirror point is a root as well; adding it
            // keeps +/- pairs complete even if its basin was missed.
            add_root(-nr.root);
        }
    }
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

} // namespace

CriticalPointReport solve_critical_points(const TorusLattice& L,
                                          const SolverOptions& opts) {
    const AntiConstants C = constants_AB(L);

    CriticalPointReport report;
    report.lattice = L;

    for (int grid = opts.grid;; grid *= 2) {
        report.points.clear();
        report.n_plus = report.n_minus = 0;
        report.status = SolveStatus::ok;
        report.grid_used = grid;

        const std::vector<cplx> roots = collect_roots(L, C, opts, grid);
        for (const cplx& r : roots) {
            CriticalPoint pt;
            cplx hp;
            if (near_halfperiod(r, L, 1e-8, hp)) {
                pt.location = reduce_point(hp, L);
                pt.kind = PointKind::trivial_halfperiod;
            } else {
                pt.location = r;
                pt.kind = PointKind::nontrivial;
            }
            pt.residual_norm = std::abs(residual_R(pt.location, L));
            const Classification cl = classify_fixed_point(pt.location, L);
            pt.stability = cl.stability;
            pt.multiplier_modulus = cl.multiplier_modulus;
            pt.orientation_sign = cl.orientation_sign;
            report.points.push_back(pt);
            if (cl.stability == Stability::attracting) ++report.n_plus;
            if (cl.stability == Stability::repelling) ++report.n_minus;
        }
        report.total = static_cast<int>(report.points.size());

        const bool any_neutral =
            std::any_of(report.points.begin(), report.points.end(),
                        [](const CriticalPoint& p) {
                            return p.stability == Stability::indeterminate;
                        });
        if (any_neutral) {
            report.status = SolveStatus::boundary_indeterminate;
            return report;
        }
        if (degree_audit(report.n_plus, report.n_minus)) {
            return report;
        }
        if (grid * 2 > opts.max_grid) {
            report.status = SolveStatus::solver_incomplete;
            return report;
        }
    }
}

} // namespace torusgf
