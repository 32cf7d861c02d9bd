#include "torusgf/metric.hpp"

#include <cmath>
#include <vector>

#include "torusgf/elliptic.hpp"
#include "torusgf/errors.hpp"
#include "torusgf/green.hpp"

namespace torusgf {

MetricSolution make_metric_solution(cplx a, cplx c, const TorusLattice& L) {
    if (!is_finite(a) || !is_finite(c)) {
        throw Error(errname::nonfinite_input, "a and c must be finite");
    }
    if (std::abs(c) == 0.0) {
        throw Error(errname::trivial_solution, "c must be nonzero");
    }
    const double res = std::abs(residual_R(a, L));
    if (res >= 1e-8) {
        throw Error(errname::not_a_fixed_point,
                    "a does not solve the fixed-point equation (|R| >= 1e-8)");
    }
    const cplx hp[3] = {L.omega1, L.omega2, L.omega1 + L.omega2};
    for (const cplx& h : hp) {
        if (torus_distance(a, h, L) < 1e-8) {
            throw Error(errname::trivial_solution,
                        "half-period solutions give constant f");
        }
    }
    return {reduce_point(a, L), c, L};
}

cplx f_second_kind(cplx z, const MetricSolution& sol) {
    const TorusLattice& L = sol.lattice;
    if (!is_finite(z)) {
        throw Error(errname::nonfinite_input, "z must be finite");
    }
    if (torus_distance(z, -sol.a, L) < 1e-12) {
        throw Error(errname::pole_proximity, "f has a pole at z = -a");
    }
    const cplx za = detail::zeta_raw(sol.a, L);
    const cplx sm = detail::weierstrass_raw(z - sol.a, L).sigma;
    const cplx sp = detail::weierstrass_raw(z + sol.a, L).sigma;
    return sol.c * std::exp(2.0 * z * za) * sm / sp;
}

std::pair<cplx, cplx> multipliers(const MetricSolution& sol) {
    const TorusLattice& L = sol.lattice;
    const cplx za = detail::zeta_raw(sol.a, L);
    const cplx l1 = std::exp(4.0 * L.omega1 * za - 4.0 * L.eta1 * sol.a);
    const cplx l2 = std::exp(4.0 * L.omega2 * za - 4.0 * L.eta2 * sol.a);
    return {l1, l2};
}

namespace {

// log(e^F + e^-F) without overflow
double log_2cosh(double F) {
    const double aF = std::abs(F);
    return aF + std::log1p(std::exp(-2.0 * aF));
}

} // namespace

double metric_u(cplx z, const MetricSolution& sol) {
    const TorusLattice& L = sol.lattice;
    if (!is_finite(z)) {
        throw Error(errname::nonfinite_input, "z must be finite");
    }
    if (lattice_distance(z, L) < 1e-12) {
        throw Error(errname::pole_proximity,
                    "u has its conic singularity on the lattice");
    }
    // u = log 8 + 2 log|f'/f| - 2 log(1/|f| + |f|); the last term is
    // 2 log(2 cosh log|f|), stable for both huge and tiny |f|.
    const cplx za = detail::zeta_raw(sol.a, L);
    const auto bm = detail::weierstrass_raw(z - sol.a, L);
    const auto bp = detail::weierstrass_raw(z + sol.a, L);
    const cplx T = 2.0 * za + bm.zeta - bp.zeta;  // f'/f
    const double logf = std::log(std::abs(sol.c)) + (2.0 * z * za).real() +
                        std::log(std::abs(bm.sigma)) -
                        std::log(std::abs(bp.sigma));
    return std::log(8.0) + 2.0 * std::log(std::abs(T)) - 2.0 * log_2cosh(logf);
}

double pde_residual(cplx z, double h, const MetricSolution& sol) {
    if (!(h > 0.0)) {
        throw Error(errname::nonfinite_input, "h must be positive");
    }
    if (lattice_distance(z, sol.lattice) <= 10.0 * h) {
        throw Error(errname::pole_proximity,
                    "stencil too close to the conic singularity");
    }
    const double uc = metric_u(z, sol);
    const double lap = (metric_u(z + cplx(h, 0.0), sol) +
                        metric_u(z - cplx(h, 0.0), sol) +
                        metric_u(z + cplx(0.0, h), sol) +
                        metric_u(z - cplx(0.0, h), sol) - 4.0 * uc) /
                       (h * h);
    return lap + std::exp(uc);
}

double cone_angle(const MetricSolution& sol, std::span<const double> radii) {
    if (radii.size() < 2) {
        throw Error(errname::fit_failure, "need at least two radii");
    }
    double rmin = radii[0], rmax = radii[0];
    for (size_t i = 1; i < radii.size(); ++i) {
        if (!(radii[i] < radii[i - 1])) {
            throw Error(errname::fit_failure, "radii must decrease");
        }
        rmin = std::min(rmin, radii[i]);
        rmax = std::max(rmax, radii[i]);
    }
    if (!(rmin > 0.0) || rmax / rmin < 10.0) {
        throw Error(errname::fit_failure, "radii must span at least a decade");
    }

    constexpr int kAngles = 64;
    std::vector<double> xs, ys;
    xs.reserve(radii.size());
    ys.reserve(radii.size());
    for (double r : radii) {
        double mean = 0.0;
        for (int k = 0; k < kAngles; ++k) {
            const double th = 2.0 * kPi * k / kAngles;
            mean += metric_u(r * cplx(std::cos(th), std::sin(th)), sol);
        }
        xs.push_back(std::log(r));
        ys.push_back(mean / kAngles);
    }
    // least-squares slope of mean u against log r
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return 2.0 * kPi * (1.0 + slope / 2.0);
}

} // namespace torusgf
