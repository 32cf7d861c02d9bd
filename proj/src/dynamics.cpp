#include "torusgf/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "torusgf/elliptic.hpp"
#include "torusgf/errors.hpp"

namespace torusgf {

cplx g_map(cplx z, const TorusLattice& L) {
    if (lattice_distance(z, L) < kPoleExclusionRadius) {
        throw Error(errname::pole_proximity, "g has poles on the lattice");
    }
    const AntiConstants c = constants_AB(L);
    return -(std::conj(detail::zeta_raw(z, L)) + std::conj(c.A * z)) / c.B;
}

OrbitRecord iterate_orbit(cplx z0, int max_iter, const TorusLattice& L) {
    OrbitRecord rec;
    rec.start = z0;
    rec.status = OrbitStatus::max_iterations;

    cplx z = reduce_point(z0, L);
    rec.points.push_back(z);
    for (int k = 0; k < max_iter; ++k) {
        if (lattice_distance(z, L) < kPoleExclusionRadius) {
            rec.status = OrbitStatus::pole_hit;
            return rec;
        }
        const cplx next = reduce_point(g_map(z, L), L);
        rec.points.push_back(next);
        if (torus_distance(next, z, L) < 1e-10) {
            rec.status = OrbitStatus::converged_to_fixed_point;
            rec.limit = next;
            return rec;
        }
        z = next;
    }
    return rec;
}

GCriticalPoints g_critical_points(const TorusLattice& L) {
    const AntiConstants C = constants_AB(L);

    // Newton on the holomorphic equation wp(z) - A = 0.
    auto polish = [&](cplx z) -> std::pair<cplx, double> {
        for (int it = 0; it < 80; ++it) {
            if (lattice_distance(z, L) < kPoleExclusionRadius) break;
            const auto b = detail::weierstrass_raw(z, L);
            const cplx F = b.p - C.A;
            if (std::abs(F) < 1e-12) break;
            if (std::abs(b.p_prime) < 1e-12) break;
            z -= F / b.p_prime;
        }
        if (lattice_distance(z, L) < kPoleExclusionRadius) return {z, 1e300};
        const auto b = detail::weierstrass_raw(z, L);
        return {reduce_point(z, L), std::abs(b.p - C.A)};
    };

    std::vector<cplx> found;
    const int grid = 16;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            const cplx seed = (i + 0.5) / double(grid) +
                              L.tau * ((j + 0.5) / double(grid));
            if (lattice_distance(seed, L) < 0.05) continue;
            const auto [root, res] = polish(seed);
            if (res > 1e-10) continue;
            bool dup = false;
            for (const cplx& have : found) {
                if (torus_distance(root, have, L) < 1e-6) dup = true;
            }
            if (!dup) found.push_back(root);
        }
    }
    if (found.empty()) {
        throw Error(errname::solver_incomplete,
                    "no solution of wp(z) = A located");
    }
    std::sort(found.begin(), found.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });

    GCriticalPoints out;
    const cplx c0 = found.front();
    const double pprime = std::abs(detail::weierstrass_raw(c0, L).p_prime);
    if (found.size() == 1) {
        // wp - A has a double zero: the pair has collided at a half-lattice
        // point (wp' vanishes there).
        out.points = {c0, reduce_point(-c0, L)};
        out.degenerate = true;
        return out;
    }
    out.points = {found[0], found[1]};
    out.degenerate = pprime < 1e-5;
    return out;
}

Classification classify_fixed_point(cplx a, const TorusLattice& L) {
    const cplx R = residual_R(a, L);
    if (std::abs(R) >= 1e-8) {
        throw Error(errname::not_a_fixed_point,
                    "|R(a)| >= 1e-8: a is not a fixed point of g");
    }
    const AntiConstants C = constants_AB(L);
    const auto b = detail::weierstrass_raw(a, L);
    Classification cl;
    cl.multiplier_modulus = std::abs(b.p - C.A) / std::abs(C.B);
    if (cl.multiplier_modulus < 1.0 - kNeutralBand) {
        cl.stability = Stability::attracting;
    } else if (cl.multiplier_modulus > 1.0 + kNeutralBand) {
        cl.stability = Stability::repelling;
    } else {
        cl.stability = Stability::indeterminate;
    }
    cl.orientation_sign = cl.multiplier_modulus <= 1.0 ? +1 : -1;
    return cl;
}

bool degree_audit(int n_plus, int n_minus) {
    return n_plus - n_minus == -1 && n_plus <= 2 && n_minus <= 3;
}

bool degree_audit(const CriticalPointReport& report) {
    for (const CriticalPoint& p : report.points) {
        if (p.stability == Stability::indeterminate) {
            throw Error(errname::boundary_indeterminate,
                        "degree audit requires no indeterminate points");
        }
    }
    return degree_audit(report.n_plus, report.n_minus);
}

} // namespace torusgf
