#ifndef TORUSGF_DYNAMICS_HPP
#define TORUSGF_DYNAMICS_HPP

#include <array>
#include <optional>
#include <vector>

#include "torusgf/green.hpp"
#include "torusgf/lattice.hpp"

namespace torusgf {

// Stability is resolved at this distance of the multiplier modulus from 1;
// inside the band the point is reported indeterminate (region boundary).
inline constexpr double kNeutralBand = 1e-4;

// The anti-meromorphic map g(z) = -(1/B) (conj(zeta(z)) + conj(A z)).
// Fixed points of g are exactly the zeros of residual_R; g commutes with
// lattice translations and is odd.
cplx g_map(cplx z, const TorusLattice& L);

enum class OrbitStatus { converged_to_fixed_point, max_iterations, pole_hit };

struct OrbitRecord {
    cplx start;
    std::vector<cplx> points;  // reduced to the fundamental domain
    OrbitStatus status;
    std::optional<cplx> limit;
};

// Iterates reduce(g(.)) from z0 until successive points agree to 1e-10 on
// the torus, an iterate enters the pole exclusion ball, or max_iter.
OrbitRecord iterate_orbit(cplx z0, int max_iter, const TorusLattice& L);

struct GCriticalPoints {
    std::array<cplx, 2> points;  // the +/- pair, reduced
    bool degenerate;             // pair collided (wp' = 0 at the solution)
};

// Critical points of g: the solutions of wp(z) = A modulo the lattice.
GCriticalPoints g_critical_points(const TorusLattice& L);

struct Classification {
    Stability stability;
    double multiplier_modulus;
    int orientation_sign;
};

// Classifies a fixed point a of g (requires |R(a)| < 1e-8). The modulus of
// the anti-holomorphic derivative is |wp(a) - A| / |B|, evaluated
// analytically; orientation_sign = sign(1 - modulus^2).
Classification classify_fixed_point(cplx a, const TorusLattice& L);

// Degree bookkeeping of phi(z) = z - g(z): true iff
// n_plus - n_minus = -1, n_plus <= 2 and n_minus <= 3.
bool degree_audit(const CriticalPointReport& report);
bool degree_audit(int n_plus, int n_minus);

} // namespace torusgf

#endif
