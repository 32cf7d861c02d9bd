#ifndef TORUSGF_GREEN_HPP
#define TORUSGF_GREEN_HPP

#include <vector>

#include "torusgf/lattice.hpp"

namespace torusgf {

// Constants of the fixed-point equation A*a + B*conj(a) + zeta(a) = 0; the
// unique pair making the left side invariant under a -> a + period (with
// zeta picking up 2*eta_j). Under the normalization used here
//   A = pi/Im(tau) - 2*eta1,   B = -pi/Im(tau) < 0.
struct AntiConstants {
    cplx A;
    double B;
};

AntiConstants constants_AB(const TorusLattice& L);

// Green's function of the torus:
//   G(z) = -(1/2pi) log|theta1(z)| + (Im z)^2 / (2 Im tau) + C.
// Doubly periodic; ΔG = -delta + 1/area.
double green_value(cplx z, const TorusLattice& L, double C = 0.0);

// Real gradient of G encoded as gx + i*gy, by central differences with
// step 1e-6. Kept as an independent check against residual_R: the zero sets
// coincide (grad G = -conj(R)/(2*pi)).
cplx green_grad(cplx z, const TorusLattice& L);

// R(a) = A*a + B*conj(a) + zeta(a). Zeros are the critical points of G.
cplx residual_R(cplx a, const TorusLattice& L);

enum class PointKind { trivial_halfperiod, nontrivial };
enum class Stability { attracting, repelling, indeterminate };

struct CriticalPoint {
    cplx location;              // in the fundamental domain
    PointKind kind;
    Stability stability;
    double multiplier_modulus;  // |wp(a) - A| / |B|
    int orientation_sign;       // sign(1 - multiplier^2); +1 preserved
    double residual_norm;       // |R(a)| at the solved point
};

enum class SolveStatus { ok, boundary_indeterminate, solver_incomplete };

struct SolverOptions {
    int grid = 24;             // seeds per side; doubled on failure
    int max_grid = 96;
    double residual_tol = 1e-10;
    double dedup_tol = 1e-7;
    int max_newton_iter = 80;
    int threads = 1;
};

struct CriticalPointReport {
    TorusLattice lattice;
    std::vector<CriticalPoint> points;
    int n_plus = 0;   // orientation preserving (attracting)
    int n_minus = 0;  // orientation reversing (repelling)
    int total = 0;
    SolveStatus status = SolveStatus::ok;
    int grid_used = 0;
};

// Finds all zeros of R in the fundamental domain: grid-seeded damped Newton
// on the real 2D system with the exact Wirtinger Jacobian
// (dR/da = A - wp(a), dR/dconj(a) = B), dedup modulo the lattice, then
// classification and the degree bookkeeping.
CriticalPointReport solve_critical_points(const TorusLattice& L,
                                          const SolverOptions& opts = {});

} // namespace torusgf

#endif
