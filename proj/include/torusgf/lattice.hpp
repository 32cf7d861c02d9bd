#ifndef TORUSGF_LATTICE_HPP
#define TORUSGF_LATTICE_HPP

#include <array>
#include <complex>

namespace torusgf {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Series evaluation below this Im(tau) is refused: the q-series loses too
// many digits to cancellation (q = exp(i*pi*tau), |q| -> 1).
inline constexpr double kTauImFloor = 0.05;

// Points closer than this to a lattice point are rejected by operations
// that evaluate zeta or wp (simple/double poles there).
inline constexpr double kPoleExclusionRadius = 1e-3;

// Torus normalized to periods 1 and tau (half-periods 1/2 and tau/2).
// Immutable after construction; all derived constants are filled by
// lattice_from_tau.
struct TorusLattice {
    cplx omega1;            // 1/2
    cplx omega2;            // tau/2
    cplx tau;
    cplx eta1;              // zeta(omega1)
    cplx eta2;              // zeta(omega2), from the Legendre relation
    std::array<cplx, 3> e;  // wp(omega1), wp(omega2), wp(omega1+omega2)
    cplx g2;
    cplx g3;
    double area;            // Im(tau) under this normalization

    // cached theta constant theta1'(0), reused by sigma evaluation
    cplx theta1_prime0;
};

// Builds the lattice for a given modulus. Requires Im(tau) > 0 and finite
// input; refuses Im(tau) < kTauImFloor with a precision_loss error.
TorusLattice lattice_from_tau(cplx tau);

// Lattice coordinates (alpha, beta) with z = alpha + beta*tau.
std::array<double, 2> lattice_coords(cplx z, cplx tau);

// Canonical representative of z modulo the lattice in [0,1) + [0,tau).
// Idempotent: reduce_point(reduce_point(z)) == reduce_point(z) exactly.
cplx reduce_point(cplx z, const TorusLattice& L);

// Representative with lattice coordinates in [-1/2, 1/2); minimizes growth
// of the theta-series argument.
cplx reduce_centered(cplx z, const TorusLattice& L);

// Euclidean distance from z to the nearest lattice point.
double lattice_distance(cplx z, const TorusLattice& L);

// Distance between z and w on the torus (minimum over lattice translates).
double torus_distance(cplx z, cplx w, const TorusLattice& L);

bool is_finite(cplx z);

} // namespace torusgf

#endif
