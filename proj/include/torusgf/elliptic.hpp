#ifndef TORUSGF_ELLIPTIC_HPP
#define TORUSGF_ELLIPTIC_HPP

#include "torusgf/lattice.hpp"

namespace torusgf {

// First Jacobi theta function with quasi-periods 1 and tau:
//   theta1(z|tau) = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) pi z),
// q = exp(i pi tau). Odd in z; theta1(z+1) = -theta1(z).
cplx theta1(cplx z, cplx tau);

// theta1 and its first three z-derivatives at z.
struct ThetaDerivs {
    cplx t0, t1, t2, t3;
};
ThetaDerivs theta1_derivs(cplx z, cplx tau);

// sigma, zeta, wp, wp' at one point, all via the theta representation.
struct WeierstrassBundle {
    cplx at;
    cplx sigma;
    cplx zeta;
    cplx p;        // wp(z)
    cplx p_prime;  // wp'(z)
};

// Guarded evaluation: rejects points within kPoleExclusionRadius of the
// lattice (zeta and wp have poles there).
WeierstrassBundle weierstrass(cplx z, const TorusLattice& L);

namespace detail {

// Unguarded evaluation used internally (metric/green evaluate arbitrarily
// close to poles of f; the log-space formulas stay stable there).
WeierstrassBundle weierstrass_raw(cplx z, const TorusLattice& L);

// zeta(z) alone; cheaper than the full bundle.
cplx zeta_raw(cplx z, const TorusLattice& L);

} // namespace detail

} // namespace torusgf

#endif
