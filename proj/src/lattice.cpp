#include "torusgf/lattice.hpp"

#include <cmath>
#include <complex>

#include "torusgf/elliptic.hpp"
#include "torusgf/errors.hpp"

namespace torusgf {

bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

std::array<double, 2> lattice_coords(cplx z, cplx tau) {
    const double beta = z.imag() / tau.imag();
    const double alpha = z.real() - beta * tau.real();
    return {alpha, beta};
}

namespace {

// Eisenstein q-series for the invariants of the lattice Z + tau*Z:
//   g2 = (4 pi^4 / 3) E4,  g3 = (8 pi^6 / 27) E6,
//   E4 = 1 + 240 sum n^3 Q^n/(1-Q^n),  E6 = 1 - 504 sum n^5 Q^n/(1-Q^n),
// with Q = exp(2 pi i tau).
void eisenstein_invariants(cplx tau, cplx& g2, cplx& g3) {
    const cplx Q = std::exp(cplx(0.0, 2.0 * kPi) * tau);
    cplx Qn = Q;
    cplx s4 = 0.0, s6 = 0.0;
    int quiet = 0;
    for (int n = 1; n < 4000; ++n) {
        const cplx t = Qn / (1.0 - Qn);
        const double n2 = double(n) * n;
        const cplx t4 = (n2 * double(n)) * t;
        const cplx t6 = (n2 * n2 * double(n)) * t;
        s4 += t4;
        s6 += t6;
        Qn *= Q;
        if (std::abs(t6) < 1e-18 * (1.0 + std::abs(s6))) {
            if (++quiet >= 2) {
                const double pi2 = kPi * kPi;
                const double pi4 = pi2 * pi2;
                g2 = (4.0 * pi4 / 3.0) * (1.0 + 240.0 * s4);
                g3 = (8.0 * pi4 * pi2 / 27.0) * (1.0 - 504.0 * s6);
                return;
            }
        } else {
            quiet = 0;
        }
    }
    throw Error(errname::series_no_convergence,
                "Eisenstein series did not converge");
}

cplx wp_from_theta(cplx z, cplx tau, cplx eta1) {
    const ThetaDerivs t = theta1_derivs(z, tau);
    const cplx L1 = t.t1 / t.t0;
    return -2.0 * eta1 - (t.t2 / t.t0 - L1 * L1);
}

} // namespace

TorusLattice lattice_from_tau(cplx tau) {
    if (!is_finite(tau)) {
        throw Error(errname::nonfinite_input, "tau must be finite");
    }
    if (!(tau.imag() > 0.0)) {
        throw Error(errname::invalid_tau, "Im(tau) must be positive");
    }
    if (tau.imag() < kTauImFloor) {
        throw Error(errname::precision_loss,
                    "Im(tau) below precision floor 0.05");
    }

    TorusLattice L;
    L.tau = tau;
    L.omega1 = cplx(0.5, 0.0);
    L.omega2 = tau / 2.0;
    L.area = tau.imag();

    const ThetaDerivs t0 = theta1_derivs(cplx(0.0, 0.0), tau);
    L.theta1_prime0 = t0.t1;
    // zeta(z) = 2 eta1 z + theta1'/theta1 has no z^1 Laurent term at 0,
    // which pins eta1 to -theta1'''(0) / (6 theta1'(0)).
    L.eta1 = -t0.t3 / (6.0 * t0.t1);
    // Legendre relation eta1*omega2 - eta2*omega1 = i pi/2.
    L.eta2 = L.eta1 * tau - cplx(0.0, kPi);

    L.e[0] = wp_from_theta(L.omega1, tau, L.eta1);
    L.e[1] = wp_from_theta(L.omega2, tau, L.eta1);
    L.e[2] = wp_from_theta(L.omega1 + L.omega2, tau, L.eta1);

    eisenstein_invariants(tau, L.g2, L.g3);
    return L;
}

namespace {

// One reduction step; returns true when no lattice vector was subtracted.
bool reduce_step(cplx& z, const TorusLattice& L, bool centered) {
    const auto ab = lattice_coords(z, L.tau);
    long m, n;
    if (centered) {
        m = std::lround(ab[0]);
        n = std::lround(ab[1]);
    } else {
        m = static_cast<long>(std::floor(ab[0]));
        n = static_cast<long>(std::floor(ab[1]));
    }
    if (m == 0 && n == 0) return true;
    z -= cplx(double(m), 0.0) + double(n) * L.tau;
    return false;
}

cplx reduce_impl(cplx z, const TorusLattice& L, bool centered) {
    if (!is_finite(z)) {
        throw Error(errname::nonfinite_input, "point must be finite");
    }
    // Iterating to a fixed point makes the reduction exactly idempotent:
    // once a pass subtracts nothing, a later call subtracts nothing either.
    for (int pass = 0; pass < 8; ++pass) {
        if (reduce_step(z, L, centered)) return z;
    }
    return z;
}

} // namespace

cplx reduce_point(cplx z, const TorusLattice& L) {
    return reduce_impl(z, L, false);
}

cplx reduce_centered(cplx z, const TorusLattice& L) {
    return reduce_impl(z, L, true);
}

double lattice_distance(cplx z, const TorusLattice& L) {
    const cplx zc = reduce_impl(z, L, true);
    // Coordinate rounding is not metric rounding for skew tau; check the
    // neighboring lattice points as well.
    double best = std::abs(zc);
    for (int m = -1; m <= 1; ++m) {
        for (int n = -1; n <= 1; ++n) {
            best = std::min(best,
                            std::abs(zc - cplx(double(m), 0.0) - double(n) * L.tau));
        }
    }
    return best;
}

double torus_distance(cplx z, cplx w, const TorusLattice& L) {
    return lattice_distance(z - w, L);
}

} // namespace torusgf
