#include "torusgf/elliptic.hpp"

#include <cmath>
#include <complex>

#include "torusgf/errors.hpp"

namespace torusgf {

namespace {

constexpr int kMaxThetaTerms = 64;
constexpr double kSeriesTol = 1e-16;

void check_tau(cplx tau) {
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
}

// theta1 has period 2; pulling Re(z) toward 0 by an even integer is exact
// and keeps the trig arguments small.
cplx shift_even(cplx z) {
    const double k = std::floor(z.real() / 2.0 + 0.5);
    return z - 2.0 * k;
}

struct Accum {
    cplx sum = 0.0;
    double scale = 0.0;
    int quiet = 0;
    bool done = false;

    void add(cplx term) {
        if (done) return;
        sum += term;
        const double m = std::abs(term);
        scale = std::max(scale, m);
        if (m <= kSeriesTol * std::max(std::abs(sum), kSeriesTol * scale)) {
            // converged only after two consecutive negligible terms; a single
            // small term of the lacunary series is not proof of convergence
            if (++quiet >= 2) done = true;
        } else {
            quiet = 0;
        }
    }
};

} // namespace

ThetaDerivs theta1_derivs(cplx z, cplx tau) {
    check_tau(tau);
    if (!is_finite(z)) {
        throw Error(errname::nonfinite_input, "z must be finite");
    }
    const cplx zr = shift_even(z);
    const cplx ipitau = cplx(0.0, kPi) * tau;

    Accum a0, a1, a2, a3;
    for (int n = 0; n < kMaxThetaTerms; ++n) {
        const double half = n + 0.5;
        const cplx qpow = std::exp(ipitau * (half * half));
        const double w = (2.0 * n + 1.0) * kPi;
        const cplx arg = w * zr;
        const cplx s = std::sin(arg);
        const cplx c = std::cos(arg);
        const double sign = (n % 2 == 0) ? 2.0 : -2.0;
        const cplx base = sign * qpow;
        a0.add(base * s);
        a1.add(base * w * c);
        a2.add(-base * (w * w) * s);
        a3.add(-base * (w * w * w) * c);
        if (a0.done && a1.done && a2.done && a3.done) {
            return {a0.sum, a1.sum, a2.sum, a3.sum};
        }
    }
    throw Error(errname::series_no_convergence, "theta series did not converge");
}

cplx theta1(cplx z, cplx tau) {
    check_tau(tau);
    if (!is_finite(z)) {
        throw Error(errname::nonfinite_input, "z must be finite");
    }
    const cplx zr = shift_even(z);
    const cplx ipitau = cplx(0.0, kPi) * tau;
    Accum acc;
    for (int n = 0; n < kMaxThetaTerms && !acc.done; ++n) {
        const double half = n + 0.5;
        const cplx qpow = std::exp(ipitau * (half * half));
        const double sign = (n % 2 == 0) ? 2.0 : -2.0;
        acc.add(sign * qpow * std::sin((2.0 * n + 1.0) * kPi * zr));
    }
    if (!acc.done) {
        throw Error(errname::series_no_convergence,
                    "theta series did not converge");
    }
    return acc.sum;
}

namespace detail {

WeierstrassBundle weierstrass_raw(cplx z, const TorusLattice& L) {
    // Evaluate at the centered representative, then undo the
    // quasi-periodicity of sigma and zeta (wp and wp' are periodic).
    const cplx zc = reduce_centered(z, L);
    const auto ab = lattice_coords(z - zc, L.tau);
    const long m = std::lround(ab[0]);
    const long n = std::lround(ab[1]);

    const ThetaDerivs t = theta1_derivs(zc, L.tau);
    const cplx L1 = t.t1 / t.t0;
    const cplx r2 = t.t2 / t.t0;
    const cplx r3 = t.t3 / t.t0;

    WeierstrassBundle b;
    b.at = z;
    b.zeta = 2.0 * L.eta1 * zc + L1;
    b.p = -2.0 * L.eta1 - (r2 - L1 * L1);
    b.p_prime = -(r3 - 3.0 * r2 * L1 + 2.0 * L1 * L1 * L1);
    b.sigma = std::exp(L.eta1 * zc * zc) * t.t0 / L.theta1_prime0;

    if (m != 0 || n != 0) {
        const cplx H = 2.0 * double(m) * L.eta1 + 2.0 * double(n) * L.eta2;
        const cplx Omega = cplx(double(m), 0.0) + double(n) * L.tau;
        b.zeta += H;
        const double eps = ((m + n + m * n) % 2 == 0) ? 1.0 : -1.0;
        b.sigma *= eps * std::exp(H * (zc + Omega / 2.0));
    }
    return b;
}

cplx zeta_raw(cplx z, const TorusLattice& L) {
    const cplx zc = reduce_centered(z, L);
    const auto ab = lattice_coords(z - zc, L.tau);
    const long m = std::lround(ab[0]);
    const long n = std::lround(ab[1]);
    const ThetaDerivs t = theta1_derivs(zc, L.tau);
    return 2.0 * L.eta1 * zc + t.t1 / t.t0 + 2.0 * double(m) * L.eta1 +
           2.0 * double(n) * L.eta2;
}

} // namespace detail

WeierstrassBundle weierstrass(cplx z, const TorusLattice& L) {
    if (!is_finite(z)) {
        throw Error(errname::nonfinite_input, "z must be finite");
    }
    if (lattice_distance(z, L) < kPoleExclusionRadius) {
        throw Error(errname::pole_proximity,
                    "z within pole exclusion radius of a lattice point");
    }
    return detail::weierstrass_raw(z, L);
}

} // namespace torusgf
