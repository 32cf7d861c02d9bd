#!/usr/bin/env python3
"""Regenerates the frozen constants in reference_values.hpp.

Uses mpmath at 60 significant digits. The Weierstrass functions are built
from jtheta with quasi-periods 1 and tau (half-periods 1/2 and tau/2):

    theta1(z|tau) = jtheta(1, pi z, q),  q = exp(i pi tau)
    eta1   = -theta1'''(0) / (6 theta1'(0))          (z-derivatives)
    sigma  = exp(eta1 z^2) theta1(z) / theta1'(0)
    zeta   = 2 eta1 z + theta1'(z)/theta1(z)
    wp     = -zeta'
    A      = pi/Im(tau) - 2 eta1,  B = -pi/Im(tau)

Before printing, every lattice is checked against the Legendre relation,
the differential equation wp'^2 = 4wp^3 - g2 wp - g3 (g2, g3 from the
independent Eisenstein q-series), e1+e2+e3 = 0, and the sigma
quasi-periodicity, all at 1e-38.
"""
import mpmath as mp

mp.mp.dps = 60


def nome(tau):
    return mp.exp(1j * mp.pi * tau)


def theta1(z, tau, der=0):
    return mp.pi**der * mp.jtheta(1, mp.pi * z, nome(tau), der)


def eta1(tau):
    return -theta1(0, tau, 3) / (6 * theta1(0, tau, 1))


def eta2(tau):
    return eta1(tau) * tau - mp.pi * 1j


def sigma(z, tau):
    return mp.exp(eta1(tau) * z * z) * theta1(z, tau) / theta1(0, tau, 1)


def zeta(z, tau):
    return 2 * eta1(tau) * z + theta1(z, tau, 1) / theta1(z, tau)


def wp(z, tau):
    t0, t1, t2 = theta1(z, tau), theta1(z, tau, 1), theta1(z, tau, 2)
    return -2 * eta1(tau) - (t2 * t0 - t1 * t1) / (t0 * t0)


def wp_prime(z, tau):
    t0, t1, t2, t3 = (theta1(z, tau, k) for k in range(4))
    L = t1 / t0
    return -(t3 / t0 - 3 * (t2 / t0) * L + 2 * L**3)


def g2g3(tau):
    Q = mp.exp(2j * mp.pi * tau)
    E4 = 1 + 240 * mp.nsum(lambda n: n**3 * Q**n / (1 - Q**n), [1, mp.inf])
    E6 = 1 - 504 * mp.nsum(lambda n: n**5 * Q**n / (1 - Q**n), [1, mp.inf])
    return 4 * mp.pi**4 * E4 / 3, 8 * mp.pi**6 * E6 / 27


def halfperiods(tau):
    return [wp(mp.mpf(1) / 2, tau), wp(tau / 2, tau), wp((1 + tau) / 2, tau)]


def AB(tau):
    return mp.pi / mp.im(tau) - 2 * eta1(tau), -mp.pi / mp.im(tau)


def residual(a, tau):
    A, B = AB(tau)
    return A * a + B * mp.conj(a) + zeta(a, tau)


def sanity(tau):
    tol = mp.mpf("1e-38")
    assert abs(eta1(tau) * tau / 2 - eta2(tau) / 2 - mp.pi * 1j / 2) < tol
    g2, g3 = g2g3(tau)
    z = mp.mpc("0.271", "0.313")
    p, pp = wp(z, tau), wp_prime(z, tau)
    assert abs(pp**2 - (4 * p**3 - g2 * p - g3)) / max(1, abs(p) ** 3) < tol
    assert abs(sum(halfperiods(tau))) < tol
    zz = mp.mpc("0.17", "0.23")
    assert abs(sigma(zz + 1, tau) +
               mp.exp(2 * eta1(tau) * (zz + mp.mpf(1) / 2)) * sigma(zz, tau)) < tol


def fmt(x):
    if isinstance(x, mp.mpc):
        return f"cplx{{{mp.nstr(mp.re(x), 17)}, {mp.nstr(mp.im(x), 17)}}}"
    return mp.nstr(x, 17)


def main():
    tau_i = mp.mpc(0, 1)
    tau_g = mp.mpc("0.3", "0.8")
    tau_5 = mp.mpc("0.5", "0.9")
    tau_h = mp.mpc("0.5", mp.sqrt(3) / 2)
    for tau in (tau_i, tau_g, tau_5, tau_h):
        sanity(tau)

    print("eta1(i)      =", fmt(eta1(tau_i)))
    print("theta1       =", fmt(theta1(mp.mpc("0.3", "0.1"), tau_i)))
    z = mp.mpc("0.2", "0.3")
    print("sigma        =", fmt(sigma(z, tau_i)))
    print("zeta         =", fmt(zeta(z, tau_i)))
    print("wp           =", fmt(wp(z, tau_i)))
    print("wp'          =", fmt(wp_prime(z, tau_i)))
    print("e1(i)        =", fmt(halfperiods(tau_i)[0]))
    print("g2(i)        =", fmt(g2g3(tau_i)[0]))
    print("m_triv(i)    =", fmt(abs(halfperiods(tau_i)[0] - AB(tau_i)[0]) / abs(AB(tau_i)[1])))
    print("eta1(g)      =", fmt(eta1(tau_g)))
    print("g2(g), g3(g) =", fmt(g2g3(tau_g)[0]), fmt(g2g3(tau_g)[1]))
    print("A(g)         =", fmt(AB(tau_g)[0]))
    print("e(g)         =", [fmt(e) for e in halfperiods(tau_g)])

    # nontrivial solution at tau_5, located via 2D root finding
    A, B = AB(tau_5)
    f = lambda x, y: [mp.re(residual(mp.mpc(x, y), tau_5)),
                      mp.im(residual(mp.mpc(x, y), tau_5))]
    root = mp.findroot(f, (mp.mpf("0.5"), mp.mpf("0.32")))
    a = mp.mpc(root[0], root[1])
    print("a(tau_5)     =", fmt(a))
    print("m(a)         =", fmt(abs(wp(a, tau_5) - A) / abs(B)))
    for w, eta in ((mp.mpf(1) / 2, eta1(tau_5)), (tau_5 / 2, eta2(tau_5))):
        print("lambda       =", fmt(mp.exp(4 * w * zeta(a, tau_5) - 4 * eta * a)))

    # critical point of the auxiliary map: wp(c) = A (on the Re = 1/2 line)
    c = mp.findroot(lambda t: wp(mp.mpf("0.5") + 1j * t, tau_5) - A,
                    mp.mpc("0.3", "0"))
    print("c(tau_5)     = cplx{0.5,", mp.nstr(mp.re(c), 17), "}")
    print("m_triv(hex)  =", fmt(abs(halfperiods(tau_h)[0] - AB(tau_h)[0]) / abs(AB(tau_h)[1])))


if __name__ == "__main__":
    main()
