#include "support/oracles.hpp"

#include <cmath>

namespace torusgf::oracle {

std::vector<cplx> wp_laurent_coeffs(cplx g2, cplx g3, int count) {
    std::vector<cplx> c(static_cast<size_t>(count) + 1);
    c[1] = g2 / 20.0;
    if (count >= 2) c[2] = g3 / 28.0;
    for (int k = 3; k <= count; ++k) {
        cplx s = 0.0;
        for (int m = 1; m <= k - 2; ++m) {
            s += c[size_t(m)] * c[size_t(k - 1 - m)];
        }
        c[size_t(k)] = 3.0 * s / ((2.0 * k + 3.0) * (k - 2.0));
    }
    return c;
}

LaurentValues laurent_values(cplx z, cplx g2, cplx g3) {
    constexpr int K = 40;
    const std::vector<cplx> c = wp_laurent_coeffs(g2, g3, K);
    const cplx z2 = z * z;

    cplx p = 1.0 / z2;
    cplx pp = -2.0 / (z2 * z);
    cplx zeta = 1.0 / z;
    cplx logsig = 0.0;
    cplx zpow = z2;  // z^{2k}
    for (int k = 1; k <= K; ++k) {
        p += c[size_t(k)] * zpow;
        pp += (2.0 * k) * c[size_t(k)] * zpow / z;
        zeta -= c[size_t(k)] * zpow * z / (2.0 * k + 1.0);
        logsig -= c[size_t(k)] * zpow * z2 / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
        zpow *= z2;
    }
    return {z * std::exp(logsig), zeta, p, pp};
}

cplx sigma_product(cplx z, cplx tau, int M) {
    // sigma(z) = z * prod' (1 - z/w) exp(z/w + z^2/2w^2 + z^3/3w^3 + z^4/4w^4)
    //            * exp(-z^4/4 * sum' w^-4)
    // over the symmetric truncation |m|,|n| <= M. The added cubic terms sum
    // to zero by symmetry; the quartic ones are subtracted back exactly.
    cplx log_prod = 0.0;
    cplx sum_w4 = 0.0;
    for (int m = -M; m <= M; ++m) {
        for (int n = -M; n <= M; ++n) {
            if (m == 0 && n == 0) continue;
            const cplx w = cplx(double(m), 0.0) + double(n) * tau;
            const cplx q = z / w;
            const cplx q2 = q * q;
            log_prod += std::log(1.0 - q) + q + q2 / 2.0 + q2 * q / 3.0 +
                        q2 * q2 / 4.0;
            const cplx w2 = w * w;
            sum_w4 += 1.0 / (w2 * w2);
        }
    }
    const cplx z2 = z * z;
    return z * std::exp(log_prod - z2 * z2 * sum_w4 / 4.0);
}

cplx theta1_qseries(cplx z, cplx tau) {
    using cld = std::complex<long double>;
    const long double pi = 3.14159265358979323846264338327950288L;
    const cld zt(static_cast<long double>(z.real()),
                 static_cast<long double>(z.imag()));
    const cld tt(static_cast<long double>(tau.real()),
                 static_cast<long double>(tau.imag()));
    const cld ipitau = cld(0.0L, pi) * tt;
    cld sum = 0.0L;
    for (int n = 0; n < 50; ++n) {
        const long double half = n + 0.5L;
        const cld qpow = std::exp(ipitau * (half * half));
        const cld term =
            (n % 2 == 0 ? 2.0L : -2.0L) * qpow *
            std::sin((2.0L * n + 1.0L) * pi * zt);
        sum += term;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

void eisenstein_g2g3(cplx tau, cplx& g2, cplx& g3) {
    using cld = std::complex<long double>;
    const long double pi = 3.14159265358979323846264338327950288L;
    const cld Q = std::exp(cld(0.0L, 2.0L * pi) *
                           cld(static_cast<long double>(tau.real()),
                               static_cast<long double>(tau.imag())));
    cld Qn = Q, s4 = 0.0L, s6 = 0.0L;
    for (int n = 1; n <= 800; ++n) {
        const long double nf = n;
        const cld t = Qn / (1.0L - Qn);
        s4 += nf * nf * nf * t;
        s6 += nf * nf * nf * nf * nf * t;
        Qn *= Q;
    }
    const long double pi2 = pi * pi;
    const long double pi4 = pi2 * pi2;
    const cld G2 = (4.0L * pi4 / 3.0L) * (1.0L + 240.0L * s4);
    const cld G3 = (8.0L * pi4 * pi2 / 27.0L) * (1.0L - 504.0L * s6);
    g2 = {static_cast<double>(G2.real()), static_cast<double>(G2.imag())};
    g3 = {static_cast<double>(G3.real()), static_cast<double>(G3.imag())};
}

cplx central_diff(const std::function<cplx(cplx)>& f, cplx z, double h) {
    return (f(z + h) - f(z - h)) / (2.0 * h);
}

double five_point_laplacian(const std::function<double(cplx)>& f, cplx z,
                            double h) {
    return (f(z + cplx(h, 0.0)) + f(z - cplx(h, 0.0)) + f(z + cplx(0.0, h)) +
            f(z - cplx(0.0, h)) - 4.0 * f(z)) /
           (h * h);
}

std::vector<cplx> grid_local_minima(const std::function<double(cplx)>& absF,
                                    const TorusLattice& L, int n,
                                    double threshold) {
    std::vector<double> vals(static_cast<size_t>(n) * n);
    auto node = [&](int i, int j) {
        return (i + 0.5) / double(n) + L.tau * ((j + 0.5) / double(n));
    };
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const cplx z = node(i, j);
            vals[size_t(j) * n + i] = lattice_distance(z, L) < 2e-2
                                          ? 1e300
                                          : absF(z);
        }
    }
    auto at = [&](int i, int j) {
        return vals[size_t((j + n) % n) * n + (i + n) % n];
    };
    std::vector<cplx> minima;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double v = at(i, j);
            if (v > threshold) continue;
            bool ismin = true;
            for (int dj = -1; dj <= 1 && ismin; ++dj) {
                for (int di = -1; di <= 1; ++di) {
                    if (di == 0 && dj == 0) continue;
                    if (at(i + di, j + dj) < v) {
                        ismin = false;
                        break;
                    }
                }
            }
            if (ismin) minima.push_back(node(i, j));
        }
    }
    return minima;
}

} // namespace torusgf::oracle
