#ifndef TORUSGF_TEST_ORACLES_HPP
#define TORUSGF_TEST_ORACLES_HPP

// Independent evaluation paths used only by the test suite. None of these
// touch the theta-series code in src/: the Weierstrass functions come from
// the Laurent recursion in g2, g3, sigma additionally from a compensated
// lattice product, and theta1 from a standalone long-double q-series.

#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "torusgf/lattice.hpp"

namespace torusgf::oracle {

using cplx = std::complex<double>;

// Laurent/Taylor coefficients c_k of wp(z) = 1/z^2 + sum c_k z^{2k}:
// c_1 = g2/20, c_2 = g3/28, then the classical quadratic recursion.
std::vector<cplx> wp_laurent_coeffs(cplx g2, cplx g3, int count);

struct LaurentValues {
    cplx sigma, zeta, p, p_prime;
};

// sigma, zeta, wp, wp' from the Laurent expansion around 0; valid while
// |z| is below the nearest lattice point (caller's responsibility).
LaurentValues laurent_values(cplx z, cplx g2, cplx g3);

// Weierstrass sigma by a truncated symmetric lattice product with 3rd/4th
// order convergence factors (the 4th-order factor is compensated exactly,
// so the truncation error falls off like M^-4).
cplx sigma_product(cplx z, cplx tau, int M = 60);

// theta1 by a plain long-double q-series, 50 terms.
cplx theta1_qseries(cplx z, cplx tau);

// Eisenstein invariants by direct q-summation in long double.
void eisenstein_g2g3(cplx tau, cplx& g2, cplx& g3);

// ---- finite differences ----------------------------------------------------

// complex central derivative of a complex function
cplx central_diff(const std::function<cplx(cplx)>& f, cplx z, double h);

// 5-point Laplacian of a real-valued function of a complex point
double five_point_laplacian(const std::function<double(cplx)>& f, cplx z,
                            double h);

// ---- brute-force searches --------------------------------------------------

// Local minima of |F| on an n-by-n grid over the fundamental parallelogram
// (strict local minimum among 8 neighbors, value below threshold).
std::vector<cplx> grid_local_minima(const std::function<double(cplx)>& absF,
                                    const TorusLattice& L, int n,
                                    double threshold);

// ---- deterministic randomness ----------------------------------------------

class Rng {
public:
    explicit Rng(unsigned long long seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (double(gen_() >> 11) * 0x1.0p-53);
    }

    // tau in (a slight enlargement of) the standard fundamental domain
    cplx tau() { return {uniform(-0.5, 0.5), uniform(0.9, 1.8)}; }

    // point in the fundamental parallelogram, away from the lattice
    cplx point(const TorusLattice& L, double margin = 0.05) {
        for (;;) {
            const cplx z =
                uniform(0.0, 1.0) + L.tau * uniform(0.0, 1.0);
            if (lattice_distance(z, L) > margin) return z;
        }
    }

private:
    std::mt19937_64 gen_;
};

} // namespace torusgf::oracle

#endif
