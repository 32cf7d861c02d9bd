#ifndef TORUSGF_METRIC_HPP
#define TORUSGF_METRIC_HPP

#include <span>
#include <utility>

#include "torusgf/lattice.hpp"

namespace torusgf {

// A curvature-1 conic metric built from a nontrivial solution a of the
// fixed-point equation, through the second-kind elliptic function
//   f(z) = c e^{2 z zeta(a)} sigma(z-a)/sigma(z+a)
// and the Liouville density u = log(8|f'|^2/(1+|f|^2)^2).
struct MetricSolution {
    cplx a;
    cplx c;
    TorusLattice lattice;
};

// Validates |R(a)| < 1e-8, c != 0, and rejects the trivial half-period
// solutions (they make f constant and the density degenerate).
MetricSolution make_metric_solution(cplx a, cplx c, const TorusLattice& L);

// f itself; pole at z = -a modulo the lattice.
cplx f_second_kind(cplx z, const MetricSolution& sol);

// (lambda_1, lambda_2) with lambda_j = exp(4 omega_j zeta(a) - 4 eta_j a).
// Both have modulus 1 exactly when a solves the fixed-point equation.
std::pair<cplx, cplx> multipliers(const MetricSolution& sol);

// Liouville density, computed in log space through f'/f so it stays finite
// across the poles and zeros of f. Doubly periodic; singular only on the
// lattice.
double metric_u(cplx z, const MetricSolution& sol);

// 5-point-stencil Laplacian of u plus e^u; O(h^2) away from the lattice.
double pde_residual(cplx z, double h, const MetricSolution& sol);

// Cone angle at the lattice point from the growth of the angular mean of u:
// fits mean_u(r) ~ s log r + b over the given decreasing radii and returns
// 2 pi (1 + s/2).
double cone_angle(const MetricSolution& sol, std::span<const double> radii);

} // namespace torusgf

#endif
