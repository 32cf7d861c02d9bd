#ifndef TORUSGF_REGION_HPP
#define TORUSGF_REGION_HPP

#include <array>
#include <iosfwd>
#include <vector>

#include "torusgf/lattice.hpp"

namespace torusgf {

// The three inequalities of the critical-point count criterion:
//   Im( pi*i / (e_j omega1^2 + eta1 omega1) - 2 tau ) < 0,  j = 1,2,3,
// evaluated under the 2*omega1 = 1 normalization. All three hold exactly
// when all three trivial fixed points are repelling.
std::array<bool, 3> ineq_holds(cplx tau);

struct TauSample {
    cplx tau;
    std::array<bool, 3> flags = {false, false, false};
    bool in_region = false;
    bool boundary_band = false;  // some trivial multiplier within 1e-4 of 1
    bool evaluated = false;
    int solver_count = -1;       // -1 when cross-validation was not run
};

struct TauRegionMap {
    double re_min = 0, re_max = 0, im_min = 0, im_max = 0;
    int nx = 0, ny = 0;
    bool has_counts = false;
    std::vector<TauSample> samples;  // row-major, im outer, re inner

    const TauSample& at(int ix, int iy) const {
        return samples[static_cast<size_t>(iy) * nx + ix];
    }
};

struct ScanOptions {
    bool cross_validate = false;
    int threads = 1;
};

// Evaluates the inequality triple on an inclusive nx-by-ny grid. Nodes with
// Im(tau) below the precision floor are marked unevaluated. Deterministic:
// output is independent of the thread count.
TauRegionMap scan_region(double re_min, double re_max, double im_min,
                         double im_max, int nx, int ny,
                         const ScanOptions& opts = {});

struct ConsistencyRecord {
    std::array<bool, 3> flags;
    bool in_region;
    int count;
    bool all_trivial_repelling;
    bool boundary_band;
    bool consistent;
};

// Runs the inequality test and the critical-point solver independently and
// checks the three-way equivalence (ineq <=> count == 5 <=> all trivial
// repelling); boundary-band samples are exempt.
ConsistencyRecord cross_validate(cplx tau);

// CSV rows: tau_re,tau_im,f1,f2,f3,in_region[,count]. Byte-deterministic.
void write_region_csv(const TauRegionMap& map, std::ostream& os);

// SVG raster of in_region cells with the frame ticks at -0.5, 0, 0.5 and
// 0.5..2.0 and the two reference markers (tau = i and tau = e^{i pi/3}).
void write_region_svg(const TauRegionMap& map, std::ostream& os);

} // namespace torusgf

#endif
