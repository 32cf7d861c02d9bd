#include "torusgf/region.hpp"

#include <atomic>
#include <cmath>
#include <ostream>
#include <thread>

#include "torusgf/dynamics.hpp"
#include "torusgf/errors.hpp"
#include "torusgf/green.hpp"
#include "torusgf/io.hpp"

namespace torusgf {

std::array<bool, 3> ineq_holds(cplx tau) {
    const TorusLattice L = lattice_from_tau(tau);
    std::array<bool, 3> out;
    for (int j = 0; j < 3; ++j) {
        const cplx denom = L.e[j] * L.omega1 * L.omega1 + L.eta1 * L.omega1;
        const cplx expr = cplx(0.0, kPi) / denom - 2.0 * tau;
        out[j] = expr.imag() < 0.0;
    }
    return out;
}

namespace {

bool trivial_boundary_band(const TorusLattice& L) {
    const AntiConstants C = constants_AB(L);
    for (int j = 0; j < 3; ++j) {
        const double m = std::abs(L.e[j] - C.A) / std::abs(C.B);
        if (std::abs(m - 1.0) < kNeutralBand) return true;
    }
    return false;
}

} // namespace

TauRegionMap scan_region(double re_min, double re_max, double im_min,
                         double im_max, int nx, int ny,
                         const ScanOptions& opts) {
    if (!(nx >= 1 && ny >= 1) || !(re_max >= re_min) || !(im_max >= im_min) ||
        !(im_min > 0.0)) {
        throw Error(errname::invalid_tau, "invalid scan window");
    }
    TauRegionMap map;
    map.re_min = re_min;
    map.re_max = re_max;
    map.im_min = im_min;
    map.im_max = im_max;
    map.nx = nx;
    map.ny = ny;
    map.has_counts = opts.cross_validate;
    map.samples.resize(static_cast<size_t>(nx) * ny);

    auto node = [&](int ix, int iy) -> cplx {
        const double re =
            nx == 1 ? re_min : re_min + (re_max - re_min) * ix / double(nx - 1);
        const double im =
            ny == 1 ? im_min : im_min + (im_max - im_min) * iy / double(ny - 1);
        return {re, im};
    };

    parallel_for(nx * ny, opts.threads, [&](int idx) {
        const int ix = idx % nx;
        const int iy = idx / nx;
        TauSample& s = map.samples[idx];
        s.tau = node(ix, iy);
        if (s.tau.imag() < kTauImFloor) {
            s.evaluated = false;
            return;
        }
        if (opts.cross_validate) {
            const ConsistencyRecord rec = cross_validate(s.tau);
            s.flags = rec.flags;
            s.in_region = rec.in_region;
            s.boundary_band = rec.boundary_band;
            s.solver_count = rec.count;
        } else {
            const TorusLattice L = lattice_from_tau(s.tau);
            for (int j = 0; j < 3; ++j) {
                const cplx denom =
                    L.e[j] * L.omega1 * L.omega1 + L.eta1 * L.omega1;
                s.flags[j] = (cplx(0.0, kPi) / denom - 2.0 * s.tau).imag() < 0.0;
            }
            s.in_region = s.flags[0] && s.flags[1] && s.flags[2];
            s.boundary_band = trivial_boundary_band(L);
        }
        s.evaluated = true;
    });
    return map;
}

ConsistencyRecord cross_validate(cplx tau) {
    if (!(tau.imag() >= kTauImFloor)) {
        throw Error(errname::precision_loss,
                    "cross_validate requires Im(tau) >= 0.05");
    }
    ConsistencyRecord rec;
    rec.flags = ineq_holds(tau);
    rec.in_region = rec.flags[0] && rec.flags[1] && rec.flags[2];

    const TorusLattice L = lattice_from_tau(tau);
    const CriticalPointReport report = solve_critical_points(L);
    rec.count = report.total;
    rec.boundary_band =
        report.status == SolveStatus::boundary_indeterminate ||
        trivial_boundary_band(L);

    int trivial_repelling = 0;
    for (const CriticalPoint& p : report.points) {
        if (p.kind == PointKind::trivial_halfperiod &&
            p.stability == Stability::repelling) {
            ++trivial_repelling;
        }
    }
    rec.all_trivial_repelling = trivial_repelling == 3;
    rec.consistent = rec.boundary_band ||
                     (rec.in_region == (rec.count == 5) &&
                      rec.in_region == rec.all_trivial_repelling);
    return rec;
}

void write_region_csv(const TauRegionMap& map, std::ostream& os) {
    os << "tau_re,tau_im,f1,f2,f3,in_region";
    if (map.has_counts) os << ",count";
    os << "\n";
    for (const TauSample& s : map.samples) {
        os << format_double(s.tau.real()) << ',' << format_double(s.tau.imag())
           << ',' << int(s.flags[0]) << ',' << int(s.flags[1]) << ','
           << int(s.flags[2]) << ',' << int(s.in_region);
        if (map.has_counts) {
            os << ',';
            if (s.solver_count >= 0) os << s.solver_count;
        }
        os << "\n";
    }
}

namespace {

// pixel transform for a 640x520 viewport with a 60px margin
struct SvgFrame {
    const TauRegionMap& map;
    static constexpr double W = 640.0, H = 520.0, M = 60.0;

    double px(double re) const {
        return M + (re - map.re_min) / (map.re_max - map.re_min) * (W - 2 * M);
    }
    double py(double im) const {
        return H - M - (im - map.im_min) / (map.im_max - map.im_min) * (H - 2 * M);
    }
};

void svg_num(std::ostream& os, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    os << buf;
}

} // namespace

void write_region_svg(const TauRegionMap& map, std::ostream& os) {
    const SvgFrame F{map};
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
          "height=\"520\" viewBox=\"0 0 640 520\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"520\" fill=\"white\"/>\n";

    // region cells
    const double cw = (SvgFrame::W - 2 * SvgFrame::M) / std::max(1, map.nx - 1);
    const double ch = (SvgFrame::H - 2 * SvgFrame::M) / std::max(1, map.ny - 1);
    os << "<g fill=\"#4477aa\" stroke=\"none\">\n";
    for (const TauSample& s : map.samples) {
        if (!s.evaluated || !s.in_region) continue;
        os << "<rect x=\"";
        svg_num(os, F.px(s.tau.real()) - cw / 2);
        os << "\" y=\"";
        svg_num(os, F.py(s.tau.imag()) - ch / 2);
        os << "\" width=\"";
        svg_num(os, cw);
        os << "\" height=\"";
        svg_num(os, ch);
        os << "\"/>\n";
    }
    os << "</g>\n";

    // frame and ticks
    os << "<rect x=\"" << SvgFrame::M << "\" y=\"" << SvgFrame::M
       << "\" width=\"" << SvgFrame::W - 2 * SvgFrame::M << "\" height=\""
       << SvgFrame::H - 2 * SvgFrame::M
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double re : {-0.5, 0.0, 0.5}) {
        if (re < map.re_min - 1e-12 || re > map.re_max + 1e-12) continue;
        const double x = F.px(re);
        os << "<line x1=\"";
        svg_num(os, x);
        os << "\" y1=\"" << SvgFrame::H - SvgFrame::M << "\" x2=\"";
        svg_num(os, x);
        os << "\" y2=\"" << SvgFrame::H - SvgFrame::M + 8
           << "\" stroke=\"black\"/>\n";
        os << "<text x=\"";
        svg_num(os, x);
        os << "\" y=\"" << SvgFrame::H - SvgFrame::M + 24
           << "\" font-size=\"14\" text-anchor=\"middle\">";
        svg_num(os, re);
        os << "</text>\n";
    }
    for (double im : {0.5, 1.0, 1.5, 2.0}) {
        if (im < map.im_min - 1e-12 || im > map.im_max + 1e-12) continue;
        const double y = F.py(im);
        os << "<line x1=\"" << SvgFrame::M - 8 << "\" y1=\"";
        svg_num(os, y);
        os << "\" x2=\"" << SvgFrame::M << "\" y2=\"";
        svg_num(os, y);
        os << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << SvgFrame::M - 12 << "\" y=\"";
        svg_num(os, y + 5);
        os << "\" font-size=\"14\" text-anchor=\"end\">";
        svg_num(os, im);
        os << "</text>\n";
    }

    // the two reference markers
    struct Marker {
        double re, im;
        const char* label;
    };
    const Marker markers[2] = {{0.0, 1.0, "i"},
                               {0.5, 0.86602540378443865, "e^{i\xcf\x80/3}"}};
    for (const Marker& m : markers) {
        os << "<circle class=\"marker\" cx=\"";
        svg_num(os, F.px(m.re));
        os << "\" cy=\"";
        svg_num(os, F.py(m.im));
        os << "\" r=\"4\" fill=\"black\"/>\n";
        os << "<text x=\"";
        svg_num(os, F.px(m.re) + 8);
        os << "\" y=\"";
        svg_num(os, F.py(m.im) - 6);
        os << "\" font-size=\"15\">" << m.label << "</text>\n";
    }
    os << "</svg>\n";
}

} // namespace torusgf
