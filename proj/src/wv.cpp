#include "torusgf/wv.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>

#include "torusgf/errors.hpp"
#include "torusgf/io.hpp"

namespace torusgf {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kTieTol = 1e-8;  // log-scale tie width for the central index

int exp_truncation(double max_radius) {
    const double r = std::max(1.0, max_radius);
    return static_cast<int>(std::ceil(r + 40.0 * std::sqrt(r) + 80.0));
}

} // namespace

CoefficientSeries CoefficientSeries::exponential(double max_radius) {
    CoefficientSeries s;
    s.label = "exp";
    s.truncation = exp_truncation(max_radius);
    s.coeff = [](int k) { return cplx(std::exp(-std::lgamma(k + 1.0)), 0.0); };
    s.log_abs = [](int k) { return -std::lgamma(k + 1.0); };
    s.phase = [](int) { return 0.0; };
    return s;
}

CoefficientSeries CoefficientSeries::cosh_series(double max_radius) {
    CoefficientSeries s;
    s.label = "cosh";
    s.truncation = exp_truncation(max_radius);
    s.coeff = [](int k) {
        return k % 2 == 0 ? cplx(std::exp(-std::lgamma(k + 1.0)), 0.0)
                          : cplx(0.0, 0.0);
    };
    s.log_abs = [](int k) {
        return k % 2 == 0 ? -std::lgamma(k + 1.0) : kNegInf;
    };
    s.phase = [](int) { return 0.0; };
    return s;
}

CoefficientSeries CoefficientSeries::monomial(int degree) {
    if (degree < 1) {
        throw Error(errname::bad_series, "monomial degree must be >= 1");
    }
    CoefficientSeries s;
    s.label = "z^" + std::to_string(degree);
    s.truncation = degree + 8;
    s.coeff = [degree](int k) {
        return k == degree ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    };
    s.log_abs = [degree](int k) { return k == degree ? 0.0 : kNegInf; };
    s.phase = [](int) { return 0.0; };
    return s;
}

CoefficientSeries CoefficientSeries::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(errname::io_error, "cannot open coefficient file " + path);
    }
    std::vector<cplx> coeffs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        for (char& ch : line) {
            if (ch == ',') ch = ' ';
        }
        std::istringstream ls(line);
        long idx;
        double re, im;
        if (!(ls >> idx)) continue;  // blank line
        if (idx < 0 || !(ls >> re >> im)) {
            throw Error(errname::bad_series,
                        "bad coefficient line " + std::to_string(lineno) +
                            " in " + path);
        }
        if (static_cast<size_t>(idx) >= coeffs.size()) {
            coeffs.resize(static_cast<size_t>(idx) + 1, cplx(0.0, 0.0));
        }
        coeffs[static_cast<size_t>(idx)] = cplx(re, im);
    }
    if (coeffs.size() < 2) {
        throw Error(errname::bad_series,
                    "coefficient file needs an entry with index >= 1");
    }
    auto data = std::make_shared<std::vector<cplx>>(std::move(coeffs));
    CoefficientSeries s;
    s.label = path;
    s.truncation = static_cast<int>(data->size()) - 1;
    s.coeff = [data](int k) {
        return k >= 0 && k < int(data->size()) ? (*data)[k] : cplx(0.0, 0.0);
    };
    s.log_abs = [data](int k) {
        if (k < 0 || k >= int(data->size())) return kNegInf;
        const double m = std::abs((*data)[k]);
        return m > 0.0 ? std::log(m) : kNegInf;
    };
    s.phase = [data](int k) {
        return k >= 0 && k < int(data->size()) ? std::arg((*data)[k]) : 0.0;
    };
    return s;
}

namespace {

// Log-scale maximal term at log-radius lr + offset. Keeping the offset as a
// separate summand lets the h and -h evaluations of the Macintyre quotient
// cancel the shared base exactly.
struct LogMaxTerm {
    double log_mu;
    int n;
};

LogMaxTerm max_term_at(const CoefficientSeries& s, double lr, double offset) {
    double best = kNegInf;
    int n = -1;
    // largest index within kTieTol of the maximum wins ("take the largest
    // of them"); exact rational ties land well inside the tolerance while
    // distinct neighbors of the maximum differ by ~1/n >> kTieTol
    for (int k = 1; k <= s.truncation; ++k) {
        const double la = s.log_abs(k);
        if (la == kNegInf) continue;
        const double t = (la + k * lr) + k * offset;
        if (t > best + kTieTol) {
            best = t;
            n = k;
        } else if (t >= best - kTieTol) {
            n = k;
            best = std::max(best, t);
        }
    }
    if (n < 0) {
        throw Error(errname::bad_series,
                    "series has no nonzero coefficient with index >= 1");
    }
    if (n + 2 >= s.truncation) {
        throw Error(errname::truncation_insufficient,
                    "central index " + std::to_string(n) +
                        " too close to truncation " +
                        std::to_string(s.truncation));
    }
    return {best, n};
}

// Index range that can contribute at log-radii up to lr_max given the
// reference log_mu; everything below exp(-60) of the maximal term is noise.
struct TermWindow {
    int lo, hi;
};

TermWindow term_window(const CoefficientSeries& s, double lr_max,
                       double log_mu) {
    TermWindow w{0, 0};
    bool open = false;
    for (int k = 0; k <= s.truncation; ++k) {
        const double la = s.log_abs(k);
        if (la == kNegInf) continue;
        if (la + k * lr_max - log_mu >= -60.0) {
            if (!open) {
                w.lo = k;
                open = true;
            }
            w.hi = k;
        }
    }
    return open ? w : TermWindow{0, 0};
}

// f scaled by exp(-log_mu), evaluated at radius exp(lr + offset), angle
// theta. Shares the (la + k*lr) + k*offset grouping with max_term_at.
cplx scaled_sum_at(const CoefficientSeries& s, const TermWindow& w, double lr,
                   double offset, double theta, double log_mu) {
    cplx sum = 0.0;
    for (int k = w.lo; k <= w.hi; ++k) {
        const double la = s.log_abs(k);
        if (la == kNegInf) continue;
        const double mag = (la + k * lr) + k * offset - log_mu;
        if (mag < -60.0) continue;
        const double ph = s.phase(k) + k * theta;
        sum += std::exp(mag) * cplx(std::cos(ph), std::sin(ph));
    }
    return sum;
}

// log|f| maximized over the circle: 720-point coarse scan, smallest angle
// kept among near-ties, then golden-section refinement to 1e-10.
struct CircleMax {
    double log_M;
    double theta;
};

CircleMax circle_max(const std::function<double(double)>& logf_theta) {
    constexpr int kCoarse = 720;
    constexpr double kTie = 1e-9;

    double best = kNegInf;
    int besti = 0;
    for (int i = 0; i < kCoarse; ++i) {
        const double v = logf_theta(2.0 * kPi * i / kCoarse);
        if (v > best + kTie) {
            best = v;
            besti = i;
        }
    }
    const double golden = 0.61803398874989484820;
    double lo = 2.0 * kPi * (besti - 1) / kCoarse;
    double hi = 2.0 * kPi * (besti + 1) / kCoarse;
    double x1 = hi - golden * (hi - lo);
    double x2 = lo + golden * (hi - lo);
    double f1 = logf_theta(x1), f2 = logf_theta(x2);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + golden * (hi - lo);
            f2 = logf_theta(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - golden * (hi - lo);
            f1 = logf_theta(x1);
        }
    }
    double theta = 0.5 * (lo + hi);
    double val = logf_theta(theta);
    // deterministic representative when the maximum is flat or symmetric:
    // angle 0 wins whenever it is just as good
    const double v0 = logf_theta(0.0);
    if (v0 >= val - 1e-12 * std::max(1.0, std::abs(val))) {
        theta = 0.0;
        val = v0;
    }
    return {val, theta};
}

struct SeriesCircleMax {
    double log_M;
    double theta;
    double log_mu;
    int n;
};

SeriesCircleMax series_circle_max(const CoefficientSeries& s, double lr,
                                  double offset) {
    const LogMaxTerm mt = max_term_at(s, lr, offset);
    const TermWindow w = term_window(s, lr + offset + 1e-9, mt.log_mu);
    auto logf = [&](double theta) {
        return std::log(
            std::abs(scaled_sum_at(s, w, lr, offset, theta, mt.log_mu)));
    };
    const CircleMax cm = circle_max(logf);
    // log M = log mu + log|S|; the two addends are returned separately so
    // difference quotients can cancel the shared base exactly
    return {mt.log_mu + cm.log_M, cm.theta, mt.log_mu, mt.n};
}

} // namespace

MaxTerm max_term(double r, const CoefficientSeries& s) {
    if (!(r > 0.0)) {
        throw Error(errname::bad_series, "radius must be positive");
    }
    const LogMaxTerm mt = max_term_at(s, std::log(r), 0.0);
    return {std::exp(mt.log_mu), mt.log_mu, mt.n};
}

MaxModulus max_modulus(double r, const CoefficientSeries& s) {
    if (!(r > 0.0)) {
        throw Error(errname::bad_series, "radius must be positive");
    }
    const SeriesCircleMax cm = series_circle_max(s, std::log(r), 0.0);
    MaxModulus out;
    out.log_M = cm.log_M;
    out.M = std::exp(cm.log_M);
    out.z_r = r * cplx(std::cos(cm.theta), std::sin(cm.theta));
    return out;
}

MaxModulus max_modulus(double r, const std::function<double(cplx)>& log_abs_f) {
    if (!(r > 0.0)) {
        throw Error(errname::bad_series, "radius must be positive");
    }
    auto logf = [&](double theta) {
        return log_abs_f(r * cplx(std::cos(theta), std::sin(theta)));
    };
    const CircleMax cm = circle_max(logf);
    MaxModulus out;
    out.log_M = cm.log_M;
    out.M = std::exp(cm.log_M);
    out.z_r = r * cplx(std::cos(cm.theta), std::sin(cm.theta));
    return out;
}

double macintyre_a(double r, const CoefficientSeries& s, double dr) {
    if (!(r > dr && dr > 0.0)) {
        throw Error(errname::bad_series, "need r > dr > 0");
    }
    const double h = dr / r;
    const double lr = std::log(r);
    const SeriesCircleMax up = series_circle_max(s, lr, h);
    const SeriesCircleMax dn = series_circle_max(s, lr, -h);
    if (up.n == dn.n) {
        // log_mu(+-h) share the base la(n) + n*lr, so their difference is
        // n*2h exactly; only the small circle corrections remain in the
        // quotient and no digits are lost to the large common magnitude.
        const double d_circle =
            (up.log_M - up.log_mu) - (dn.log_M - dn.log_mu);
        return up.n + d_circle / (2.0 * h);
    }
    return (up.log_M - dn.log_M) / (2.0 * h);
}

double macintyre_a(double r, const std::function<double(cplx)>& log_abs_f,
                   double dr) {
    if (!(r > dr && dr > 0.0)) {
        throw Error(errname::bad_series, "need r > dr > 0");
    }
    const double h = dr / r;
    const double up = max_modulus(r * std::exp(h), log_abs_f).log_M;
    const double dn = max_modulus(r * std::exp(-h), log_abs_f).log_M;
    return (up - dn) / (2.0 * h);
}

double wv_approx_error(double r, double eps, const CoefficientSeries& s) {
    if (!(r > 0.0) || !(eps > 0.0 && eps < 0.5)) {
        throw Error(errname::bad_series, "need r > 0 and 0 < eps < 1/2");
    }
    const double lr = std::log(r);
    const LogMaxTerm mt = max_term_at(s, lr, 0.0);
    const double a = macintyre_a(r, s, 1e-4 * r);
    const SeriesCircleMax cm = series_circle_max(s, lr, 0.0);
    const cplx z_r = r * cplx(std::cos(cm.theta), std::sin(cm.theta));
    const double rho = r / std::pow(a, 0.5 + eps);

    const TermWindow w =
        term_window(s, std::log(r + rho) + 1e-12, mt.log_mu);
    auto S_at = [&](cplx z) {
        const double lz = std::log(std::abs(z));
        const double az = std::arg(z);
        return scaled_sum_at(s, w, lz, 0.0, az, mt.log_mu);
    };
    const cplx Sref = S_at(z_r);

    double worst = 0.0;
    // deterministic disk sample: 8 rings x 25 angles, phase-shifted per ring
    for (int ring = 1; ring <= 8; ++ring) {
        const double rr = rho * ring / 8.0;
        for (int m = 0; m < 25; ++m) {
            const double th = 2.0 * kPi * (m + 0.37 * ring) / 25.0;
            const cplx z = z_r + rr * cplx(std::cos(th), std::sin(th));
            const cplx mono = std::exp(a * std::log(z / z_r));
            const cplx ratio = S_at(z) / (Sref * mono);
            worst = std::max(worst, std::abs(ratio - 1.0));
        }
    }
    return worst;
}

WVSnapshot wv_snapshot(double r, double eps, const CoefficientSeries& s) {
    WVSnapshot snap;
    snap.r = r;
    const MaxTerm mt = max_term(r, s);
    snap.mu = mt.mu;
    snap.log_mu = mt.log_mu;
    snap.n = mt.n;
    const MaxModulus mm = max_modulus(r, s);
    snap.M = mm.M;
    snap.log_M = mm.log_M;
    snap.z_r = mm.z_r;
    snap.a = macintyre_a(r, s, 1e-4 * r);
    snap.disk_radius = r / std::pow(snap.a, 0.5 + eps);
    snap.approx_error = wv_approx_error(r, eps, s);
    return snap;
}

void write_wv_csv(std::span<const WVSnapshot> snaps, std::ostream& os) {
    os << "r,mu,n,M,zr_re,zr_im,a,disk_radius,approx_error\n";
    for (const WVSnapshot& s : snaps) {
        os << format_double(s.r) << ',' << format_double(s.mu) << ',' << s.n
           << ',' << format_double(s.M) << ',' << format_double(s.z_r.real())
           << ',' << format_double(s.z_r.imag()) << ',' << format_double(s.a)
           << ',' << format_double(s.disk_radius) << ','
           << format_double(s.approx_error) << "\n";
    }
}

EscapeRecord escaping_orbit(const std::function<cplx(cplx)>& f, cplx z0,
                            double bound, int max_iter) {
    if (!(bound > 1.0)) {
        throw Error(errname::bad_series, "escape bound must exceed 1");
    }
    EscapeRecord rec;
    rec.status = EscapeStatus::bounded;
    rec.escaped_at = -1;
    cplx z = z0;
    rec.orbit.push_back(z);
    for (int k = 1; k <= max_iter; ++k) {
        z = f(z);
        rec.orbit.push_back(z);
        const bool finite = std::isfinite(z.real()) && std::isfinite(z.imag());
        if (!finite) {
            rec.status = EscapeStatus::escaped_overflow;
            rec.escaped_at = k;
            return rec;
        }
        if (std::abs(z) > bound) {
            rec.status = EscapeStatus::escaped;
            rec.escaped_at = k;
            return rec;
        }
    }
    return rec;
}

RSReport rippon_stallard_check(const std::function<cplx(cplx)>& g,
                               const std::function<cplx(cplx)>& gprime,
                               double R, std::span<const cplx> samples) {
    RSReport rep;
    rep.min_margin = std::numeric_limits<double>::infinity();
    for (const cplx& z : samples) {
        RSSample s;
        s.z = z;
        const cplx gz = g(z);
        const double m = std::abs(gz);
        s.qualifying = m > R * R;
        s.lhs = std::abs(z * gprime(z) / gz);
        s.rhs = std::log(m) / (16.0 * kPi);
        s.holds = s.lhs >= s.rhs;
        if (s.qualifying) {
            ++rep.n_qualifying;
            if (!s.holds) ++rep.n_violations;
            rep.min_margin = std::min(rep.min_margin, s.lhs - s.rhs);
        } else {
            ++rep.n_vacuous;
        }
        rep.samples.push_back(s);
    }
    if (rep.n_qualifying == 0) rep.min_margin = 0.0;
    return rep;
}

} // namespace torusgf
