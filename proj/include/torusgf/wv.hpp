#ifndef TORUSGF_WV_HPP
#define TORUSGF_WV_HPP

#include <complex>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace torusgf {

using cplx = std::complex<double>;

// Power-series coefficient source for growth analysis. Everything downstream
// works on log|a_k| + k log r, so enormous radii never overflow.
struct CoefficientSeries {
    std::string label;
    int truncation = 0;                     // largest usable index N
    std::function<cplx(int)> coeff;         // a_k (may underflow to 0)
    std::function<double(int)> log_abs;     // log|a_k|; -inf where a_k = 0
    std::function<double(int)> phase;       // arg(a_k)

    static CoefficientSeries exponential(double max_radius);
    static CoefficientSeries cosh_series(double max_radius);
    static CoefficientSeries monomial(int degree);
    // Lines of "index re im" (comma or whitespace separated, '#' comments).
    static CoefficientSeries from_file(const std::string& path);
};

struct MaxTerm {
    double mu;      // may overflow to inf; log_mu stays finite
    double log_mu;
    int n;          // central index, ties resolved to the largest index
};

// Maximal term over k >= 1. Ties within 1e-8 on the log scale collapse to
// the largest index.
MaxTerm max_term(double r, const CoefficientSeries& s);

struct MaxModulus {
    double M;       // may overflow to inf; log_M stays finite
    double log_M;
    cplx z_r;       // maximizer on |z| = r, smallest-angle representative
};

// Maximum modulus over |z| = r: 720-point angular scan plus golden-section
// refinement to angular tolerance 1e-10.
MaxModulus max_modulus(double r, const CoefficientSeries& s);
MaxModulus max_modulus(double r, const std::function<double(cplx)>& log_abs_f);

// a(r) = r M'(r)/M(r) by central difference of log M in log r with
// step h = dr/r.
double macintyre_a(double r, const CoefficientSeries& s, double dr);
double macintyre_a(double r, const std::function<double(cplx)>& log_abs_f,
                   double dr);

// sup over 200 deterministic points of the disk |z - z_r| <= r/a^{1/2+eps}
// of |f(z) / ((z/z_r)^a f(z_r)) - 1|.
double wv_approx_error(double r, double eps, const CoefficientSeries& s);

struct WVSnapshot {
    double r;
    double mu;
    int n;
    double M;
    cplx z_r;
    double a;
    double disk_radius;
    double approx_error;
    // log-scale companions of mu and M (finite even when those overflow)
    double log_mu;
    double log_M;
};

WVSnapshot wv_snapshot(double r, double eps, const CoefficientSeries& s);

// CSV columns: r,mu,n,M,zr_re,zr_im,a,disk_radius,approx_error
void write_wv_csv(std::span<const WVSnapshot> snaps, std::ostream& os);

enum class EscapeStatus { escaped, escaped_overflow, bounded };

struct EscapeRecord {
    std::vector<cplx> orbit;  // starts with z0
    EscapeStatus status;
    int escaped_at;           // number of applications of f; -1 if bounded
};

// Iterates f until |z| exceeds the bound, the value overflows (counted as
// escaped, flagged), or max_iter applications.
EscapeRecord escaping_orbit(const std::function<cplx(cplx)>& f, cplx z0,
                            double bound, int max_iter);

struct RSSample {
    cplx z;
    double lhs;        // |z g'(z)/g(z)|
    double rhs;        // log|g(z)| / (16 pi)
    bool qualifying;   // |g(z)| > R^2
    bool holds;        // lhs >= rhs (meaningful only when qualifying)
};

struct RSReport {
    std::vector<RSSample> samples;
    int n_qualifying = 0;
    int n_vacuous = 0;
    int n_violations = 0;
    double min_margin = 0.0;  // min over qualifying samples of lhs - rhs
};

// Checks the logarithmic-derivative lower bound
//   |g(z)| > R^2  =>  |z g'(z)/g(z)| >= log|g(z)| / (16 pi)
// for each sample; the caller asserts that all finite critical and
// asymptotic values of g lie in |w| <= R.
RSReport rippon_stallard_check(const std::function<cplx(cplx)>& g,
                               const std::function<cplx(cplx)>& gprime,
                               double R, std::span<const cplx> samples);

} // namespace torusgf

#endif
