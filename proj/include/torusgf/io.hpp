#ifndef TORUSGF_IO_HPP
#define TORUSGF_IO_HPP

#include <complex>
#include <functional>
#include <string>

namespace torusgf {

// All floating output uses 17 significant digits so regression fixtures
// round-trip exactly.
std::string format_double(double v);

// Complex as a JSON [re, im] pair.
std::string format_complex_json(std::complex<double> v);

// Command-line complex literals: "re+imi" / "re-imi" / "re" / "imi",
// e.g. "0.5+0.9i", "0+1i", "-1.2i".
std::complex<double> parse_complex(const std::string& text);

// Runs fn(0..n-1) on up to `threads` workers. Results must be written to
// disjoint slots so the output is schedule-independent.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

} // namespace torusgf

#endif
