#ifndef TORUSGF_ERRORS_HPP
#define TORUSGF_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace torusgf {

// Computation error with a stable machine-readable name. The CLI maps the
// name into its error JSON; tests match on it.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

namespace errname {
inline constexpr const char* invalid_tau = "invalid_tau";
inline constexpr const char* nonfinite_input = "nonfinite_input";
inline constexpr const char* precision_loss = "precision_loss";
inline constexpr const char* pole_proximity = "pole_proximity";
inline constexpr const char* series_no_convergence = "series_no_convergence";
inline constexpr const char* not_a_fixed_point = "not_a_fixed_point";
inline constexpr const char* degenerate_critical_point = "degenerate_critical_point";
inline constexpr const char* solver_incomplete = "solver_incomplete";
inline constexpr const char* boundary_indeterminate = "boundary_indeterminate";
inline constexpr const char* trivial_solution = "trivial_solution";
inline constexpr const char* truncation_insufficient = "truncation_insufficient";
inline constexpr const char* fit_failure = "fit_failure";
inline constexpr const char* io_error = "io_error";
inline constexpr const char* bad_series = "bad_series";
} // namespace errname

} // namespace torusgf

#endif
