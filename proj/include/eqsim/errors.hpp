#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace eqsim {

// Thrown when a statistic is requested before enough samples have been seen.
struct not_ready_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an activity measure is requested for a tap with zero observed
// energy (the ratio is undefined; callers normally treat such taps as inactive).
struct undefined_measure_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when the equalizer design system is degenerate (e.g. the channel
// estimate cannot produce a usable main tap).  Carries the offending estimate.
struct design_failure_error : std::runtime_error {
    design_failure_error(const std::string& what, std::vector<double> est)
        : std::runtime_error(what), estimate(std::move(est)) {}
    std::vector<double> estimate;
};

}  // namespace eqsim
