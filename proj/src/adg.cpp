#include "eqsim/adg.hpp"

#include <cmath>
#include <stdexcept>

#include "eqsim/errors.hpp"

namespace eqsim {

ActivityTracker::ActivityTracker(std::size_t length, AdgMode mode,
                                 double threshold_constant,
                                 std::size_t hysteresis)
    : mode_(mode),
      threshold_constant_(threshold_constant),
      hysteresis_(hysteresis),
      cross_(length, 0.0),
      energy_(length, 0.0),
      pred_cross_(length, 0.0),
      restore_(length, 0.0),
      active_(length, true),
      consec_active_(length, 0),
      consec_inactive_(length, 0),
      established_(length, false) {
    if (length == 0) {
        throw std::invalid_argument("ActivityTracker: length must be positive");
    }
    if (threshold_constant <= 0.0) {
        throw std::invalid_argument("ActivityTracker: threshold constant must be positive");
    }
}

void ActivityTracker::update(double desired, std::span<const double> regressor,
                             std::span<const double> weights) {
    const std::size_t L = cross_.size();
    if (regressor.size() != L || weights.size() != L) {
        throw std::invalid_argument("ActivityTracker::update: dimension mismatch");
    }
    ++n_;
    desired_sum_ += desired;
    desired_sumsq_ += desired * desired;
    double prediction = 0.0;
    if (mode_ == AdgMode::decoupled) {
        for (std::size_t k = 0; k < L; ++k) {
            prediction += weights[k] * regressor[k];
        }
    }
    for (std::size_t k = 0; k < L; ++k) {
        const double y = regressor[k];
        cross_[k] += desired * y;
        energy_[k] += y * y;
        if (mode_ == AdgMode::decoupled) {
            pred_cross_[k] += prediction * y;
            restore_[k] += weights[k] * y * y;
        }
    }
}

double ActivityTracker::activity_measure(std::size_t k) const {
    if (k >= cross_.size()) {
        throw std::invalid_argument("ActivityTracker: tap index out of range");
    }
    if (energy_[k] <= 0.0) {
        throw undefined_measure_error("activity measure undefined: tap has zero energy");
    }
    const double n = static_cast<double>(n_);
    const double c = cross_[k] / n;
    return c * c / (energy_[k] / n);
}

double ActivityTracker::decoupled_measure(std::size_t k) const {
    if (mode_ != AdgMode::decoupled) {
        throw std::invalid_argument("decoupled_measure: tracker is in plain mode");
    }
    if (k >= cross_.size()) {
        throw std::invalid_argument("ActivityTracker: tap index out of range");
    }
    if (energy_[k] <= 0.0) {
        throw undefined_measure_error("decoupled measure undefined: tap has zero energy");
    }
    const double n = static_cast<double>(n_);
    // Residual correlation: sum (u_i - w.y_i + w_k*y_{i-k}) * y_{i-k}.
    const double c = (cross_[k] - pred_cross_[k] + restore_[k]) / n;
    return c * c / (energy_[k] / n);
}

double ActivityTracker::activity_threshold() const {
    if (n_ < 3) {
        throw not_ready_error("activity_threshold: needs at least 3 samples");
    }
    const double n = static_cast<double>(n_);
    double variance = (desired_sumsq_ - desired_sum_ * desired_sum_ / n) / (n - 1.0);
    if (variance < 0.0) {
        variance = 0.0;  // guard tiny negative from cancellation
    }
    return threshold_constant_ * variance * std::log(n) / n;
}

double ActivityTracker::measure_for_mode(std::size_t k) const {
    return mode_ == AdgMode::decoupled ? decoupled_measure(k) : activity_measure(k);
}

ActivityTracker::Classification ActivityTracker::classify() {
    const double threshold = activity_threshold();  // throws not_ready below N=3
    const std::size_t L = cross_.size();
    Classification result;
    result.mask.assign(L, false);
    for (std::size_t k = 0; k < L; ++k) {
        bool raw = false;
        if (energy_[k] > 0.0) {
            raw = measure_for_mode(k) > threshold;
        }
        if (raw) {
            consec_active_[k] += 1;
            consec_inactive_[k] = 0;
            if (hysteresis_ > 0 && consec_active_[k] >= hysteresis_) {
                established_[k] = true;
            }
            result.mask[k] = true;
        } else {
            consec_inactive_[k] += 1;
            consec_active_[k] = 0;
            if (established_[k] && consec_inactive_[k] == 1) {
                result.mask[k] = true;  // established taps ride out one dip
            } else {
                result.mask[k] = false;
                established_[k] = false;
            }
        }
        if (result.mask[k]) {
            ++result.count;
        }
    }
    active_ = result.mask;
    return result;
}

}  // namespace eqsim
