#include "eqsim/lms.hpp"

#include <stdexcept>

namespace eqsim {

LmsFilter::LmsFilter(std::size_t length, double step_size)
    : weights_(length, 0.0), step_size_(step_size) {
    if (length == 0) {
        throw std::invalid_argument("LmsFilter: length must be positive");
    }
    if (step_size < 0.0) {
        throw std::invalid_argument("LmsFilter: step size must be >= 0");
    }
}

double LmsFilter::step(std::span<const double> regressor, double desired) {
    if (regressor.size() != weights_.size()) {
        throw std::invalid_argument("LmsFilter::step: regressor length mismatch");
    }
    double prediction = 0.0;
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        prediction += weights_[k] * regressor[k];
    }
    const double error = desired - prediction;
    const double g = step_size_ * error;
    if (mask_.empty()) {
        for (std::size_t k = 0; k < weights_.size(); ++k) {
            weights_[k] += g * regressor[k];
        }
    } else {
        for (std::size_t k = 0; k < weights_.size(); ++k) {
            if (mask_[k]) {
                weights_[k] += g * regressor[k];
            }
        }
    }
    return error;
}

void LmsFilter::set_active_mask(const std::vector<bool>& mask) {
    if (mask.size() != weights_.size()) {
        throw std::invalid_argument("LmsFilter::set_active_mask: mask length mismatch");
    }
    mask_ = mask;
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        if (!mask_[k]) {
            weights_[k] = 0.0;
        }
    }
}

WeightTrajectory identify_channel(const std::vector<double>& input,
                                  const std::vector<double>& received,
                                  LmsFilter& filter,
                                  std::size_t snapshot_stride) {
    if (input.size() != received.size()) {
        throw std::invalid_argument("identify_channel: input/received length mismatch");
    }
    const std::size_t L = filter.length();
    if (L > input.size()) {
        throw std::invalid_argument("identify_channel: filter longer than data");
    }
    if (snapshot_stride == 0) {
        snapshot_stride = 1;
    }
    WeightTrajectory traj;
    traj.stride = snapshot_stride;
    traj.squared_error.reserve(input.size());
    std::vector<double> regressor(L, 0.0);
    for (std::size_t i = 0; i < input.size(); ++i) {
        // Slide: regressor[k] = input[i-k], zero before the first sample.
        for (std::size_t k = L - 1; k > 0; --k) {
            regressor[k] = regressor[k - 1];
        }
        regressor[0] = input[i];
        const double e = filter.step(regressor, received[i]);
        traj.squared_error.push_back(e * e);
        if (i % snapshot_stride == 0) {
            traj.snapshots.push_back(filter.weights());
        }
    }
    return traj;
}

}  // namespace eqsim
