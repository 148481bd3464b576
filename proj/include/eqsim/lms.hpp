#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace eqsim {

// Adaptive FIR estimator with stochastic-gradient (LMS) updates and an
// optional active-tap mask.  Weights at masked-off positions are pinned to
// exactly zero: they are zeroed when the mask is applied and skipped by every
// subsequent update.
class LmsFilter {
public:
    // step_size 0 is allowed and means a frozen filter.
    LmsFilter(std::size_t length, double step_size);

    // One update: e = desired - w.y computed with pre-update weights, then
    // w <- w + mu*e*y restricted to unmasked taps.  Returns e.
    double step(std::span<const double> regressor, double desired);

    // Install (or replace) the active mask; newly inactive weights are zeroed
    // immediately.  An all-true mask is equivalent to no mask.
    void set_active_mask(const std::vector<bool>& mask);

    const std::vector<double>& weights() const { return weights_; }
    const std::vector<bool>& active_mask() const { return mask_; }
    bool has_mask() const { return !mask_.empty(); }
    double step_size() const { return step_size_; }
    std::size_t length() const { return weights_.size(); }

private:
    std::vector<double> weights_;
    std::vector<bool> mask_;  // empty = unrestricted
    double step_size_;
};

// Per-run adaptation record: strided weight snapshots plus the squared
// prediction error at every iteration.
struct WeightTrajectory {
    std::vector<std::vector<double>> snapshots;
    std::size_t stride = 1;
    std::vector<double> squared_error;
};

// Drive `filter` over sliding regressor windows of `input` (zero prehistory)
// against `received`.  Sequences must have equal length >= filter length.
WeightTrajectory identify_channel(const std::vector<double>& input,
                                  const std::vector<double>& received,
                                  LmsFilter& filter,
                                  std::size_t snapshot_stride = 10);

}  // namespace eqsim
