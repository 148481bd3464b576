#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace eqsim {

enum class AdgMode { plain, decoupled };

// Streaming per-tap activity detector.  Accumulates cross-correlation and
// energy sums between the desired signal and each lagged regressor position;
// in decoupled mode it also accumulates the sums needed to score each tap
// against the residual (desired minus the current estimate's prediction, with
// the scored tap's own contribution restored), which suppresses the leakage of
// other active taps into the statistic.
class ActivityTracker {
public:
    // `hysteresis`: number of consecutive active classifications after which a
    // tap is "established" and survives a single sub-threshold reading; 0
    // disables the mechanism.
    ActivityTracker(std::size_t length, AdgMode mode,
                    double threshold_constant = 2.0,
                    std::size_t hysteresis = 3);

    // Advance all sums by one sample.  In decoupled mode the residual terms
    // use the supplied current weight estimate at this instant.
    void update(double desired, std::span<const double> regressor,
                std::span<const double> weights);

    // Normalized squared cross-correlation for tap k:
    //   ((1/N) sum u_i*y_{i-k})^2 / ((1/N) sum y_{i-k}^2).
    // Throws undefined_measure_error if tap k has zero accumulated energy.
    double activity_measure(std::size_t k) const;

    // Same statistic with the desired signal replaced by the self-restored
    // residual.  Only valid in decoupled mode.
    double decoupled_measure(std::size_t k) const;

    // T_N = c * var(u) * ln(N) / N.  Throws not_ready_error for N < 3.
    double activity_threshold() const;

    struct Classification {
        std::vector<bool> mask;
        std::size_t count = 0;
    };

    // One classification event: compare each tap's measure (plain or
    // decoupled per mode) against the threshold, apply hysteresis, update and
    // return the active set.  Zero-energy taps classify as inactive.
    Classification classify();

    std::size_t sample_count() const { return n_; }
    std::size_t length() const { return cross_.size(); }
    AdgMode mode() const { return mode_; }
    double threshold_constant() const { return threshold_constant_; }
    const std::vector<bool>& active_set() const { return active_; }

private:
    double measure_for_mode(std::size_t k) const;

    AdgMode mode_;
    double threshold_constant_;
    std::size_t hysteresis_;

    std::size_t n_ = 0;
    double desired_sum_ = 0.0;
    double desired_sumsq_ = 0.0;
    std::vector<double> cross_;       // sum u_i * y_{i-k}
    std::vector<double> energy_;      // sum y_{i-k}^2
    std::vector<double> pred_cross_;  // sum (w.y_i) * y_{i-k}
    std::vector<double> restore_;     // sum w_k * y_{i-k}^2

    std::vector<bool> active_;
    std::vector<std::size_t> consec_active_;
    std::vector<std::size_t> consec_inactive_;
    std::vector<bool> established_;
};

}  // namespace eqsim
