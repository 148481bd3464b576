#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "eqsim/adg.hpp"
#include "eqsim/channel.hpp"
#include "eqsim/dfe.hpp"
#include "eqsim/lms.hpp"
#include "eqsim/signals.hpp"

namespace eqsim {

enum class Variant { plain, adg, adg_td };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

// Channel under test: either the sparse tapped channel or the sampled
// cosine-squared pulse.
struct ChannelSpec {
    enum class Kind { sparse, cosine };
    Kind kind = Kind::sparse;

    // sparse
    std::vector<std::size_t> positions = {1, 4};
    std::vector<double> gains = {1.0, 0.5};
    std::size_t length = 7;
    double spacing = 0.5;

    // cosine
    double tau = 2.0;
    double span = 0.0;  // 0 = just cover the pulse
};

struct ExperimentConfig {
    Variant variant = Variant::adg_td;
    ChannelSpec channel;
    double noise_variance = 0.1;
    double step_size = 0.005;
    std::size_t training_samples = 4000;  // fractional-rate samples
    std::size_t data_symbols = 10000;
    std::size_t oversampling = 2;
    DfeConfig dfe;  // oversampling field mirrored from the experiment
    double adg_threshold_constant = 0.35;
    std::size_t adg_cadence = 50;
    std::size_t adg_hysteresis = 3;
    std::uint64_t seed = 1;
    std::size_t snapshot_stride = 10;
    std::size_t smoothing_window = 100;
    double tail_fraction = 0.1;
    double convergence_level = 1e-3;
    std::size_t error_skip = 50;

    void validate() const;  // throws std::invalid_argument
};

constexpr std::ptrdiff_t kNotConverged = -1;

struct RunResult {
    // Identification-phase curves, one entry per training sample.
    std::vector<double> mse_raw;            // instantaneous e^2
    std::vector<double> mse_smooth;         // moving-average of e^2
    std::vector<double> estimate_error;     // ||estimate - truth||^2
    std::vector<double> estimate_error_smooth;
    WeightTrajectory trajectory;
    std::vector<std::pair<std::size_t, std::size_t>> active_count;  // (iteration, count)

    DiscreteChannel true_channel;
    DiscreteChannel final_estimate;

    // Data-phase outputs.
    SymbolSequence truth;
    SymbolSequence decisions;
    std::vector<double> soft;
    std::vector<double> squared_difference;  // (truth_k - soft_k)^2
    std::size_t symbol_errors = 0;           // mismatches at >= error_skip
    std::size_t initial_burst_errors = 0;    // mismatches before error_skip

    // Metrics (convergence measured on the smoothed estimate-error curve).
    std::ptrdiff_t convergence_iteration = kNotConverged;
    double asymptotic_estimate_error = 0.0;
    double asymptotic_mse = 0.0;  // tail mean of smoothed e^2
};

RunResult run_experiment(const ExperimentConfig& cfg);

struct CompareRow {
    Variant variant;
    std::uint64_t seed;
    std::ptrdiff_t convergence_iter;
    double asymptotic_mse;  // tail mean of the convergence curve
    std::size_t symbol_errors;
};

struct VariantSummary {
    Variant variant;
    double mean_convergence;  // non-converged runs censored at run length
    std::size_t non_converged;
    double mean_asymptotic;
    double mean_errors;
};

struct ComparisonTable {
    std::vector<CompareRow> rows;
    std::vector<VariantSummary> summaries;          // plain, adg, adg_td
    std::vector<std::vector<double>> mean_curves;   // per-variant mean smoothed curve
    std::size_t seed_count = 0;
};

// Run all three variants over the given seeds (the per-seed channel and noise
// realizations are shared across variants through the common seed).
ComparisonTable compare_variants(const ExperimentConfig& cfg,
                                 const std::vector<std::uint64_t>& seeds);

// Trailing moving average with window `window` (shorter prefix averaged over
// the samples seen so far).
std::vector<double> moving_average(const std::vector<double>& curve,
                                   std::size_t window);

// First index where the curve is <= level and stays <= 2*level for the next
// 200 points; kNotConverged if no such index exists.
std::ptrdiff_t convergence_iterations(const std::vector<double>& curve,
                                      double level);

// Mean of the final tail_fraction of the curve.
double asymptotic_mse(const std::vector<double>& curve,
                      double tail_fraction = 0.1);

}  // namespace eqsim
