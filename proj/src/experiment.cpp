#include <cmath>
#include <optional>
#include <stdexcept>

#include "eqsim/harness.hpp"

namespace eqsim {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::plain:
            return "plain";
        case Variant::adg:
            return "adg";
        case Variant::adg_td:
            return "adg_td";
    }
    return "unknown";
}

Variant variant_from_name(const std::string& name) {
    if (name == "plain") return Variant::plain;
    if (name == "adg") return Variant::adg;
    if (name == "adg_td") return Variant::adg_td;
    throw std::invalid_argument("unknown variant: " + name);
}

void ExperimentConfig::validate() const {
    if (training_samples == 0 || data_symbols == 0) {
        throw std::invalid_argument("config: lengths must be positive");
    }
    if (oversampling == 0) {
        throw std::invalid_argument("config: oversampling must be >= 1");
    }
    if (training_samples < oversampling) {
        throw std::invalid_argument("config: training length shorter than one symbol");
    }
    if (noise_variance < 0.0) {
        throw std::invalid_argument("config: negative noise variance");
    }
    if (step_size <= 0.0) {
        throw std::invalid_argument("config: step size must be positive");
    }
    if (adg_threshold_constant <= 0.0) {
        throw std::invalid_argument("config: threshold constant must be positive");
    }
    if (adg_cadence == 0) {
        throw std::invalid_argument("config: classification cadence must be >= 1");
    }
    if (smoothing_window == 0) {
        throw std::invalid_argument("config: smoothing window must be >= 1");
    }
    if (tail_fraction <= 0.0 || tail_fraction > 1.0) {
        throw std::invalid_argument("config: tail fraction must be in (0, 1]");
    }
    if (convergence_level <= 0.0) {
        throw std::invalid_argument("config: convergence level must be positive");
    }
    if (channel.kind == ChannelSpec::Kind::sparse) {
        if (channel.length == 0) {
            throw std::invalid_argument("config: empty channel");
        }
    } else if (channel.tau <= 0.0) {
        throw std::invalid_argument("config: tau must be positive");
    }
}

namespace {

DiscreteChannel build_channel(const ExperimentConfig& cfg) {
    const double spacing = 1.0 / static_cast<double>(cfg.oversampling);
    if (cfg.channel.kind == ChannelSpec::Kind::sparse) {
        if (std::abs(cfg.channel.spacing - spacing) > 1e-12) {
            throw std::invalid_argument(
                "config: channel spacing must equal 1/oversampling");
        }
        return sparse_channel(cfg.channel.positions, cfg.channel.gains,
                              cfg.channel.length, cfg.channel.spacing);
    }
    const double span =
        cfg.channel.span > 0.0 ? cfg.channel.span : cfg.channel.tau;
    return discretize(cfg.channel.tau, spacing, span);
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    RandomSource src(cfg.seed);
    const std::size_t M = cfg.oversampling;

    RunResult result;
    result.true_channel = build_channel(cfg);
    const std::size_t L = result.true_channel.size();

    // ---- identification phase ----
    const std::size_t train_symbols = cfg.training_samples / M;
    const SymbolSequence training = gen_symbols(train_symbols, src);
    const std::vector<double> x = upsample(training, M);
    const std::vector<double> u =
        transmit(result.true_channel, x, cfg.noise_variance, src);

    LmsFilter filter(L, cfg.step_size);
    std::optional<ActivityTracker> tracker;
    if (cfg.variant != Variant::plain) {
        tracker.emplace(L,
                        cfg.variant == Variant::adg_td ? AdgMode::decoupled
                                                       : AdgMode::plain,
                        cfg.adg_threshold_constant, cfg.adg_hysteresis);
    }

    const std::size_t n = x.size();
    result.mse_raw.reserve(n);
    result.estimate_error.reserve(n);
    result.trajectory.stride = cfg.snapshot_stride == 0 ? 1 : cfg.snapshot_stride;

    std::vector<double> regressor(L, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = L - 1; k > 0; --k) {
            regressor[k] = regressor[k - 1];
        }
        regressor[0] = x[i];

        const double e = filter.step(regressor, u[i]);
        result.mse_raw.push_back(e * e);
        result.trajectory.squared_error.push_back(e * e);

        if (tracker) {
            tracker->update(u[i], regressor, filter.weights());
            if ((i + 1) % cfg.adg_cadence == 0 && tracker->sample_count() >= 3) {
                const auto cls = tracker->classify();
                filter.set_active_mask(cls.mask);
                result.active_count.emplace_back(i, cls.count);
            }
        }

        double err = 0.0;
        for (std::size_t k = 0; k < L; ++k) {
            const double d = filter.weights()[k] - result.true_channel.taps[k];
            err += d * d;
        }
        result.estimate_error.push_back(err);

        if (i % result.trajectory.stride == 0) {
            result.trajectory.snapshots.push_back(filter.weights());
        }
    }

    result.mse_smooth = moving_average(result.mse_raw, cfg.smoothing_window);
    result.estimate_error_smooth =
        moving_average(result.estimate_error, cfg.smoothing_window);
    result.convergence_iteration =
        convergence_iterations(result.estimate_error_smooth, cfg.convergence_level);
    result.asymptotic_estimate_error =
        asymptotic_mse(result.estimate_error_smooth, cfg.tail_fraction);
    result.asymptotic_mse = asymptotic_mse(result.mse_smooth, cfg.tail_fraction);

    result.final_estimate.taps = filter.weights();
    result.final_estimate.spacing = result.true_channel.spacing;
    result.final_estimate.active_mask =
        tracker ? tracker->active_set() : std::vector<bool>(L, true);

    // ---- data phase ----
    result.truth = gen_symbols(cfg.data_symbols, src);
    const std::vector<double> xd = upsample(result.truth, M);
    const std::vector<double> received =
        transmit(result.true_channel, xd, cfg.noise_variance, src);

    DfeConfig dfe_cfg = cfg.dfe;
    dfe_cfg.oversampling = M;
    const DfeCoefficients coeffs =
        design_from_channel(result.final_estimate, cfg.noise_variance, dfe_cfg);
    EqualizeResult eq =
        equalize(coeffs, received, nullptr, FeedbackMode::decision_directed);

    result.decisions = std::move(eq.decisions);
    result.soft = std::move(eq.soft);
    result.squared_difference.reserve(result.soft.size());
    for (std::size_t k = 0; k < result.soft.size(); ++k) {
        const double d = result.truth.symbols[k] - result.soft[k];
        result.squared_difference.push_back(d * d);
    }
    result.symbol_errors =
        symbol_error_count(result.decisions, result.truth, cfg.error_skip);
    result.initial_burst_errors =
        symbol_error_count(result.decisions, result.truth, 0) - result.symbol_errors;
    return result;
}

ComparisonTable compare_variants(const ExperimentConfig& cfg,
                                 const std::vector<std::uint64_t>& seeds) {
    if (seeds.empty()) {
        throw std::invalid_argument("compare_variants: need at least one seed");
    }
    const Variant variants[] = {Variant::plain, Variant::adg, Variant::adg_td};
    ComparisonTable table;
    table.seed_count = seeds.size();
    table.mean_curves.assign(3, {});

    for (std::size_t vi = 0; vi < 3; ++vi) {
        double conv_acc = 0.0;
        double asym_acc = 0.0;
        double err_acc = 0.0;
        std::size_t non_converged = 0;
        for (const std::uint64_t seed : seeds) {
            ExperimentConfig run_cfg = cfg;
            run_cfg.variant = variants[vi];
            run_cfg.seed = seed;
            const RunResult r = run_experiment(run_cfg);

            CompareRow row;
            row.variant = variants[vi];
            row.seed = seed;
            row.convergence_iter = r.convergence_iteration;
            row.asymptotic_mse = r.asymptotic_estimate_error;
            row.symbol_errors = r.symbol_errors;
            table.rows.push_back(row);

            conv_acc += r.convergence_iteration == kNotConverged
                            ? static_cast<double>(r.estimate_error_smooth.size())
                            : static_cast<double>(r.convergence_iteration);
            if (r.convergence_iteration == kNotConverged) {
                ++non_converged;
            }
            asym_acc += r.asymptotic_estimate_error;
            err_acc += static_cast<double>(r.symbol_errors);

            auto& mean_curve = table.mean_curves[vi];
            if (mean_curve.empty()) {
                mean_curve.assign(r.estimate_error_smooth.size(), 0.0);
            }
            for (std::size_t i = 0; i < mean_curve.size(); ++i) {
                mean_curve[i] += r.estimate_error_smooth[i];
            }
        }
        const double ns = static_cast<double>(seeds.size());
        for (double& v : table.mean_curves[vi]) {
            v /= ns;
        }
        table.summaries.push_back(VariantSummary{variants[vi], conv_acc / ns,
                                                 non_converged, asym_acc / ns,
                                                 err_acc / ns});
    }
    return table;
}

}  // namespace eqsim
