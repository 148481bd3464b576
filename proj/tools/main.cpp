#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "eqsim/channel.hpp"
#include "eqsim/config.hpp"
#include "eqsim/csv.hpp"
#include "eqsim/harness.hpp"
#include "eqsim/plot.hpp"

namespace fs = std::filesystem;

namespace {

std::string join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

void ensure_dir(const std::string& dir) {
    fs::create_directories(dir);
}

void export_run(const eqsim::RunResult& result, const std::string& out) {
    ensure_dir(out);
    eqsim::write_learning_curve_csv(result, join(out, "learning_curve.csv"));
    eqsim::write_taps_csv(result, join(out, "taps.csv"));
    eqsim::write_active_count_csv(result, join(out, "active_count.csv"));
    eqsim::write_equalizer_output_csv(result, join(out, "equalizer_output.csv"));
    eqsim::plot_learning_curve(result, join(out, "learning_curve.svg"));
    eqsim::plot_taps(result, join(out, "taps.svg"));
    eqsim::plot_active_count(result, join(out, "active_count.svg"));
}

void print_run_summary(const eqsim::ExperimentConfig& cfg,
                       const eqsim::RunResult& result) {
    std::cout << "variant=" << eqsim::variant_name(cfg.variant)
              << " seed=" << cfg.seed
              << " convergence_iter=" << result.convergence_iteration
              << " asymptotic_estimate_error="
              << eqsim::format_double(result.asymptotic_estimate_error)
              << " asymptotic_e2="
              << eqsim::format_double(result.asymptotic_mse)
              << " symbol_errors=" << result.symbol_errors
              << " initial_burst=" << result.initial_burst_errors << '\n';
}

int cmd_run(const std::string& config_path, std::int64_t seed_override,
            const std::string& out) {
    eqsim::ExperimentConfig cfg = eqsim::parse_config_file(config_path);
    if (seed_override >= 0) {
        cfg.seed = static_cast<std::uint64_t>(seed_override);
    }
    const eqsim::RunResult result = eqsim::run_experiment(cfg);
    export_run(result, out);
    print_run_summary(cfg, result);
    std::cout << "wrote learning_curve/taps/active_count/equalizer_output files to "
              << out << '\n';
    return 0;
}

int cmd_compare(const std::string& config_path, const std::string& seeds_text,
                const std::string& out) {
    const eqsim::ExperimentConfig cfg = eqsim::parse_config_file(config_path);
    const std::vector<std::uint64_t> seeds = eqsim::parse_seed_range(seeds_text);
    const eqsim::ComparisonTable table = eqsim::compare_variants(cfg, seeds);
    ensure_dir(out);
    eqsim::write_compare_csv(table, join(out, "compare.csv"));
    eqsim::plot_compare(table, join(out, "compare.svg"));
    for (const auto& s : table.summaries) {
        std::cout << eqsim::variant_name(s.variant)
                  << ": mean_convergence=" << s.mean_convergence
                  << " non_converged=" << s.non_converged
                  << " mean_asymptotic=" << eqsim::format_double(s.mean_asymptotic)
                  << " mean_errors=" << s.mean_errors << '\n';
    }
    std::cout << "wrote compare.csv and compare.svg to " << out << '\n';
    return 0;
}

int cmd_channel(double tau, double spacing, const std::string& out) {
    ensure_dir(out);
    std::vector<std::pair<double, double>> impulse;
    const double t_max = 0.75 * tau;
    for (double t = -t_max; t <= t_max + spacing / 2.0; t += spacing) {
        impulse.emplace_back(t, eqsim::impulse_response(t, tau));
    }
    std::vector<std::pair<double, double>> freq;
    for (double ft = -3.0; ft <= 3.0 + 0.005; ft += 0.01) {
        freq.emplace_back(ft / tau, eqsim::frequency_response(ft / tau, tau));
    }
    eqsim::write_table_csv(join(out, "impulse_response.csv"), "t", "h", impulse);
    eqsim::write_table_csv(join(out, "frequency_response.csv"), "f", "H", freq);
    eqsim::plot_channel_response(tau, join(out, "frequency_response.svg"));
    std::cout << "wrote impulse_response.csv, frequency_response.csv, "
                 "frequency_response.svg to "
              << out << '\n';
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& key,
              const std::string& values_text, const std::string& out) {
    const eqsim::ExperimentConfig base = eqsim::parse_config_file(config_path);
    ensure_dir(out);
    std::vector<std::string> values;
    {
        std::string v;
        for (char ch : values_text) {
            if (ch == ',') {
                values.push_back(v);
                v.clear();
            } else {
                v += ch;
            }
        }
        values.push_back(v);
    }
    const std::string path = join(out, "sweep.csv");
    std::ofstream outf(path, std::ios::binary);
    if (!outf) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    outf << "value,convergence_iter,asymptotic_mse,symbol_errors\n";
    for (const std::string& value : values) {
        eqsim::ExperimentConfig cfg = base;
        eqsim::apply_key_value(cfg, key, value);
        const eqsim::RunResult r = eqsim::run_experiment(cfg);
        outf << value << ',' << r.convergence_iteration << ','
             << eqsim::format_double(r.asymptotic_estimate_error) << ','
             << r.symbol_errors << '\n';
        std::cout << key << '=' << value
                  << " convergence_iter=" << r.convergence_iteration
                  << " asymptotic="
                  << eqsim::format_double(r.asymptotic_estimate_error)
                  << " symbol_errors=" << r.symbol_errors << '\n';
    }
    outf.flush();
    if (!outf) {
        throw std::runtime_error("write failed: " + path);
    }
    std::cout << "wrote sweep.csv to " << out << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adaptive channel equalization simulator: LMS identification "
                 "with activity-detection guidance feeding a fractionally-"
                 "spaced decision-feedback equalizer"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out = ".";
    std::int64_t seed_override = -1;

    auto* run = app.add_subcommand("run", "run one experiment and export its artifacts");
    run->add_option("--config", config_path, "experiment config file")->required();
    run->add_option("--seed", seed_override, "override the config seed");
    run->add_option("--out", out, "output directory");

    std::string seeds_text;
    auto* compare = app.add_subcommand(
        "compare", "run plain/adg/adg_td over a seed range and tabulate");
    compare->add_option("--config", config_path, "experiment config file")->required();
    compare->add_option("--seeds", seeds_text, "seed range a..b")->required();
    compare->add_option("--out", out, "output directory");

    double tau = 2.0;
    double spacing = 0.125;
    auto* channel = app.add_subcommand(
        "channel", "dump impulse/frequency response tables for the pulse model");
    channel->add_option("--tau", tau, "pulse duration in symbol periods");
    channel->add_option("--spacing", spacing, "impulse table sample interval");
    channel->add_option("--out", out, "output directory");

    std::string vary_key;
    std::string vary_values;
    auto* sweep = app.add_subcommand(
        "sweep", "re-run one config while varying a single key");
    sweep->add_option("--config", config_path, "experiment config file")->required();
    sweep->add_option("--vary", vary_key, "config key to vary")->required();
    sweep->add_option("--values", vary_values, "comma-separated values")->required();
    sweep->add_option("--out", out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return cmd_run(config_path, seed_override, out);
        }
        if (compare->parsed()) {
            return cmd_compare(config_path, seeds_text, out);
        }
        if (channel->parsed()) {
            return cmd_channel(tau, spacing, out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(config_path, vary_key, vary_values, out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
