#include <cstdio>
#include <doctest.h>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqsim/config.hpp"
#include "eqsim/csv.hpp"
#include "eqsim/harness.hpp"

using namespace eqsim;

namespace {

ExperimentConfig identity_config() {
    ExperimentConfig cfg;
    cfg.channel.positions = {0};
    cfg.channel.gains = {1.0};
    cfg.channel.length = 1;
    cfg.noise_variance = 0.0;
    cfg.variant = Variant::plain;
    // zero-stuffed excitation updates the tap on only half the samples
    cfg.training_samples = 4000;
    cfg.data_symbols = 500;
    return cfg;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("moving_average: trailing window with averaged prefix") {
    const std::vector<double> in{4.0, 2.0, 6.0, 0.0};
    const auto out = moving_average(in, 2);
    REQUIRE(out.size() == 4);
    CHECK(out[0] == 4.0);
    CHECK(out[1] == 3.0);
    CHECK(out[2] == 4.0);
    CHECK(out[3] == 3.0);
    CHECK_THROWS_AS(moving_average(in, 0), std::invalid_argument);
    CHECK(moving_average(in, 10) == std::vector<double>{4.0, 3.0, 4.0, 3.0});
}

TEST_CASE("convergence_iterations: first stable crossing") {
    std::vector<double> flat(300, 0.5e-3);
    CHECK(convergence_iterations(flat, 1e-3) == 0);

    // linear descent that first touches the level at index 417
    std::vector<double> curve;
    for (int i = 0; i <= 417; ++i) {
        curve.push_back(2e-3 - (1e-3 * i) / 417.0);
    }
    for (int i = 0; i < 400; ++i) {
        curve.push_back(0.5e-3);
    }
    CHECK(convergence_iterations(curve, 1e-3) == 417);

    std::vector<double> never(1000, 5e-3);
    CHECK(convergence_iterations(never, 1e-3) == kNotConverged);

    CHECK_THROWS_AS(convergence_iterations(curve, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(convergence_iterations(curve, -1.0), std::invalid_argument);
}

TEST_CASE("convergence_iterations: early dip with a later excursion is rejected") {
    // below level from 100 on, but a 3x-level spike at 150 disqualifies every
    // index whose 200-point guard window still contains it
    std::vector<double> curve(800, 5e-3);
    for (int i = 100; i < 800; ++i) {
        curve[i] = 0.9e-3;
    }
    curve[150] = 3e-3;
    CHECK(convergence_iterations(curve, 1e-3) == 151);
}

TEST_CASE("convergence_iterations: guard window is clipped at the end") {
    std::vector<double> curve(100, 5e-3);
    curve[99] = 0.5e-3;
    CHECK(convergence_iterations(curve, 1e-3) == 99);
}

TEST_CASE("asymptotic_mse: tail mean") {
    std::vector<double> flat(50, 0.25);
    CHECK(asymptotic_mse(flat, 0.1) == doctest::Approx(0.25));
    std::vector<double> curve(90, 1.0);
    curve.resize(100, 0.001);
    CHECK(asymptotic_mse(curve, 0.1) == doctest::Approx(0.001));
    CHECK_THROWS_AS(asymptotic_mse({}, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_mse(flat, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_mse(flat, 1.5), std::invalid_argument);
}

TEST_CASE("run_experiment: identity channel, no noise") {
    const auto cfg = identity_config();
    const auto r = run_experiment(cfg);
    CHECK(r.symbol_errors == 0);
    CHECK(r.initial_burst_errors == 0);
    CHECK(r.estimate_error.back() < 1e-6);
    CHECK(r.decisions.size() == cfg.data_symbols);
    CHECK(r.soft.size() == cfg.data_symbols);
    CHECK(r.mse_raw.size() == cfg.training_samples);
    CHECK(r.mse_smooth.size() == cfg.training_samples);
    CHECK(r.estimate_error_smooth.size() == cfg.training_samples);
    CHECK(r.true_channel.taps == std::vector<double>{1.0});
    CHECK(r.convergence_iteration != kNotConverged);
}

TEST_CASE("run_experiment: baseline recovers the sparse support exactly") {
    ExperimentConfig cfg;  // defaults are the baseline scenario
    const auto r = run_experiment(cfg);
    REQUIRE(r.final_estimate.size() == 7);
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < 7; ++k) {
        if (r.final_estimate.taps[k] != 0.0) {
            ++nonzero;
            CHECK(r.final_estimate.active_mask[k]);
        } else {
            CHECK_FALSE(r.final_estimate.active_mask[k]);
        }
    }
    CHECK(nonzero == 2);
    CHECK(r.final_estimate.taps[1] != 0.0);
    CHECK(r.final_estimate.taps[4] != 0.0);
    CHECK(r.active_count.size() == cfg.training_samples / cfg.adg_cadence);
    CHECK(r.active_count.back().second == 2);
    CHECK(r.convergence_iteration != kNotConverged);
    CHECK(r.asymptotic_estimate_error < 5e-3);
    CHECK(r.asymptotic_estimate_error > 0.0);
    // the smoothed prediction error sits at the additive-noise floor
    CHECK(r.asymptotic_mse > 0.08);
    CHECK(r.asymptotic_mse < 0.13);
}

TEST_CASE("run_experiment: deterministic under a fixed seed") {
    ExperimentConfig cfg;
    cfg.seed = 42;
    cfg.training_samples = 1000;
    cfg.data_symbols = 800;
    const auto a = run_experiment(cfg);
    const auto b = run_experiment(cfg);
    CHECK(a.mse_raw == b.mse_raw);
    CHECK(a.estimate_error == b.estimate_error);
    CHECK(a.final_estimate.taps == b.final_estimate.taps);
    CHECK(a.soft == b.soft);
    CHECK(a.decisions.symbols == b.decisions.symbols);
    CHECK(a.symbol_errors == b.symbol_errors);
    CHECK(a.convergence_iteration == b.convergence_iteration);
}

TEST_CASE("run_experiment: seeds decorrelate the runs") {
    ExperimentConfig cfg;
    cfg.training_samples = 600;
    cfg.data_symbols = 200;
    cfg.seed = 1;
    const auto a = run_experiment(cfg);
    cfg.seed = 2;
    const auto b = run_experiment(cfg);
    CHECK(a.mse_raw != b.mse_raw);
}

TEST_CASE("run_experiment: config validation") {
    ExperimentConfig cfg;
    cfg.step_size = -1.0;
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
    cfg = ExperimentConfig{};
    cfg.training_samples = 0;
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
    cfg = ExperimentConfig{};
    cfg.channel.spacing = 0.25;  // inconsistent with oversampling = 2
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
    cfg = ExperimentConfig{};
    cfg.smoothing_window = 0;
    CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
}

TEST_CASE("run_experiment: cosine channel end to end") {
    ExperimentConfig cfg;
    cfg.channel.kind = ChannelSpec::Kind::cosine;
    cfg.channel.tau = 2.0;
    cfg.variant = Variant::plain;
    cfg.training_samples = 2000;
    cfg.data_symbols = 500;
    cfg.noise_variance = 0.01;
    const auto r = run_experiment(cfg);
    CHECK(r.true_channel.size() == 5);  // tau=2 sampled at T/2 over its support
    CHECK(r.decisions.size() == 500);
}

TEST_CASE("compare_variants: structure and shared seeds") {
    ExperimentConfig cfg;
    cfg.training_samples = 1000;
    cfg.data_symbols = 400;
    const auto table = compare_variants(cfg, {7, 9});
    REQUIRE(table.rows.size() == 6);
    REQUIRE(table.summaries.size() == 3);
    CHECK(table.seed_count == 2);
    CHECK(table.summaries[0].variant == Variant::plain);
    CHECK(table.summaries[1].variant == Variant::adg);
    CHECK(table.summaries[2].variant == Variant::adg_td);
    for (const auto& s : table.summaries) {
        CHECK(s.mean_asymptotic > 0.0);
        CHECK(s.mean_convergence >= 0.0);
    }
    // rows grouped by variant, seeds repeated within each group
    CHECK(table.rows[0].seed == 7);
    CHECK(table.rows[1].seed == 9);
    CHECK(table.rows[0].variant == Variant::plain);
    CHECK(table.rows[5].variant == Variant::adg_td);
    REQUIRE(table.mean_curves.size() == 3);
    CHECK(table.mean_curves[0].size() == cfg.training_samples);
    CHECK_THROWS_AS(compare_variants(cfg, {}), std::invalid_argument);
}

TEST_CASE("csv: full-precision round trip") {
    ExperimentConfig cfg;
    cfg.training_samples = 300;
    cfg.data_symbols = 120;
    const auto r = run_experiment(cfg);
    const auto path = temp_path("eqsim_test_learning_curve.csv");
    write_learning_curve_csv(r, path.string());
    const auto rows = read_csv(path.string());
    REQUIRE(rows.size() == 301);
    CHECK(rows[0] == std::vector<std::string>{"iteration", "mse_raw", "mse_smooth", "estimate_error"});
    for (std::size_t i = 0; i < 300; ++i) {
        CHECK(std::stoul(rows[i + 1][0]) == i);
        CHECK(std::stod(rows[i + 1][1]) == r.mse_raw[i]);
        CHECK(std::stod(rows[i + 1][2]) == r.mse_smooth[i]);
        CHECK(std::stod(rows[i + 1][3]) == r.estimate_error[i]);
    }
    std::filesystem::remove(path);
}

TEST_CASE("csv: taps and equalizer output schemas") {
    ExperimentConfig cfg;
    cfg.training_samples = 300;
    cfg.data_symbols = 100;
    const auto r = run_experiment(cfg);

    const auto taps_path = temp_path("eqsim_test_taps.csv");
    write_taps_csv(r, taps_path.string());
    auto rows = read_csv(taps_path.string());
    REQUIRE(rows.size() == 8);
    CHECK(rows[0] == std::vector<std::string>{"index", "true_gain", "estimated_gain", "active_flag"});
    CHECK(std::stod(rows[2][1]) == 1.0);  // tap 1 of the baseline channel
    std::filesystem::remove(taps_path);

    const auto eq_path = temp_path("eqsim_test_eq.csv");
    write_equalizer_output_csv(r, eq_path.string());
    rows = read_csv(eq_path.string());
    REQUIRE(rows.size() == 101);
    CHECK(rows[0] == std::vector<std::string>{"symbol_index", "soft", "decision", "truth", "error_flag"});
    for (std::size_t i = 0; i < 100; ++i) {
        const bool err = r.decisions.symbols[i] != r.truth.symbols[i];
        CHECK(rows[i + 1][4] == (err ? "1" : "0"));
    }
    std::filesystem::remove(eq_path);
}

TEST_CASE("csv: active count is header-only for the plain variant") {
    ExperimentConfig cfg;
    cfg.variant = Variant::plain;
    cfg.training_samples = 300;
    cfg.data_symbols = 100;
    const auto r = run_experiment(cfg);
    CHECK(r.active_count.empty());
    const auto path = temp_path("eqsim_test_active.csv");
    write_active_count_csv(r, path.string());
    const auto rows = read_csv(path.string());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0] == std::vector<std::string>{"iteration", "count"});
    std::filesystem::remove(path);
}

TEST_CASE("csv: compare table") {
    ExperimentConfig cfg;
    cfg.training_samples = 600;
    cfg.data_symbols = 200;
    const auto table = compare_variants(cfg, {3});
    const auto path = temp_path("eqsim_test_compare.csv");
    write_compare_csv(table, path.string());
    const auto rows = read_csv(path.string());
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"variant", "seed", "convergence_iter", "asymptotic_mse", "symbol_errors"});
    CHECK(rows[1][0] == "plain");
    CHECK(rows[2][0] == "adg");
    CHECK(rows[3][0] == "adg_td");
    CHECK(rows[1][1] == "3");
    std::filesystem::remove(path);
}

TEST_CASE("format_double: exact decimal round trip") {
    for (double v : {0.1, 1.0 / 3.0, 2.5e-17, 12345.6789, 0.0}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("config: file parsing matches the shipped baseline") {
    const auto cfg = parse_config_file("configs/baseline_adg_td.cfg");
    CHECK(cfg.variant == Variant::adg_td);
    CHECK(cfg.channel.kind == ChannelSpec::Kind::sparse);
    CHECK(cfg.channel.positions == std::vector<std::size_t>{1, 4});
    CHECK(cfg.channel.gains == std::vector<double>{1.0, 0.5});
    CHECK(cfg.channel.length == 7);
    CHECK(cfg.noise_variance == 0.1);
    CHECK(cfg.step_size == 0.005);
    CHECK(cfg.training_samples == 4000);
    CHECK(cfg.data_symbols == 10000);
    CHECK(cfg.oversampling == 2);
    CHECK(cfg.adg_threshold_constant == 0.35);
    CHECK(cfg.seed == 1);
}

TEST_CASE("config: overrides and validation") {
    ExperimentConfig cfg;
    apply_key_value(cfg, "variant", "plain");
    CHECK(cfg.variant == Variant::plain);
    apply_key_value(cfg, "noise_variance", "0.25");
    CHECK(cfg.noise_variance == 0.25);
    apply_key_value(cfg, "channel_positions", "0,2,5");
    CHECK(cfg.channel.positions == std::vector<std::size_t>{0, 2, 5});
    apply_key_value(cfg, "dfe_n1", "6");
    CHECK(cfg.dfe.n1 == 6);
    CHECK_THROWS_AS(apply_key_value(cfg, "bogus_key", "1"), std::invalid_argument);
    CHECK_THROWS_AS(apply_key_value(cfg, "noise_variance", "abc"), std::invalid_argument);
    CHECK_THROWS_AS(apply_key_value(cfg, "variant", "fancy"), std::invalid_argument);
}

TEST_CASE("config: parse errors carry line context") {
    const auto path = temp_path("eqsim_test_bad.cfg");
    {
        std::ofstream out(path);
        out << "# comment\n";
        out << "noise_variance = 0.1\n";
        out << "this line has no equals\n";
    }
    try {
        parse_config_file(path.string());
        FAIL("expected parse failure");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    std::filesystem::remove(path);
}

TEST_CASE("config: seed ranges") {
    CHECK(parse_seed_range("5") == std::vector<std::uint64_t>{5});
    CHECK(parse_seed_range("3..7") == std::vector<std::uint64_t>{3, 4, 5, 6, 7});
    CHECK(parse_seed_range("9..9") == std::vector<std::uint64_t>{9});
    CHECK_THROWS_AS(parse_seed_range("7..3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_seed_range(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_seed_range("x..y"), std::invalid_argument);
}

TEST_CASE("variant names round trip") {
    for (Variant v : {Variant::plain, Variant::adg, Variant::adg_td}) {
        CHECK(variant_from_name(variant_name(v)) == v);
    }
    CHECK_THROWS_AS(variant_from_name("minimal"), std::invalid_argument);
}
