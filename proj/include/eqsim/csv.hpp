#pragma once

#include <string>
#include <vector>

#include "eqsim/harness.hpp"

namespace eqsim {

// Full-precision decimal form that round-trips the exact double value.
std::string format_double(double v);

// learning_curve.csv: iteration, mse_raw, mse_smooth, estimate_error
void write_learning_curve_csv(const RunResult& result, const std::string& path);
// taps.csv: index, true_gain, estimated_gain, active_flag
void write_taps_csv(const RunResult& result, const std::string& path);
// active_count.csv: iteration, count (header-only for the plain variant)
void write_active_count_csv(const RunResult& result, const std::string& path);
// equalizer_output.csv: symbol_index, soft, decision, truth, error_flag
void write_equalizer_output_csv(const RunResult& result, const std::string& path);
// compare.csv: variant, seed, convergence_iter, asymptotic_mse, symbol_errors
// (convergence_iter is -1 for runs that never converged)
void write_compare_csv(const ComparisonTable& table, const std::string& path);

// Two-column table writer used by the channel response dumps.
void write_table_csv(const std::string& path, const std::string& col_a,
                     const std::string& col_b,
                     const std::vector<std::pair<double, double>>& rows);

// Minimal reader for the files written above (used by round-trip tests).
std::vector<std::vector<std::string>> read_csv(const std::string& path);

}  // namespace eqsim
