#pragma once

#include <string>

#include "eqsim/harness.hpp"

namespace eqsim {

// Standalone SVG renderings of the run artifacts: smoothed learning curves on
// a log MSE axis, a stem chart of true vs estimated taps, and a step chart of
// the detected active-tap count.
void plot_learning_curve(const RunResult& result, const std::string& path);
void plot_taps(const RunResult& result, const std::string& path);
void plot_active_count(const RunResult& result, const std::string& path);

// Overlay of the per-variant mean learning curves from a comparison.
void plot_compare(const ComparisonTable& table, const std::string& path);

// Frequency response line chart for the analytic channel model.
void plot_channel_response(double tau, const std::string& path);

}  // namespace eqsim
