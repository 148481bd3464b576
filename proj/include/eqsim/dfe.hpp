#pragma once

#include <cstddef>
#include <vector>

#include "eqsim/channel.hpp"
#include "eqsim/signals.hpp"

namespace eqsim {

// Fractionally-spaced DFE geometry: N1+N2+1 feedforward taps at spacing T/M
// (N1 anticausal, N2 causal) and N3 symbol-spaced feedback taps.
struct DfeConfig {
    std::size_t n1 = 5;
    std::size_t n2 = 3;
    std::size_t n3 = 4;
    std::size_t oversampling = 2;  // M, samples per symbol

    std::size_t feedforward_length() const { return n1 + n2 + 1; }
};

struct DfeCoefficients {
    std::vector<double> feedforward;  // index n+N1 holds c_n, n in [-N1, N2]
    std::vector<double> feedback;     // feedback[i-1] holds F_i, i in [1, N3]
    DfeConfig config;
};

// Two-level decision device: sign onto {-1, +1}, ties to +1.
// Throws std::invalid_argument on non-finite input.
double slicer(double x);

// Derive equalizer coefficients from a channel estimate: the feedforward
// filter solves a ridge-regularized least-squares fit of the channel's
// symbol-rate response to a unit pulse (ridge weight = noise_variance;
// zero variance selects the minimum-norm zero-forcing solution), with the
// symbol lags covered by feedback excluded from the fit; the feedback taps
// are then the negated post-cursors of the combined channel*feedforward
// response, so the additive feedback sum cancels trailing intersymbol
// interference.  Throws design_failure_error when the estimate cannot
// produce a usable main tap.
DfeCoefficients design_from_channel(const DiscreteChannel& estimate,
                                    double noise_variance,
                                    const DfeConfig& cfg);

enum class FeedbackMode { training, decision_directed };

struct EqualizeResult {
    SymbolSequence decisions;
    std::vector<double> soft;
};

// Run the equalizer over fractional-rate received samples:
//   soft_k = sum_{n=-N1..N2} c_n * y[k*M - n] + sum_{i=1..N3} F_i * d_{k-i}
// where d_{k-i} are reference symbols (training) or prior decisions
// (decision-directed); out-of-range sample and decision indices contribute
// zero.  One decision per M received samples.
EqualizeResult equalize(const DfeCoefficients& coeffs,
                        const std::vector<double>& received,
                        const SymbolSequence* reference,
                        FeedbackMode mode);

// Mismatch count between decisions and truth at indices >= skip.
std::size_t symbol_error_count(const SymbolSequence& decisions,
                               const SymbolSequence& truth,
                               std::size_t skip);

}  // namespace eqsim
