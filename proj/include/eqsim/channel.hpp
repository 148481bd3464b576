#pragma once

#include <cstddef>
#include <vector>

#include "eqsim/signals.hpp"

namespace eqsim {

// Sampled FIR channel.  `spacing` is the sample interval as a fraction of the
// symbol period (0.5 for T/2-spaced taps).  In ground-truth channels a tap
// marked inactive is exactly zero.
struct DiscreteChannel {
    std::vector<double> taps;
    double spacing = 1.0;
    std::vector<bool> active_mask;

    std::size_t size() const { return taps.size(); }
};

// Cosine-squared pulse (2/tau)*cos^2(pi*t/tau) on |t| <= tau/2, zero outside.
// Unit area for every tau.  Throws std::invalid_argument for tau <= 0.
double impulse_response(double t, double tau);

// Baseband response sinc(f*tau) / (1 - f^2*tau^2), evaluated continuously:
// the removable singularities at f = 0 (value 1) and f = +/-1/tau (value 1/2)
// are handled by algebraically factored forms.  Zero at every other integer
// multiple of 1/tau.  Throws std::invalid_argument for tau <= 0.
double frequency_response(double f, double tau);

// Sample the cosine-squared pulse on a symmetric grid with the given spacing,
// covering `span` time units, scaled by `spacing` so the tap sum approximates
// the unit pulse area.  Taps outside the pulse support are exactly zero and
// masked inactive.  Throws std::invalid_argument for nonpositive spacing or
// span < tau.
DiscreteChannel discretize(double tau, double spacing, double span);

// Channel with the given nonzero taps and zeros elsewhere.  Positions must be
// strictly increasing and in range; gains must be nonzero.
DiscreteChannel sparse_channel(const std::vector<std::size_t>& positions,
                               const std::vector<double>& gains,
                               std::size_t length,
                               double spacing = 0.5);

// Linear convolution with zero initial state, truncated to the input length,
// plus additive white Gaussian noise at the channel output.
// Throws std::invalid_argument for empty input.
std::vector<double> transmit(const DiscreteChannel& ch,
                             const std::vector<double>& input,
                             double noise_variance,
                             RandomSource& src);

}  // namespace eqsim
