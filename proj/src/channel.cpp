#include "eqsim/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eqsim {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(pi*x)/(pi*x) with the x -> 0 limit handled by its Taylor expansion.
double sinc_pi(double x) {
    if (std::abs(x) < 1e-8) {
        const double px = kPi * x;
        return 1.0 - px * px / 6.0;
    }
    return std::sin(kPi * x) / (kPi * x);
}

}  // namespace

double impulse_response(double t, double tau) {
    if (tau <= 0.0) {
        throw std::invalid_argument("impulse_response: tau must be positive");
    }
    if (std::abs(t) > tau / 2.0) {
        return 0.0;
    }
    const double c = std::cos(kPi * t / tau);
    return (2.0 / tau) * c * c;
}

double frequency_response(double f, double tau) {
    if (tau <= 0.0) {
        throw std::invalid_argument("frequency_response: tau must be positive");
    }
    const double x = std::abs(f * tau);  // response is even in f
    if (std::abs(x - 1.0) < 0.5) {
        // Near the pole at x = 1 the sine zero cancels it; the factored form
        // sinc(x-1) / (x*(1+x)) is algebraically identical and stays finite.
        return sinc_pi(x - 1.0) / (x * (1.0 + x));
    }
    return sinc_pi(x) / (1.0 - x * x);
}

DiscreteChannel discretize(double tau, double spacing, double span) {
    if (spacing <= 0.0) {
        throw std::invalid_argument("discretize: spacing must be positive");
    }
    if (tau <= 0.0) {
        throw std::invalid_argument("discretize: tau must be positive");
    }
    if (span < tau) {
        throw std::invalid_argument("discretize: span must cover the pulse (span >= tau)");
    }
    const auto half = static_cast<std::size_t>(std::floor(span / (2.0 * spacing)));
    const std::size_t n = 2 * half + 1;
    DiscreteChannel ch;
    ch.spacing = spacing;
    ch.taps.resize(n);
    ch.active_mask.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = (static_cast<double>(k) - static_cast<double>(half)) * spacing;
        ch.taps[k] = impulse_response(t, tau) * spacing;
        ch.active_mask[k] = std::abs(t) <= tau / 2.0;
    }
    return ch;
}

DiscreteChannel sparse_channel(const std::vector<std::size_t>& positions,
                               const std::vector<double>& gains,
                               std::size_t length,
                               double spacing) {
    if (positions.size() != gains.size()) {
        throw std::invalid_argument("sparse_channel: positions/gains size mismatch");
    }
    if (spacing <= 0.0) {
        throw std::invalid_argument("sparse_channel: spacing must be positive");
    }
    DiscreteChannel ch;
    ch.spacing = spacing;
    ch.taps.assign(length, 0.0);
    ch.active_mask.assign(length, false);
    std::size_t prev = 0;
    bool first = true;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const std::size_t p = positions[i];
        if (p >= length) {
            throw std::invalid_argument("sparse_channel: position out of range");
        }
        if (!first && p <= prev) {
            throw std::invalid_argument("sparse_channel: positions must be strictly increasing");
        }
        if (gains[i] == 0.0) {
            throw std::invalid_argument("sparse_channel: gains must be nonzero");
        }
        ch.taps[p] = gains[i];
        ch.active_mask[p] = true;
        prev = p;
        first = false;
    }
    return ch;
}

std::vector<double> transmit(const DiscreteChannel& ch,
                             const std::vector<double>& input,
                             double noise_variance,
                             RandomSource& src) {
    if (input.empty()) {
        throw std::invalid_argument("transmit: empty input");
    }
    if (ch.taps.empty()) {
        throw std::invalid_argument("transmit: channel has no taps");
    }
    const std::size_t n = input.size();
    const std::size_t L = ch.taps.size();
    std::vector<double> out = gen_awgn(n, noise_variance, src);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        const std::size_t jmax = std::min(L - 1, i);
        for (std::size_t j = 0; j <= jmax; ++j) {
            acc += ch.taps[j] * input[i - j];
        }
        out[i] += acc;
    }
    return out;
}

}  // namespace eqsim
