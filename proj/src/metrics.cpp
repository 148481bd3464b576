#include <algorithm>
#include <stdexcept>

#include "eqsim/harness.hpp"

namespace eqsim {

std::vector<double> moving_average(const std::vector<double>& curve,
                                   std::size_t window) {
    if (window == 0) {
        throw std::invalid_argument("moving_average: window must be >= 1");
    }
    std::vector<double> out(curve.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        acc += curve[i];
        if (i >= window) {
            acc -= curve[i - window];
        }
        out[i] = acc / static_cast<double>(std::min(i + 1, window));
    }
    return out;
}

std::ptrdiff_t convergence_iterations(const std::vector<double>& curve,
                                      double level) {
    if (level <= 0.0) {
        throw std::invalid_argument("convergence_iterations: level must be positive");
    }
    const std::size_t n = curve.size();
    const std::size_t guard = 200;
    for (std::size_t i = 0; i < n; ++i) {
        if (curve[i] > level) {
            continue;
        }
        const std::size_t end = std::min(n, i + guard + 1);
        bool held = true;
        for (std::size_t j = i; j < end; ++j) {
            if (curve[j] > 2.0 * level) {
                held = false;
                break;
            }
        }
        if (held) {
            return static_cast<std::ptrdiff_t>(i);
        }
    }
    return kNotConverged;
}

double asymptotic_mse(const std::vector<double>& curve, double tail_fraction) {
    if (curve.empty()) {
        throw std::invalid_argument("asymptotic_mse: empty curve");
    }
    if (tail_fraction <= 0.0 || tail_fraction > 1.0) {
        throw std::invalid_argument("asymptotic_mse: tail fraction must be in (0, 1]");
    }
    const std::size_t n = curve.size();
    const std::size_t tail = std::max<std::size_t>(
        1, static_cast<std::size_t>(static_cast<double>(n) * tail_fraction));
    double acc = 0.0;
    for (std::size_t i = n - tail; i < n; ++i) {
        acc += curve[i];
    }
    return acc / static_cast<double>(tail);
}

}  // namespace eqsim
