#include "eqsim/signals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eqsim {

double RandomSource::uniform() {
    // 53-bit mantissa, shifted into (0, 1] so log() below is always finite.
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double RandomSource::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

double RandomSource::symbol() {
    return (engine_() >> 63) ? 1.0 : -1.0;
}

SymbolSequence gen_symbols(std::size_t n, RandomSource& src) {
    SymbolSequence out;
    out.symbols.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.symbols.push_back(src.symbol());
    }
    return out;
}

std::vector<double> gen_awgn(std::size_t n, double variance, RandomSource& src) {
    if (variance < 0.0) {
        throw std::invalid_argument("gen_awgn: negative variance");
    }
    const double sigma = std::sqrt(variance);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(sigma * src.gaussian());
    }
    return out;
}

std::vector<double> upsample(const SymbolSequence& s, std::size_t M) {
    if (M == 0) {
        throw std::invalid_argument("upsample: oversampling factor must be >= 1");
    }
    std::vector<double> out(s.size() * M, 0.0);
    for (std::size_t k = 0; k < s.size(); ++k) {
        out[k * M] = s.symbols[k];
    }
    return out;
}

}  // namespace eqsim
