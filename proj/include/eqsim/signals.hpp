#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace eqsim {

// Deterministic random stream.  The generator is std::mt19937_64 (a fixed,
// portable algorithm); Gaussian deviates come from the Box-Muller transform of
// two uniform draws, so the full stream is reproducible bit-for-bit from the
// seed on any conforming platform.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    // Uniform on (0, 1]; consumes exactly one generator word.
    double uniform();
    // Standard normal deviate (Box-Muller, second deviate cached).
    double gaussian();
    // Equiprobable -1.0 / +1.0; consumes exactly one generator word.
    double symbol();

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Antipodal symbol sequence with unit symbol period.
struct SymbolSequence {
    std::vector<double> symbols;  // every element exactly -1.0 or +1.0

    std::size_t size() const { return symbols.size(); }
    double operator[](std::size_t i) const { return symbols[i]; }
};

// n independent equiprobable +/-1 symbols.
SymbolSequence gen_symbols(std::size_t n, RandomSource& src);

// n i.i.d. zero-mean Gaussian samples with the given variance.
// Throws std::invalid_argument for negative variance.
std::vector<double> gen_awgn(std::size_t n, double variance, RandomSource& src);

// Zero-stuffing rate conversion: output[k*M] = s[k], all other positions 0.
// Throws std::invalid_argument for M == 0.
std::vector<double> upsample(const SymbolSequence& s, std::size_t M);

}  // namespace eqsim
