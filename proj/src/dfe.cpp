#include "eqsim/dfe.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "eqsim/errors.hpp"

namespace eqsim {

double slicer(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("slicer: non-finite input");
    }
    return x < 0.0 ? -1.0 : 1.0;
}

namespace {

// Channel response at symbol lag s as seen through the feedforward grid:
// row[n+N1] = h[s*M - n] for n in [-N1, N2] (zero outside the estimate).
void fill_lag_row(const std::vector<double>& taps, const DfeConfig& cfg,
                  long s, Eigen::VectorXd& row) {
    const long M = static_cast<long>(cfg.oversampling);
    const long n1 = static_cast<long>(cfg.n1);
    const long n2 = static_cast<long>(cfg.n2);
    const long len = static_cast<long>(taps.size());
    row.setZero();
    for (long n = -n1; n <= n2; ++n) {
        const long j = s * M - n;
        if (j >= 0 && j < len) {
            row[n + n1] = taps[j];
        }
    }
}

}  // namespace

DfeCoefficients design_from_channel(const DiscreteChannel& estimate,
                                    double noise_variance,
                                    const DfeConfig& cfg) {
    if (estimate.taps.empty()) {
        throw std::invalid_argument("design_from_channel: empty channel estimate");
    }
    if (cfg.oversampling == 0) {
        throw std::invalid_argument("design_from_channel: oversampling must be >= 1");
    }
    if (noise_variance < 0.0) {
        throw std::invalid_argument("design_from_channel: negative noise variance");
    }
    const long M = static_cast<long>(cfg.oversampling);
    const long n3 = static_cast<long>(cfg.n3);
    const long len = static_cast<long>(estimate.taps.size());
    const long ncf = static_cast<long>(cfg.feedforward_length());

    // Symbol lags that must be shaped by the feedforward filter alone; lags
    // 1..N3 are left to the feedback filter and excluded from the fit.
    const long smin = -(static_cast<long>(cfg.n1) / M) - 1;
    const long smax = (len - 1 + static_cast<long>(cfg.n2)) / M + 1;

    std::vector<long> lags;
    for (long s = smin; s <= smax; ++s) {
        if (s >= 1 && s <= n3) {
            continue;
        }
        lags.push_back(s);
    }

    Eigen::MatrixXd A(static_cast<long>(lags.size()), ncf);
    Eigen::VectorXd target(static_cast<long>(lags.size()));
    Eigen::VectorXd row(ncf);
    for (std::size_t r = 0; r < lags.size(); ++r) {
        fill_lag_row(estimate.taps, cfg, lags[r], row);
        A.row(static_cast<long>(r)) = row;
        target[static_cast<long>(r)] = lags[r] == 0 ? 1.0 : 0.0;
    }

    Eigen::VectorXd c(ncf);
    if (noise_variance > 0.0) {
        const Eigen::MatrixXd G =
            A.transpose() * A +
            noise_variance * Eigen::MatrixXd::Identity(ncf, ncf);
        c = G.ldlt().solve(A.transpose() * target);
    } else {
        // Zero-forcing: feedforward positions that no retained lag can see
        // leave the normal equations singular, so use the minimum-norm
        // least-squares solution instead.
        c = Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>(A).solve(target);
    }
    if (!c.allFinite()) {
        throw design_failure_error("design_from_channel: singular design system",
                                   estimate.taps);
    }

    // Combined channel * feedforward response at symbol lag 0 must be usable.
    fill_lag_row(estimate.taps, cfg, 0, row);
    const double main_tap = row.dot(c);
    if (std::abs(main_tap) < 1e-3) {
        throw design_failure_error(
            "design_from_channel: degenerate estimate (combined main tap ~ 0)",
            estimate.taps);
    }

    DfeCoefficients out;
    out.config = cfg;
    out.feedforward.assign(c.data(), c.data() + ncf);
    out.feedback.resize(cfg.n3);
    for (long s = 1; s <= n3; ++s) {
        fill_lag_row(estimate.taps, cfg, s, row);
        out.feedback[static_cast<std::size_t>(s - 1)] = -row.dot(c);
    }
    return out;
}

EqualizeResult equalize(const DfeCoefficients& coeffs,
                        const std::vector<double>& received,
                        const SymbolSequence* reference,
                        FeedbackMode mode) {
    const DfeConfig& cfg = coeffs.config;
    const std::size_t M = cfg.oversampling;
    if (received.size() < M * cfg.feedforward_length()) {
        throw std::invalid_argument("equalize: received sequence too short");
    }
    if (mode == FeedbackMode::training && reference == nullptr) {
        throw std::invalid_argument("equalize: training mode requires a reference");
    }
    const std::size_t nsym = received.size() / M;
    if (mode == FeedbackMode::training && reference->size() < nsym) {
        throw std::invalid_argument("equalize: reference shorter than decision count");
    }
    const long n1 = static_cast<long>(cfg.n1);
    const long n2 = static_cast<long>(cfg.n2);
    const long nrecv = static_cast<long>(received.size());

    EqualizeResult result;
    result.soft.reserve(nsym);
    result.decisions.symbols.reserve(nsym);
    for (std::size_t k = 0; k < nsym; ++k) {
        double acc = 0.0;
        for (long n = -n1; n <= n2; ++n) {
            const long idx = static_cast<long>(k * M) - n;
            if (idx >= 0 && idx < nrecv) {
                acc += coeffs.feedforward[static_cast<std::size_t>(n + n1)] *
                       received[static_cast<std::size_t>(idx)];
            }
        }
        for (std::size_t i = 1; i <= cfg.n3; ++i) {
            if (k < i) {
                break;  // zero initial feedback state
            }
            const std::size_t past = k - i;
            const double d = mode == FeedbackMode::training
                                 ? reference->symbols[past]
                                 : result.decisions.symbols[past];
            acc += coeffs.feedback[i - 1] * d;
        }
        result.soft.push_back(acc);
        result.decisions.symbols.push_back(slicer(acc));
    }
    return result;
}

std::size_t symbol_error_count(const SymbolSequence& decisions,
                               const SymbolSequence& truth,
                               std::size_t skip) {
    if (decisions.size() != truth.size()) {
        throw std::invalid_argument("symbol_error_count: length mismatch");
    }
    std::size_t errors = 0;
    for (std::size_t i = skip; i < decisions.size(); ++i) {
        if (decisions.symbols[i] != truth.symbols[i]) {
            ++errors;
        }
    }
    return errors;
}

}  // namespace eqsim
