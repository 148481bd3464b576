#include "eqsim/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eqsim {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 420.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 24.0;
constexpr double kMarginBottom = 46.0;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

struct Series {
    std::vector<double> x;
    std::vector<double> y;
    std::string label;
};

struct Frame {
    double xmin, xmax, ymin, ymax;

    double px(double x) const {
        return kMarginLeft +
               (x - xmin) / (xmax - xmin) * (kWidth - kMarginLeft - kMarginRight);
    }
    double py(double y) const {
        return kHeight - kMarginBottom -
               (y - ymin) / (ymax - ymin) * (kHeight - kMarginTop - kMarginBottom);
    }
};

std::string num(double v) {
    std::ostringstream ss;
    ss << v;
    return ss.str();
}

// Tick spacing of 1, 2 or 5 times a power of ten, covering span/target.
double nice_step(double span, int target) {
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0}) {
        if (m * mag >= raw) {
            return m * mag;
        }
    }
    return 10.0 * mag;
}

void open_svg(std::ofstream& out, const std::string& path) {
    out.open(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
        << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void close_svg(std::ofstream& out, const std::string& path) {
    out << "</svg>\n";
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

void draw_axes(std::ofstream& out, const Frame& f, const std::string& xlabel,
               const std::string& ylabel, bool log_y) {
    out << "<g stroke=\"#444\" stroke-width=\"1\" fill=\"none\">\n"
        << "<path d=\"M" << f.px(f.xmin) << ' ' << f.py(f.ymax) << " L"
        << f.px(f.xmin) << ' ' << f.py(f.ymin) << " L" << f.px(f.xmax) << ' '
        << f.py(f.ymin) << "\"/>\n</g>\n";
    // x ticks at round values
    const double xstep = nice_step(f.xmax - f.xmin, 5);
    for (double x = std::ceil(f.xmin / xstep) * xstep; x <= f.xmax + 1e-9 * xstep; x += xstep) {
        const double xv = std::abs(x) < 1e-9 * xstep ? 0.0 : x;
        out << "<line x1=\"" << f.px(xv) << "\" y1=\"" << f.py(f.ymin)
            << "\" x2=\"" << f.px(xv) << "\" y2=\"" << f.py(f.ymin) + 5
            << "\" stroke=\"#444\"/>\n"
            << "<text x=\"" << f.px(xv) << "\" y=\"" << f.py(f.ymin) + 18
            << "\" font-size=\"11\" text-anchor=\"middle\">" << num(xv)
            << "</text>\n";
    }
    // y ticks: one per decade in log mode, round values otherwise
    std::vector<double> yvals;
    if (log_y) {
        for (double y = f.ymin; y <= f.ymax + 1e-9; y += 1.0) {
            yvals.push_back(y);
        }
    } else {
        const double ystep = nice_step(f.ymax - f.ymin, 5);
        for (double y = std::ceil(f.ymin / ystep) * ystep; y <= f.ymax + 1e-9 * ystep; y += ystep) {
            yvals.push_back(y);
        }
    }
    for (double yt : yvals) {
        const double y = !log_y && std::abs(yt) < 1e-12 ? 0.0 : yt;
        const std::string label = log_y ? "1e" + num(y) : num(y);
        out << "<line x1=\"" << f.px(f.xmin) - 5 << "\" y1=\"" << f.py(y)
            << "\" x2=\"" << f.px(f.xmin) << "\" y2=\"" << f.py(y)
            << "\" stroke=\"#444\"/>\n"
            << "<text x=\"" << f.px(f.xmin) - 8 << "\" y=\"" << f.py(y) + 4
            << "\" font-size=\"11\" text-anchor=\"end\">" << label
            << "</text>\n";
    }
    out << "<text x=\"" << (kMarginLeft + kWidth - kMarginRight) / 2 << "\" y=\""
        << kHeight - 8 << "\" font-size=\"12\" text-anchor=\"middle\">" << xlabel
        << "</text>\n"
        << "<text x=\"14\" y=\"" << (kMarginTop + kHeight - kMarginBottom) / 2
        << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
        << (kMarginTop + kHeight - kMarginBottom) / 2 << ")\">" << ylabel
        << "</text>\n";
}

void draw_series(std::ofstream& out, const Frame& f,
                 const std::vector<Series>& series, bool log_y) {
    for (std::size_t s = 0; s < series.size(); ++s) {
        out << "<polyline fill=\"none\" stroke=\"" << kColors[s % 4]
            << "\" stroke-width=\"1.3\" points=\"";
        const auto& sr = series[s];
        for (std::size_t i = 0; i < sr.x.size(); ++i) {
            const double y = log_y ? std::log10(std::max(sr.y[i], 1e-12)) : sr.y[i];
            out << f.px(sr.x[i]) << ',' << f.py(y) << ' ';
        }
        out << "\"/>\n";
        if (!sr.label.empty()) {
            out << "<text x=\"" << kWidth - kMarginRight - 8 << "\" y=\""
                << kMarginTop + 14 * static_cast<double>(s + 1)
                << "\" font-size=\"12\" text-anchor=\"end\" fill=\""
                << kColors[s % 4] << "\">" << sr.label << "</text>\n";
        }
    }
}

void line_chart(const std::string& path, const std::vector<Series>& series,
                const std::string& xlabel, const std::string& ylabel,
                bool log_y) {
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    bool first = true;
    for (const auto& sr : series) {
        for (std::size_t i = 0; i < sr.x.size(); ++i) {
            const double y = log_y ? std::log10(std::max(sr.y[i], 1e-12)) : sr.y[i];
            if (first) {
                xmin = xmax = sr.x[i];
                ymin = ymax = y;
                first = false;
            } else {
                xmin = std::min(xmin, sr.x[i]);
                xmax = std::max(xmax, sr.x[i]);
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        }
    }
    if (xmax == xmin) {
        xmax = xmin + 1.0;
    }
    if (ymax == ymin) {
        ymax = ymin + 1.0;
    }
    if (log_y) {
        ymin = std::floor(ymin);
        ymax = std::ceil(ymax);
    }
    Frame f{xmin, xmax, ymin, ymax};
    std::ofstream out;
    open_svg(out, path);
    draw_axes(out, f, xlabel, ylabel, log_y);
    draw_series(out, f, series, log_y);
    close_svg(out, path);
}

}  // namespace

void plot_learning_curve(const RunResult& result, const std::string& path) {
    Series mse, est;
    mse.label = "smoothed e^2";
    est.label = "estimate error";
    for (std::size_t i = 0; i < result.mse_smooth.size(); ++i) {
        mse.x.push_back(static_cast<double>(i));
        mse.y.push_back(result.mse_smooth[i]);
        est.x.push_back(static_cast<double>(i));
        est.y.push_back(result.estimate_error_smooth[i]);
    }
    line_chart(path, {mse, est}, "iteration", "log10 MSE", true);
}

void plot_taps(const RunResult& result, const std::string& path) {
    const std::size_t L = result.final_estimate.size();
    double ymax = 0.0;
    double ymin = 0.0;
    for (std::size_t i = 0; i < L; ++i) {
        ymax = std::max({ymax, result.true_channel.taps[i],
                         result.final_estimate.taps[i]});
        ymin = std::min({ymin, result.true_channel.taps[i],
                         result.final_estimate.taps[i]});
    }
    Frame f{-0.5, static_cast<double>(L) - 0.5, ymin - 0.05, ymax + 0.05};
    std::ofstream out;
    open_svg(out, path);
    draw_axes(out, f, "tap index", "gain", false);
    for (std::size_t i = 0; i < L; ++i) {
        const double x = static_cast<double>(i);
        out << "<line x1=\"" << f.px(x) - 3 << "\" y1=\"" << f.py(0.0)
            << "\" x2=\"" << f.px(x) - 3 << "\" y2=\""
            << f.py(result.true_channel.taps[i])
            << "\" stroke=\"#1f77b4\" stroke-width=\"3\"/>\n";
        out << "<line x1=\"" << f.px(x) + 3 << "\" y1=\"" << f.py(0.0)
            << "\" x2=\"" << f.px(x) + 3 << "\" y2=\""
            << f.py(result.final_estimate.taps[i])
            << "\" stroke=\"#d62728\" stroke-width=\"3\"/>\n";
    }
    out << "<text x=\"" << kWidth - kMarginRight - 8 << "\" y=\""
        << kMarginTop + 14 << "\" font-size=\"12\" text-anchor=\"end\" "
        << "fill=\"#1f77b4\">true</text>\n"
        << "<text x=\"" << kWidth - kMarginRight - 8 << "\" y=\""
        << kMarginTop + 28 << "\" font-size=\"12\" text-anchor=\"end\" "
        << "fill=\"#d62728\">estimated</text>\n";
    close_svg(out, path);
}

void plot_active_count(const RunResult& result, const std::string& path) {
    Series steps;
    steps.label = "active taps";
    double prev = 0.0;
    bool have_prev = false;
    for (const auto& [iteration, count] : result.active_count) {
        // step chart: hold the previous level until this classification
        if (have_prev) {
            steps.x.push_back(static_cast<double>(iteration));
            steps.y.push_back(prev);
        }
        steps.x.push_back(static_cast<double>(iteration));
        steps.y.push_back(static_cast<double>(count));
        prev = static_cast<double>(count);
        have_prev = true;
    }
    if (steps.x.empty()) {
        steps.x = {0.0};
        steps.y = {0.0};
    }
    line_chart(path, {steps}, "iteration", "count", false);
}

void plot_compare(const ComparisonTable& table, const std::string& path) {
    std::vector<Series> series;
    for (std::size_t vi = 0; vi < table.mean_curves.size(); ++vi) {
        Series sr;
        sr.label = variant_name(table.summaries[vi].variant);
        for (std::size_t i = 0; i < table.mean_curves[vi].size(); ++i) {
            sr.x.push_back(static_cast<double>(i));
            sr.y.push_back(table.mean_curves[vi][i]);
        }
        series.push_back(std::move(sr));
    }
    line_chart(path, series, "iteration", "log10 mean estimate error", true);
}

void plot_channel_response(double tau, const std::string& path) {
    Series H;
    H.label = "H(f)";
    for (double ft = -3.0; ft <= 3.0; ft += 0.01) {
        H.x.push_back(ft);
        H.y.push_back(frequency_response(ft / tau, tau));
    }
    line_chart(path, {H}, "f * tau", "amplitude", false);
}

}  // namespace eqsim
