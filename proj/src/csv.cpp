#include "eqsim/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eqsim {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // fixed newlines on all platforms
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_learning_curve_csv(const RunResult& result, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "iteration,mse_raw,mse_smooth,estimate_error\n";
    for (std::size_t i = 0; i < result.mse_raw.size(); ++i) {
        out << i << ',' << format_double(result.mse_raw[i]) << ','
            << format_double(result.mse_smooth[i]) << ','
            << format_double(result.estimate_error[i]) << '\n';
    }
    finish(out, path);
}

void write_taps_csv(const RunResult& result, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "index,true_gain,estimated_gain,active_flag\n";
    for (std::size_t i = 0; i < result.final_estimate.size(); ++i) {
        out << i << ',' << format_double(result.true_channel.taps[i]) << ','
            << format_double(result.final_estimate.taps[i]) << ','
            << (result.final_estimate.active_mask[i] ? 1 : 0) << '\n';
    }
    finish(out, path);
}

void write_active_count_csv(const RunResult& result, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "iteration,count\n";
    for (const auto& [iteration, count] : result.active_count) {
        out << iteration << ',' << count << '\n';
    }
    finish(out, path);
}

void write_equalizer_output_csv(const RunResult& result, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "symbol_index,soft,decision,truth,error_flag\n";
    for (std::size_t k = 0; k < result.soft.size(); ++k) {
        const bool err = result.decisions.symbols[k] != result.truth.symbols[k];
        out << k << ',' << format_double(result.soft[k]) << ','
            << format_double(result.decisions.symbols[k]) << ','
            << format_double(result.truth.symbols[k]) << ',' << (err ? 1 : 0)
            << '\n';
    }
    finish(out, path);
}

void write_compare_csv(const ComparisonTable& table, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "variant,seed,convergence_iter,asymptotic_mse,symbol_errors\n";
    for (const CompareRow& row : table.rows) {
        out << variant_name(row.variant) << ',' << row.seed << ','
            << row.convergence_iter << ',' << format_double(row.asymptotic_mse)
            << ',' << row.symbol_errors << '\n';
    }
    finish(out, path);
}

void write_table_csv(const std::string& path, const std::string& col_a,
                     const std::string& col_b,
                     const std::vector<std::pair<double, double>>& rows) {
    std::ofstream out = open_out(path);
    out << col_a << ',' << col_b << '\n';
    for (const auto& [a, b] : rows) {
        out << format_double(a) << ',' << format_double(b) << '\n';
    }
    finish(out, path);
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open for reading: " + path);
    }
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace eqsim
