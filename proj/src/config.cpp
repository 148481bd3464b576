#include "eqsim/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eqsim {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return "";
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) {
        parts.push_back(trim(part));
    }
    return parts;
}

double to_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) {
            throw std::invalid_argument("");
        }
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for " + key +
                                    ": '" + value + "'");
    }
}

std::uint64_t to_count(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size()) {
            throw std::invalid_argument("");
        }
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad integer value for " + key +
                                    ": '" + value + "'");
    }
}

}  // namespace

void apply_key_value(ExperimentConfig& cfg, const std::string& key,
                     const std::string& value) {
    if (key == "variant") {
        cfg.variant = variant_from_name(value);
    } else if (key == "channel") {
        if (value == "sparse") {
            cfg.channel.kind = ChannelSpec::Kind::sparse;
        } else if (value == "cosine") {
            cfg.channel.kind = ChannelSpec::Kind::cosine;
        } else {
            throw std::invalid_argument("config: unknown channel kind: " + value);
        }
    } else if (key == "channel_positions") {
        cfg.channel.positions.clear();
        for (const auto& p : split(value, ',')) {
            cfg.channel.positions.push_back(to_count(key, p));
        }
    } else if (key == "channel_gains") {
        cfg.channel.gains.clear();
        for (const auto& g : split(value, ',')) {
            cfg.channel.gains.push_back(to_double(key, g));
        }
    } else if (key == "channel_length") {
        cfg.channel.length = to_count(key, value);
    } else if (key == "channel_spacing") {
        cfg.channel.spacing = to_double(key, value);
    } else if (key == "channel_tau") {
        cfg.channel.tau = to_double(key, value);
    } else if (key == "channel_span") {
        cfg.channel.span = to_double(key, value);
    } else if (key == "noise_variance") {
        cfg.noise_variance = to_double(key, value);
    } else if (key == "step_size") {
        cfg.step_size = to_double(key, value);
    } else if (key == "training_samples") {
        cfg.training_samples = to_count(key, value);
    } else if (key == "data_symbols") {
        cfg.data_symbols = to_count(key, value);
    } else if (key == "oversampling") {
        cfg.oversampling = to_count(key, value);
    } else if (key == "dfe_n1") {
        cfg.dfe.n1 = to_count(key, value);
    } else if (key == "dfe_n2") {
        cfg.dfe.n2 = to_count(key, value);
    } else if (key == "dfe_n3") {
        cfg.dfe.n3 = to_count(key, value);
    } else if (key == "adg_threshold_constant") {
        cfg.adg_threshold_constant = to_double(key, value);
    } else if (key == "adg_cadence") {
        cfg.adg_cadence = to_count(key, value);
    } else if (key == "adg_hysteresis") {
        cfg.adg_hysteresis = to_count(key, value);
    } else if (key == "seed") {
        cfg.seed = to_count(key, value);
    } else if (key == "snapshot_stride") {
        cfg.snapshot_stride = to_count(key, value);
    } else if (key == "smoothing_window") {
        cfg.smoothing_window = to_count(key, value);
    } else if (key == "tail_fraction") {
        cfg.tail_fraction = to_double(key, value);
    } else if (key == "convergence_level") {
        cfg.convergence_level = to_double(key, value);
    } else if (key == "error_skip") {
        cfg.error_skip = to_count(key, value);
    } else {
        throw std::invalid_argument("config: unknown key: " + key);
    }
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    ExperimentConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " is not key=value: '" + line + "'");
        }
        apply_key_value(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
    const auto dots = text.find("..");
    std::vector<std::uint64_t> seeds;
    if (dots == std::string::npos) {
        seeds.push_back(to_count("seeds", trim(text)));
        return seeds;
    }
    const std::uint64_t a = to_count("seeds", trim(text.substr(0, dots)));
    const std::uint64_t b = to_count("seeds", trim(text.substr(dots + 2)));
    if (b < a) {
        throw std::invalid_argument("seed range: end before start: " + text);
    }
    for (std::uint64_t s = a; s <= b; ++s) {
        seeds.push_back(s);
    }
    return seeds;
}

}  // namespace eqsim
