#include "vodsim/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "vodsim/util.hpp"

namespace vodsim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, int line) {
    double out;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw ConfigError("line " + std::to_string(line) + ": expected a number, got '" + v +
                          "'");
    return out;
}

long to_long(const std::string& v, int line) {
    long out;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw ConfigError("line " + std::to_string(line) + ": expected an integer, got '" + v +
                          "'");
    return out;
}

}  // namespace

Scenario scenario_from_config_text(const std::string& text, const Scenario& defaults) {
    Scenario s = defaults;
    long sections = -1, ports = -1, clusters = -1;
    double min_rate = s.ladder.min_rate, max_rate = s.ladder.max_rate;
    bool ladder_touched = false, caps_touched = false;
    std::vector<int> explicit_caps;
    std::string matrix_file;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string stripped = raw.substr(0, raw.find('#'));
        stripped = trim(stripped);
        if (stripped.empty()) continue;
        std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'");
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line) + ": empty key or value");

        if (key == "sections") { sections = to_long(value, line); caps_touched = true; }
        else if (key == "ports_per_section") { ports = to_long(value, line); caps_touched = true; }
        else if (key == "capacities") {
            for (double c : parse_double_list(value)) explicit_caps.push_back(static_cast<int>(c));
            caps_touched = true;
        }
        else if (key == "clusters") { clusters = to_long(value, line); ladder_touched = true; }
        else if (key == "min_rate") { min_rate = to_double(value, line); ladder_touched = true; }
        else if (key == "max_rate") { max_rate = to_double(value, line); ladder_touched = true; }
        else if (key == "playback_rate") s.mapping.playback_rate = to_double(value, line);
        else if (key == "traffic_scale") s.mapping.scale = to_double(value, line);
        else if (key == "rate_scale") s.rate_scale = to_double(value, line);
        else if (key == "population_multiplier")
            s.population_multiplier = to_double(value, line);
        else if (key == "holding_time") s.holding_time = to_double(value, line);
        else if (key == "holding_distribution") {
            if (value == "deterministic") s.holding_distribution = HoldingDistribution::Deterministic;
            else if (value == "exponential") s.holding_distribution = HoldingDistribution::Exponential;
            else throw ConfigError("line " + std::to_string(line) +
                                   ": holding_distribution must be deterministic or exponential");
        }
        else if (key == "sim_time") s.sim_time = to_double(value, line);
        else if (key == "warmup") s.warmup = to_double(value, line);
        else if (key == "seed") s.seed = static_cast<std::uint64_t>(to_long(value, line));
        else if (key == "policy_column") s.policy_column = static_cast<int>(to_long(value, line));
        else if (key == "matrix_file") matrix_file = value;
        else if (key == "scan") {
            if (value == "wraparound") s.cascade.scan = ScanMode::WrapAround;
            else if (value == "forward") s.cascade.scan = ScanMode::ForwardOnly;
            else throw ConfigError("line " + std::to_string(line) +
                                   ": scan must be wraparound or forward");
        }
        else if (key == "on_policy_reject") {
            if (value == "continue") s.cascade.on_policy_reject = RejectMode::Continue;
            else if (value == "drop") s.cascade.on_policy_reject = RejectMode::Drop;
            else throw ConfigError("line " + std::to_string(line) +
                                   ": on_policy_reject must be continue or drop");
        }
        else throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }

    if (caps_touched) {
        if (!explicit_caps.empty()) {
            if (sections >= 0 || ports >= 0)
                throw ConfigError("capacities cannot be combined with sections/ports_per_section");
            s.capacities = explicit_caps;
        } else {
            long nsec = sections >= 0 ? sections : static_cast<long>(s.capacities.size());
            long nports = ports >= 0 ? ports : (s.capacities.empty() ? 10 : s.capacities[0]);
            if (nsec <= 0) throw ConfigError("sections must be >= 1");
            if (nports < 0) throw ConfigError("ports_per_section must be >= 0");
            s.capacities.assign(static_cast<std::size_t>(nsec), static_cast<int>(nports));
        }
    }
    if (ladder_touched) {
        long n = clusters >= 0 ? clusters : static_cast<long>(s.ladder.count);
        if (n <= 0) throw ConfigError("clusters must be >= 1");
        s.ladder = cluster_rates(min_rate, max_rate, static_cast<std::size_t>(n));
    }
    if (!matrix_file.empty()) s.matrix = ControlMatrix::load(matrix_file);
    return s;
}

Scenario load_scenario_config(const std::string& path, const Scenario& defaults) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_config_text(buf.str(), defaults);
}

}  // namespace vodsim
