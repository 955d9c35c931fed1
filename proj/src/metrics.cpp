#include "vodsim/metrics.hpp"

#include <numeric>

#include "vodsim/util.hpp"

namespace vodsim {

namespace {
std::int64_t sum(const std::vector<std::int64_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}
}  // namespace

std::int64_t MetricsReport::total_arrivals() const { return sum(arrivals); }
std::int64_t MetricsReport::total_admissions() const { return sum(admissions); }
std::int64_t MetricsReport::total_blocks() const { return sum(blocks_full) + sum(blocks_policy); }
std::int64_t MetricsReport::total_blocks_full() const { return sum(blocks_full); }

bool MetricsReport::conservation_holds() const {
    for (std::size_t i = 0; i < arrivals.size(); ++i)
        if (arrivals[i] != admissions[i] + blocks_full[i] + blocks_policy[i]) return false;
    return true;
}

BlockingProbability blocking_probability(const MetricsReport& report) {
    BlockingProbability out;
    for (std::size_t i = 0; i < report.arrivals.size(); ++i) {
        if (report.arrivals[i] == 0) {
            out.per_class.push_back(std::nullopt);
        } else {
            out.per_class.push_back(
                static_cast<double>(report.blocks_full[i] + report.blocks_policy[i]) /
                static_cast<double>(report.arrivals[i]));
        }
    }
    if (report.total_arrivals() > 0)
        out.overall = static_cast<double>(report.total_blocks()) /
                      static_cast<double>(report.total_arrivals());
    return out;
}

BlockingProbability capacity_blocking_probability(const MetricsReport& report) {
    BlockingProbability out;
    for (std::size_t i = 0; i < report.arrivals.size(); ++i) {
        if (report.arrivals[i] == 0) {
            out.per_class.push_back(std::nullopt);
        } else {
            out.per_class.push_back(static_cast<double>(report.blocks_full[i]) /
                                    static_cast<double>(report.arrivals[i]));
        }
    }
    if (report.total_arrivals() > 0)
        out.overall = static_cast<double>(report.total_blocks_full()) /
                      static_cast<double>(report.total_arrivals());
    return out;
}

Throughput throughput(const MetricsReport& report) {
    if (report.horizon <= 0.0) throw ConfigError("throughput needs a positive horizon");
    Throughput t;
    if (report.total_arrivals() > 0)
        t.fraction = static_cast<double>(report.total_admissions()) /
                     static_cast<double>(report.total_arrivals());
    t.rate = static_cast<double>(report.total_admissions()) / report.horizon;
    return t;
}

double traffic_intensity(const MetricsReport& report, const std::vector<int>& capacities,
                         double holding_time) {
    int total_ports = std::accumulate(capacities.begin(), capacities.end(), 0);
    if (total_ports <= 0) throw ConfigError("traffic intensity needs positive total capacity");
    double lambda_total =
        std::accumulate(report.offered_rates.begin(), report.offered_rates.end(), 0.0);
    return lambda_total * holding_time / static_cast<double>(total_ports);
}

}  // namespace vodsim
