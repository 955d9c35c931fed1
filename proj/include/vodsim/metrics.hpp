#ifndef VODSIM_METRICS_HPP
#define VODSIM_METRICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vodsim {

// Post-warmup counters for one run, plus the scenario echo the results CSV
// needs. Immutable once the run completes.
struct MetricsReport {
    std::string scenario_id;
    int policy_column = 0;  // 1-based; 0 = policy disabled
    double rate_scale = 1.0;
    double population_multiplier = 1.0;
    std::uint64_t seed = 0;

    std::vector<double> cluster_rates;  // Mb/s, per class
    std::vector<double> offered_rates;  // effective lambda_i, req/s

    std::vector<std::int64_t> arrivals;       // per class
    std::vector<std::int64_t> admissions;     // per class
    std::vector<std::int64_t> blocks_full;    // per class, no free port seen
    std::vector<std::int64_t> blocks_policy;  // per class, policy draw(s) failed

    std::vector<double> occupancy_time_integral;  // port-seconds, per partition
    std::vector<int> capacities;
    double holding_time = 0.0;
    double horizon = 0.0;  // seconds measured, post-warmup

    std::int64_t total_arrivals() const;
    std::int64_t total_admissions() const;
    std::int64_t total_blocks() const;
    std::int64_t total_blocks_full() const;
    bool conservation_holds() const;
};

struct BlockingProbability {
    std::vector<std::optional<double>> per_class;  // nullopt when no arrivals
    std::optional<double> overall;
};

// blocks / arrivals, all block reasons counted.
BlockingProbability blocking_probability(const MetricsReport& report);

// Like blocking_probability but counts only no-free-port blocks; used for
// the policy vs no-policy comparison where policy thinning is not a loss.
BlockingProbability capacity_blocking_probability(const MetricsReport& report);

struct Throughput {
    std::optional<double> fraction;  // admissions / arrivals
    double rate = 0.0;               // admissions / horizon, req/s
};

Throughput throughput(const MetricsReport& report);

// Offered erlangs per port: sum(lambda_i) * holding_time / sum(C_j).
double traffic_intensity(const MetricsReport& report, const std::vector<int>& capacities,
                         double holding_time);

}  // namespace vodsim

#endif
