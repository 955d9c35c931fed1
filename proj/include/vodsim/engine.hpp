#ifndef VODSIM_ENGINE_HPP
#define VODSIM_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vodsim/admission.hpp"
#include "vodsim/control_matrix.hpp"
#include "vodsim/metrics.hpp"
#include "vodsim/traffic.hpp"

namespace vodsim {

enum class HoldingDistribution { Deterministic, Exponential };

// Full configuration of one simulation run. Value type; copies are cheap
// enough that sweeps mutate a copy per point.
struct Scenario {
    std::string id = "run";

    std::vector<int> capacities = std::vector<int>(20, 10);
    std::optional<ControlMatrix> matrix;
    int policy_column = 0;                // 1-based into matrix; 0 = policy disabled
    std::optional<PolicyVector> policy;   // explicit vector, overrides matrix/column
    CascadeMode cascade;

    ClusterRateLadder ladder = cluster_rates(1.0, 10.5, 20);
    RateMapping mapping;                  // playback 4 Mb/s, scale 1
    double rate_scale = 1.0;
    double population_multiplier = 1.0;

    double holding_time = 140.0;
    HoldingDistribution holding_distribution = HoldingDistribution::Deterministic;
    double sim_time = 460.0;
    double warmup = 0.0;
    std::uint64_t seed = 1;

    // lambda_i for class i (0-based), all multipliers applied.
    double effective_rate(std::size_t i) const {
        return rate_scale * population_multiplier * request_rate(ladder.rates[i], mapping);
    }

    // Policy actually used for admission; nullopt = pure loss (policy == 1).
    std::optional<PolicyVector> resolved_policy() const;
};

MetricsReport run(const Scenario& scenario);

enum class SweepAxis { RateScale, PopulationMultiplier, PolicyColumn, Seed };

SweepAxis parse_sweep_axis(const std::string& name);

// One independent run per value, reports in value order. jobs > 1 runs
// scenarios concurrently; output is identical for any job count.
std::vector<MetricsReport> sweep(const Scenario& base, SweepAxis axis,
                                 const std::vector<double>& values, unsigned jobs = 1);

}  // namespace vodsim

#endif
