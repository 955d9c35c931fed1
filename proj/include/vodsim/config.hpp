#ifndef VODSIM_CONFIG_HPP
#define VODSIM_CONFIG_HPP

#include <string>

#include "vodsim/engine.hpp"

namespace vodsim {

// Line-oriented `key = value` configuration with '#' comments. Every key is
// optional; defaults are the reference scenario built into Scenario
// (20 sections x 10 ports, 1-10.5 Mb/s over 20 clusters, 140 s holding,
// 460 s horizon).
//
// Keys: sections, ports_per_section, capacities (comma list), clusters,
// min_rate, max_rate, playback_rate, traffic_scale, rate_scale,
// population_multiplier, holding_time, holding_distribution
// (deterministic|exponential), sim_time, warmup, seed, policy_column,
// matrix_file, scan (wraparound|forward), on_policy_reject (continue|drop).
Scenario scenario_from_config_text(const std::string& text, const Scenario& defaults);

Scenario load_scenario_config(const std::string& path, const Scenario& defaults);

}  // namespace vodsim

#endif
