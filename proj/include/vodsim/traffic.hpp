#ifndef VODSIM_TRAFFIC_HPP
#define VODSIM_TRAFFIC_HPP

#include <cstdint>
#include <vector>

#include "vodsim/control_matrix.hpp"
#include "vodsim/util.hpp"

namespace vodsim {

// Evenly spaced per-cluster traffic rates, Mb/s.
struct ClusterRateLadder {
    double min_rate = 1.0;
    double max_rate = 10.5;
    std::size_t count = 20;
    std::vector<double> rates;
};

// Converts a cluster's traffic rate (Mb/s) into a request arrival rate:
// lambda = scale * traffic_rate / playback_rate.
struct RateMapping {
    double playback_rate = 4.0;  // Mb/s per stream
    double scale = 1.0;
};

ClusterRateLadder cluster_rates(double min_rate, double max_rate, std::size_t count);

double request_rate(double traffic_rate, const RateMapping& mapping);

// Delta-t = -ln(u)/lambda for u ~ U(0,1). Exposed for the identity tests.
double interarrival_from_uniform(double u, double lambda);

// Exponential interarrival draw; lambda must be > 0 (a class with lambda = 0
// is silent and never calls this).
double next_interarrival(double lambda, RandomStream& rng);

// Random control matrix: each column is a composition of 1.00 in hundredths
// with entries in [0.01, 0.10]. Deterministic per seed.
ControlMatrix generate_matrix(std::size_t k, std::size_t n, std::uint64_t seed);

}  // namespace vodsim

#endif
