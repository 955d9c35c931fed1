#include "vodsim/traffic.hpp"

#include <cmath>

namespace vodsim {

ClusterRateLadder cluster_rates(double min_rate, double max_rate, std::size_t count) {
    if (count == 0) throw ConfigError("cluster count must be >= 1");
    if (max_rate < min_rate) throw ConfigError("max rate below min rate");
    if (count == 1 && max_rate != min_rate)
        throw ConfigError("a single cluster needs min rate == max rate");
    ClusterRateLadder ladder;
    ladder.min_rate = min_rate;
    ladder.max_rate = max_rate;
    ladder.count = count;
    ladder.rates.reserve(count);
    if (count == 1) {
        ladder.rates.push_back(min_rate);
    } else {
        double step = (max_rate - min_rate) / static_cast<double>(count - 1);
        for (std::size_t i = 0; i < count; ++i)
            ladder.rates.push_back(min_rate + step * static_cast<double>(i));
        ladder.rates.back() = max_rate;  // kill accumulated rounding at the top
    }
    return ladder;
}

double request_rate(double traffic_rate, const RateMapping& mapping) {
    if (mapping.playback_rate <= 0.0) throw ConfigError("playback rate must be > 0");
    if (mapping.scale <= 0.0) throw ConfigError("rate mapping scale must be > 0");
    if (traffic_rate < 0.0) throw ConfigError("traffic rate must be >= 0");
    return mapping.scale * traffic_rate / mapping.playback_rate;
}

double interarrival_from_uniform(double u, double lambda) {
    return -std::log(u) / lambda;
}

double next_interarrival(double lambda, RandomStream& rng) {
    if (lambda <= 0.0) throw ConfigError("interarrival draw requires lambda > 0");
    return interarrival_from_uniform(rng.uniform01(), lambda);
}

ControlMatrix generate_matrix(std::size_t k, std::size_t n, std::uint64_t seed) {
    if (k < 2) throw ConfigError("matrix needs at least 2 rows");
    if (n < 1) throw ConfigError("matrix needs at least 1 column");
    // Column entries live in [0.01, 0.10] and must sum to exactly 1.00.
    if (k > 100 || 10 * k < 100)
        throw ConfigError("no composition of 1.00 with " + std::to_string(k) +
                          " entries in [0.01, 0.10]");

    std::vector<double> entries(k * n, 0.0);
    for (std::size_t c = 0; c < n; ++c) {
        RandomStream rng(substream_seed(seed, 0x6d61, c));
        std::vector<int> hundredths(k, 1);  // start at the 0.01 floor
        int remaining = 100 - static_cast<int>(k);
        while (remaining > 0) {
            auto i = static_cast<std::size_t>(rng.next_u64() % k);
            if (hundredths[i] < 10) {
                ++hundredths[i];
                --remaining;
            }
        }
        for (std::size_t r = 0; r < k; ++r)
            entries[r * n + c] = static_cast<double>(hundredths[r]) / 100.0;
    }
    return ControlMatrix(k, n, std::move(entries));
}

}  // namespace vodsim
