#ifndef VODSIM_UTIL_HPP
#define VODSIM_UTIL_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vodsim {

// Bad configuration / bad input from the user; the CLI maps this to exit 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency fault (e.g. double release); aborts the run.
struct SimulationFault : std::logic_error {
    explicit SimulationFault(const std::string& msg) : std::logic_error(msg) {}
};

// Shortest round-trip decimal representation (std::to_chars).
std::string format_double(double v);

// Parses "a,b,c" into doubles; throws ConfigError on garbage.
std::vector<double> parse_double_list(const std::string& text);

// splitmix64 step, used to derive independent RNG substreams.
std::uint64_t mix64(std::uint64_t x);

// Stable substream seed from (seed, tag, index).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index);

// Deterministic uniform/Bernoulli/exponential source. One instance per
// substream; never shared across concurrent runs.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(mix64(seed ^ 0x9e3779b97f4a7c15ull)) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix64(state_);
    }

    // Uniform in (0,1): never 0, never 1.
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Inverse transform; mean 1/lambda.
    double exponential(double lambda) { return -std::log(uniform01()) / lambda; }

private:
    std::uint64_t state_;
};

}  // namespace vodsim

#endif
