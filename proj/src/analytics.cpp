#include "vodsim/analytics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "vodsim/util.hpp"

namespace vodsim {

long max_streams(double disk_bandwidth, double playback_rate) {
    if (playback_rate <= 0.0) throw ConfigError("playback rate must be > 0");
    if (disk_bandwidth < 0.0) throw ConfigError("disk bandwidth must be >= 0");
    return static_cast<long>(std::floor(disk_bandwidth / playback_rate));
}

bool ReservedBandwidthResult::all_feasible() const {
    return std::all_of(link_feasible.begin(), link_feasible.end(), [](bool b) { return b; });
}

ReservedBandwidthResult reserved_bandwidth(const ReservedBandwidthParams& params) {
    if (params.playback_duration <= 0.0) throw ConfigError("playback duration must be > 0");
    if (params.session_links > params.total_links)
        throw ConfigError("session links K exceeds total links J");
    for (double a : params.link_bandwidths)
        if (a < 0.0) throw ConfigError("link bandwidth must be >= 0");

    ReservedBandwidthResult result;
    double k = static_cast<double>(params.session_links);
    double j = static_cast<double>(params.total_links);
    result.rate = (k * params.max_session_data + (j - k) * params.per_link_data) /
                  params.playback_duration;
    result.link_feasible.reserve(params.link_bandwidths.size());
    for (double a : params.link_bandwidths) result.link_feasible.push_back(result.rate <= a);
    return result;
}

double erlang_b(long servers, double offered_load) {
    if (servers < 0) throw ConfigError("server count must be >= 0");
    if (offered_load < 0.0) throw ConfigError("offered load must be >= 0");
    double b = 1.0;
    for (long c = 1; c <= servers; ++c) b = offered_load * b / (c + offered_load * b);
    return b;
}

CascadeProbability cascade_admit_probability(const CascadeInputs& inputs) {
    const std::size_t k = inputs.availability.size();
    if (k == 0) throw ConfigError("cascade needs at least one partition");
    if (inputs.policy.size() != k)
        throw ConfigError("policy length does not match availability length");
    if (inputs.start_class < 1 || inputs.start_class > k)
        throw ConfigError("start class out of range");
    for (double a : inputs.availability)
        if (a < 0.0 || a > 1.0) throw ConfigError("availability must be in [0,1]");

    const std::size_t steps = (inputs.mode.scan == ScanMode::WrapAround)
                                  ? k
                                  : k - (inputs.start_class - 1);
    CascadeProbability out;
    double carry = 1.0;  // P(scan reaches this step still searching)
    for (std::size_t s = 0; s < steps; ++s) {
        std::size_t j = (inputs.start_class - 1 + s) % k;
        double a = inputs.availability[j];
        double p = inputs.policy[j];
        double step = carry * a * p;
        out.partitions.push_back(j + 1);
        out.step_probability.push_back(step);
        out.total += step;
        if (inputs.mode.on_policy_reject == RejectMode::Continue) {
            carry *= 1.0 - a * p;  // full (skip) or free-but-rejected both continue
        } else {
            carry *= 1.0 - a;  // Drop: a free partition ends the scan either way
        }
    }
    return out;
}

std::vector<double> admit_routing_probabilities(const std::vector<bool>& free,
                                                std::size_t class_index,
                                                const PolicyVector& policy, CascadeMode mode) {
    const std::size_t k = free.size();
    if (policy.size() != k) throw ConfigError("policy length does not match partition count");
    if (class_index < 1 || class_index > k) throw ConfigError("class index out of range");

    std::vector<double> route(k, 0.0);
    const std::size_t steps = (mode.scan == ScanMode::WrapAround) ? k : k - (class_index - 1);
    double carry = 1.0;
    for (std::size_t s = 0; s < steps && carry > 0.0; ++s) {
        std::size_t j = (class_index - 1 + s) % k;
        if (!free[j]) continue;
        route[j] = carry * policy[j];
        if (mode.on_policy_reject == RejectMode::Drop) {
            carry = 0.0;
        } else {
            carry *= 1.0 - policy[j];
        }
    }
    return route;
}

namespace {

// Mixed-radix index over occupancy vectors, digit j in [0, C_j].
std::size_t state_index(const std::vector<int>& q, const std::vector<int>& caps) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < caps.size(); ++j)
        idx = idx * static_cast<std::size_t>(caps[j] + 1) + static_cast<std::size_t>(q[j]);
    return idx;
}

std::vector<int> state_from_index(std::size_t idx, const std::vector<int>& caps) {
    std::vector<int> q(caps.size());
    for (std::size_t j = caps.size(); j-- > 0;) {
        std::size_t radix = static_cast<std::size_t>(caps[j] + 1);
        q[j] = static_cast<int>(idx % radix);
        idx /= radix;
    }
    return q;
}

struct Transition {
    std::size_t from, to;
    double rate;
};

std::vector<double> stationary_dense(std::size_t n, const std::vector<Transition>& transitions) {
    Eigen::MatrixXd generator = Eigen::MatrixXd::Zero(n, n);
    for (const auto& t : transitions) {
        generator(t.from, t.to) += t.rate;
        generator(t.from, t.from) -= t.rate;
    }
    // Solve pi * Q = 0, sum(pi) = 1: transpose and replace the last row.
    Eigen::MatrixXd a = generator.transpose();
    a.row(n - 1).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs(n - 1) = 1.0;
    Eigen::VectorXd pi = a.colPivHouseholderQr().solve(rhs);
    return std::vector<double>(pi.data(), pi.data() + n);
}

std::vector<double> stationary_iterative(std::size_t n,
                                         const std::vector<Transition>& transitions) {
    // Uniformization: P = I + Q/Lambda, power-iterate pi <- pi P.
    std::vector<double> out_rate(n, 0.0);
    for (const auto& t : transitions) out_rate[t.from] += t.rate;
    double uniform_rate = *std::max_element(out_rate.begin(), out_rate.end()) * 1.05 + 1e-12;

    std::vector<double> pi(n, 1.0 / static_cast<double>(n)), next(n);
    for (int iter = 0; iter < 200000; ++iter) {
        for (std::size_t i = 0; i < n; ++i)
            next[i] = pi[i] * (1.0 - out_rate[i] / uniform_rate);
        for (const auto& t : transitions) next[t.to] += pi[t.from] * t.rate / uniform_rate;
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) delta = std::max(delta, std::abs(next[i] - pi[i]));
        pi.swap(next);
        if (delta < 1e-14) break;
    }
    double sum = 0.0;
    for (double p : pi) sum += p;
    for (double& p : pi) p /= sum;
    return pi;
}

}  // namespace

CtmcResult ctmc_blocking(const std::vector<int>& capacities, const PolicyVector& policy,
                         const std::vector<double>& arrival_rates, double mu,
                         CascadeMode mode) {
    const std::size_t k = capacities.size();
    if (k == 0) throw ConfigError("ctmc needs at least one partition");
    if (policy.size() != k || arrival_rates.size() != k)
        throw ConfigError("policy/rate lengths must match partition count");
    if (mu <= 0.0) throw ConfigError("service rate mu must be > 0");

    std::size_t n = 1;
    for (int c : capacities) {
        if (c < 0) throw ConfigError("capacities must be >= 0");
        n *= static_cast<std::size_t>(c + 1);
        if (n > 100000)
            throw ConfigError("ctmc state space too large: > 100000 states (product of C_j+1)");
    }

    std::vector<Transition> transitions;
    // Per-state blocking probability per class, for PASTA at the end.
    std::vector<std::vector<double>> block_given_state(k, std::vector<double>(n, 0.0));

    for (std::size_t s = 0; s < n; ++s) {
        std::vector<int> q = state_from_index(s, capacities);
        std::vector<bool> free(k);
        for (std::size_t j = 0; j < k; ++j) free[j] = q[j] < capacities[j];

        for (std::size_t cls = 1; cls <= k; ++cls) {
            if (arrival_rates[cls - 1] <= 0.0) {
                block_given_state[cls - 1][s] = 1.0;  // unused, class is silent
                continue;
            }
            auto route = admit_routing_probabilities(free, cls, policy, mode);
            double admit_total = 0.0;
            for (std::size_t j = 0; j < k; ++j) {
                if (route[j] <= 0.0) continue;
                admit_total += route[j];
                ++q[j];
                transitions.push_back({s, state_index(q, capacities),
                                       arrival_rates[cls - 1] * route[j]});
                --q[j];
            }
            block_given_state[cls - 1][s] = 1.0 - admit_total;
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (q[j] == 0) continue;
            --q[j];
            transitions.push_back({s, state_index(q, capacities), mu * (q[j] + 1)});
            ++q[j];
        }
    }

    std::vector<double> pi = n <= 2000 ? stationary_dense(n, transitions)
                                       : stationary_iterative(n, transitions);

    // Clamp solver noise and renormalize.
    double sum = 0.0;
    for (double& p : pi) {
        if (p < 0.0 && p > -1e-12) p = 0.0;
        sum += p;
    }
    for (double& p : pi) p /= sum;

    CtmcResult result;
    result.state_count = n;
    result.per_class_blocking.assign(k, 0.0);
    double lambda_total = 0.0, blocked_rate = 0.0;
    for (std::size_t cls = 0; cls < k; ++cls) {
        if (arrival_rates[cls] <= 0.0) continue;
        double b = 0.0;
        for (std::size_t s = 0; s < n; ++s) b += pi[s] * block_given_state[cls][s];
        result.per_class_blocking[cls] = b;
        lambda_total += arrival_rates[cls];
        blocked_rate += arrival_rates[cls] * b;
    }
    result.overall_blocking = lambda_total > 0.0 ? blocked_rate / lambda_total : 0.0;

    // Global balance residual |pi * Q|_inf.
    std::vector<double> residual(n, 0.0);
    for (const auto& t : transitions) {
        residual[t.to] += pi[t.from] * t.rate;
        residual[t.from] -= pi[t.from] * t.rate;
    }
    for (double r : residual) result.balance_residual = std::max(result.balance_residual,
                                                                 std::abs(r));
    return result;
}

}  // namespace vodsim
