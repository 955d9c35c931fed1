#include "vodsim/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <queue>
#include <thread>

namespace vodsim {

std::optional<PolicyVector> Scenario::resolved_policy() const {
    if (policy) return policy;
    if (policy_column > 0) {
        if (!matrix) throw ConfigError("policy column set but no control matrix given");
        return matrix->column(static_cast<std::size_t>(policy_column));
    }
    return std::nullopt;
}

namespace {

struct Event {
    double time;
    enum class Kind : std::uint8_t { Departure = 0, Arrival = 1 } kind;
    std::size_t index;  // class (Arrival) or partition (Departure), 1-based
    std::uint64_t sequence;
};

// Departure before Arrival at equal times, then by sequence.
struct EventAfter {
    bool operator()(const Event& a, const Event& b) const {
        if (a.time != b.time) return a.time > b.time;
        if (a.kind != b.kind) return a.kind > b.kind;
        return a.sequence > b.sequence;
    }
};

void validate(const Scenario& s) {
    if (s.capacities.empty()) throw ConfigError("scenario has no sections");
    if (s.ladder.rates.size() != s.capacities.size())
        throw ConfigError("cluster count " + std::to_string(s.ladder.rates.size()) +
                          " does not match section count " +
                          std::to_string(s.capacities.size()));
    if (s.holding_time <= 0.0) throw ConfigError("holding time must be > 0");
    if (s.warmup < 0.0 || s.sim_time <= s.warmup)
        throw ConfigError("need sim_time > warmup >= 0");
    auto policy = s.resolved_policy();
    if (policy && policy->size() != s.capacities.size())
        throw ConfigError("policy length " + std::to_string(policy->size()) +
                          " does not match section count " +
                          std::to_string(s.capacities.size()));
}

}  // namespace

MetricsReport run(const Scenario& scenario) {
    validate(scenario);

    const std::size_t k = scenario.capacities.size();
    auto resolved = scenario.resolved_policy();
    PolicyVector policy;
    if (resolved) {
        policy = *resolved;
    } else {
        policy.probs.assign(k, 1.0);  // policy disabled: pure loss
    }

    ServerState state = new_server_state(scenario.capacities);

    std::vector<double> lambda(k);
    for (std::size_t i = 0; i < k; ++i) lambda[i] = scenario.effective_rate(i);

    // Independent substreams: one per class for interarrivals, one for
    // admission draws, one for holding times.
    std::vector<RandomStream> arrival_rng;
    arrival_rng.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        arrival_rng.emplace_back(substream_seed(scenario.seed, 0xa1, i));
    RandomStream admit_rng(substream_seed(scenario.seed, 0xad, 0));
    RandomStream service_rng(substream_seed(scenario.seed, 0x5e, 0));

    std::priority_queue<Event, std::vector<Event>, EventAfter> queue;
    std::uint64_t sequence = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (lambda[i] > 0.0)
            queue.push({next_interarrival(lambda[i], arrival_rng[i]),
                        Event::Kind::Arrival, i + 1, sequence++});

    MetricsReport report;
    report.scenario_id = scenario.id;
    report.policy_column = resolved ? scenario.policy_column : 0;
    report.rate_scale = scenario.rate_scale;
    report.population_multiplier = scenario.population_multiplier;
    report.seed = scenario.seed;
    report.cluster_rates = scenario.ladder.rates;
    report.offered_rates = lambda;
    report.arrivals.assign(k, 0);
    report.admissions.assign(k, 0);
    report.blocks_full.assign(k, 0);
    report.blocks_policy.assign(k, 0);
    report.occupancy_time_integral.assign(k, 0.0);
    report.capacities = scenario.capacities;
    report.holding_time = scenario.holding_time;
    report.horizon = scenario.sim_time - scenario.warmup;

    // Full-run counters for the conservation check (warmup included).
    std::int64_t admitted_total = 0, departed_total = 0;

    auto accumulate_occupancy = [&](double from, double to) {
        double lo = std::max(from, scenario.warmup);
        double hi = std::min(to, scenario.sim_time);
        if (hi <= lo) return;
        for (std::size_t j = 0; j < k; ++j)
            report.occupancy_time_integral[j] += state.occupancies[j] * (hi - lo);
    };

    while (!queue.empty()) {
        Event ev = queue.top();
        if (ev.time > scenario.sim_time) break;
        queue.pop();

        accumulate_occupancy(state.clock, ev.time);
        state.clock = ev.time;
        const bool counted = ev.time >= scenario.warmup;

        if (ev.kind == Event::Kind::Arrival) {
            std::size_t cls = ev.index;
            queue.push({ev.time + next_interarrival(lambda[cls - 1], arrival_rng[cls - 1]),
                        Event::Kind::Arrival, cls, sequence++});

            AdmissionOutcome outcome = admit(state, cls, policy, scenario.cascade, admit_rng);
            if (counted) ++report.arrivals[cls - 1];
            switch (outcome.kind) {
                case AdmissionOutcome::Kind::Admitted: {
                    ++admitted_total;
                    if (counted) ++report.admissions[cls - 1];
                    double hold =
                        scenario.holding_distribution == HoldingDistribution::Deterministic
                            ? scenario.holding_time
                            : service_rng.exponential(1.0 / scenario.holding_time);
                    queue.push({ev.time + hold, Event::Kind::Departure, outcome.partition,
                                sequence++});
                    break;
                }
                case AdmissionOutcome::Kind::BlockedAllFull:
                    if (counted) ++report.blocks_full[cls - 1];
                    break;
                case AdmissionOutcome::Kind::BlockedPolicy:
                    if (counted) ++report.blocks_policy[cls - 1];
                    break;
            }
        } else {
            release(state, ev.index);
            ++departed_total;
        }
        assert(state.invariants_hold());
    }

    accumulate_occupancy(state.clock, scenario.sim_time);
    state.clock = scenario.sim_time;

    if (admitted_total != departed_total + state.total_occupancy())
        throw SimulationFault("port conservation violated at end of run");
    if (!report.conservation_holds())
        throw SimulationFault("arrival/admission/block counts do not balance");

    return report;
}

SweepAxis parse_sweep_axis(const std::string& name) {
    if (name == "rate-scale") return SweepAxis::RateScale;
    if (name == "population-multiplier") return SweepAxis::PopulationMultiplier;
    if (name == "policy-column") return SweepAxis::PolicyColumn;
    if (name == "seed") return SweepAxis::Seed;
    throw ConfigError("unknown sweep axis: " + name);
}

namespace {

Scenario apply_axis(Scenario s, SweepAxis axis, double value, std::size_t index) {
    switch (axis) {
        case SweepAxis::RateScale:
            s.rate_scale = value;
            break;
        case SweepAxis::PopulationMultiplier:
            s.population_multiplier = value;
            break;
        case SweepAxis::PolicyColumn:
            s.policy_column = static_cast<int>(value);
            s.policy.reset();
            break;
        case SweepAxis::Seed:
            s.seed = static_cast<std::uint64_t>(value);
            break;
    }
    s.id = s.id + "-" + std::to_string(index + 1);
    return s;
}

}  // namespace

std::vector<MetricsReport> sweep(const Scenario& base, SweepAxis axis,
                                 const std::vector<double>& values, unsigned jobs) {
    std::vector<MetricsReport> reports(values.size());
    if (values.empty()) return reports;
    if (jobs == 0) jobs = 1;
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(values.size()));

    if (jobs == 1) {
        for (std::size_t i = 0; i < values.size(); ++i)
            reports[i] = run(apply_axis(base, axis, values[i], i));
        return reports;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (std::size_t i = next.fetch_add(1); i < values.size();
                     i = next.fetch_add(1))
                    reports[i] = run(apply_axis(base, axis, values[i], i));
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return reports;
}

}  // namespace vodsim
