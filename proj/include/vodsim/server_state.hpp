#ifndef VODSIM_SERVER_STATE_HPP
#define VODSIM_SERVER_STATE_HPP

#include <cstddef>
#include <numeric>
#include <vector>

namespace vodsim {

// Partitioned server capacity: C_j ports per section, Q_j currently held.
// Single-owner mutable state; one instance per simulation run.
struct ServerState {
    std::vector<int> capacities;
    std::vector<int> occupancies;
    double clock = 0.0;

    std::size_t sections() const { return capacities.size(); }
    int total_capacity() const {
        return std::accumulate(capacities.begin(), capacities.end(), 0);
    }
    int total_occupancy() const {
        return std::accumulate(occupancies.begin(), occupancies.end(), 0);
    }
    bool invariants_hold() const {
        for (std::size_t j = 0; j < capacities.size(); ++j)
            if (occupancies[j] < 0 || occupancies[j] > capacities[j]) return false;
        return true;
    }
};

ServerState new_server_state(const std::vector<int>& capacities);

}  // namespace vodsim

#endif
