#include "vodsim/server_state.hpp"

#include "vodsim/util.hpp"

namespace vodsim {

ServerState new_server_state(const std::vector<int>& capacities) {
    if (capacities.empty()) throw ConfigError("capacity list must not be empty");
    for (std::size_t j = 0; j < capacities.size(); ++j)
        if (capacities[j] < 0)
            throw ConfigError("capacity of section " + std::to_string(j + 1) +
                              " is negative");
    ServerState s;
    s.capacities = capacities;
    s.occupancies.assign(capacities.size(), 0);
    s.clock = 0.0;
    return s;
}

}  // namespace vodsim
