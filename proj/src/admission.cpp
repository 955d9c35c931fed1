#include "vodsim/admission.hpp"

namespace vodsim {

void release(ServerState& state, std::size_t partition_index) {
    if (partition_index < 1 || partition_index > state.sections())
        throw SimulationFault("release: partition index out of range");
    int& q = state.occupancies[partition_index - 1];
    if (q <= 0)
        throw SimulationFault("release on empty partition " + std::to_string(partition_index));
    --q;
}

}  // namespace vodsim
