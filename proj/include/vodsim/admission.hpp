#ifndef VODSIM_ADMISSION_HPP
#define VODSIM_ADMISSION_HPP

#include <cstddef>

#include "vodsim/control_matrix.hpp"
#include "vodsim/server_state.hpp"
#include "vodsim/util.hpp"

namespace vodsim {

enum class ScanMode { WrapAround, ForwardOnly };
enum class RejectMode { Continue, Drop };

struct CascadeMode {
    ScanMode scan = ScanMode::WrapAround;
    RejectMode on_policy_reject = RejectMode::Continue;
};

struct AdmissionOutcome {
    enum class Kind { Admitted, BlockedAllFull, BlockedPolicy };
    Kind kind;
    std::size_t partition = 0;      // 1-based, valid when Admitted
    double probability_used = 0.0;  // policy prob at the admitting partition

    bool admitted() const { return kind == Kind::Admitted; }
};

// Cascade over partitions starting at the request's home partition
// (class_index, 1-based). Full partitions are skipped; at a free partition a
// Bernoulli draw with the partition's policy probability decides admission.
// A failed draw either continues the scan (Continue) or blocks the request
// (Drop). WrapAround examines all k partitions, ForwardOnly stops at k.
//
// Draws is anything with bool bernoulli(double p); tests substitute scripted
// sources to enumerate the outcome distribution exactly.
template <class Draws>
AdmissionOutcome admit(ServerState& state, std::size_t class_index, const PolicyVector& policy,
                       CascadeMode mode, Draws& draws) {
    const std::size_t k = state.sections();
    if (class_index < 1 || class_index > k)
        throw ConfigError("class index " + std::to_string(class_index) + " out of range 1.." +
                          std::to_string(k));
    if (policy.size() != k)
        throw ConfigError("policy vector length does not match section count");

    const std::size_t steps = (mode.scan == ScanMode::WrapAround) ? k : k - (class_index - 1);
    bool saw_free = false;
    for (std::size_t s = 0; s < steps; ++s) {
        std::size_t j = (class_index - 1 + s) % k;
        if (state.occupancies[j] >= state.capacities[j]) continue;
        saw_free = true;
        if (draws.bernoulli(policy[j])) {
            ++state.occupancies[j];
            return {AdmissionOutcome::Kind::Admitted, j + 1, policy[j]};
        }
        if (mode.on_policy_reject == RejectMode::Drop) break;
    }
    return {saw_free ? AdmissionOutcome::Kind::BlockedPolicy
                     : AdmissionOutcome::Kind::BlockedAllFull};
}

void release(ServerState& state, std::size_t partition_index);

}  // namespace vodsim

#endif
