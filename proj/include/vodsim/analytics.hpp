#ifndef VODSIM_ANALYTICS_HPP
#define VODSIM_ANALYTICS_HPP

#include <cstddef>
#include <vector>

#include "vodsim/admission.hpp"
#include "vodsim/control_matrix.hpp"

namespace vodsim {

// floor(R_d / R_p): how many streams a disk of bandwidth R_d can feed.
long max_streams(double disk_bandwidth, double playback_rate);

struct ReservedBandwidthParams {
    std::size_t total_links = 0;     // J
    std::size_t session_links = 0;   // K, links in playback/interactive use
    double max_session_data = 0.0;   // B_r, Mb
    double per_link_data = 0.0;      // M, Mb for the remaining links
    double playback_duration = 0.0;  // gamma, seconds
    std::vector<double> link_bandwidths;  // A_j, Mb/s, one per link
};

struct ReservedBandwidthResult {
    double rate = 0.0;                 // R_r, Mb/s
    std::vector<bool> link_feasible;   // R_r <= A_j per link
    bool all_feasible() const;
};

// R_r = (K*B_r + (J-K)*M) / gamma; feasible per link iff R_r <= A_j.
ReservedBandwidthResult reserved_bandwidth(const ReservedBandwidthParams& params);

// Loss-system blocking, B(0,a)=1, B(c,a)=a*B(c-1,a)/(c+a*B(c-1,a)).
double erlang_b(long servers, double offered_load);

struct CascadeInputs {
    std::vector<double> availability;  // p(A_j), probability partition j has a free port
    PolicyVector policy;
    std::size_t start_class = 1;  // 1-based
    CascadeMode mode;
};

struct CascadeProbability {
    // For each scan step: the partition (1-based) and the unconditional
    // probability of admission happening at that step.
    std::vector<std::size_t> partitions;
    std::vector<double> step_probability;
    double total = 0.0;
};

// Admission probability under the independence factorization: step j
// succeeds with policy[j]*p(A_j), prior free-partition rejections either
// continue or end the scan per the cascade mode.
CascadeProbability cascade_admit_probability(const CascadeInputs& inputs);

struct CtmcResult {
    std::vector<double> per_class_blocking;
    double overall_blocking = 0.0;
    std::size_t state_count = 0;
    double balance_residual = 0.0;  // max |pi * Q| over states
};

// Exact stationary blocking for the cascade with exponential holding
// (rate mu). State space is all occupancy vectors; refuses above 1e5 states.
CtmcResult ctmc_blocking(const std::vector<int>& capacities, const PolicyVector& policy,
                         const std::vector<double>& arrival_rates, double mu,
                         CascadeMode mode);

// Routing used by the CTMC, exposed for the enumeration tests: probability
// that an arrival of `class_index` in fullness pattern `free[j]` is admitted
// at each partition. Mirrors admit()'s semantics exactly.
std::vector<double> admit_routing_probabilities(const std::vector<bool>& free,
                                                std::size_t class_index,
                                                const PolicyVector& policy, CascadeMode mode);

}  // namespace vodsim

#endif
