#include <doctest.h>

#include <cmath>

#include "enumerate_admit.hpp"
#include "vodsim/admission.hpp"
#include "vodsim/analytics.hpp"
#include "vodsim/util.hpp"

using namespace vodsim;
using vodsim_test::exact_admit_distribution;

namespace {

struct FixedDraws {
    double u;
    bool bernoulli(double p) { return u < p; }
};

}  // namespace

TEST_CASE("certain admission at a free home partition") {
    auto state = new_server_state({2, 2});
    PolicyVector policy{{1.0, 1.0}};
    FixedDraws draws{0.5};
    auto outcome = admit(state, 1, policy, {}, draws);
    REQUIRE(outcome.admitted());
    CHECK(outcome.partition == 1);
    CHECK(state.occupancies[0] == 1);
}

TEST_CASE("all partitions full blocks regardless of policy") {
    auto state = new_server_state({1, 1});
    state.occupancies = {1, 1};
    PolicyVector policy{{1.0, 1.0}};
    FixedDraws draws{0.0};
    auto outcome = admit(state, 1, policy, {}, draws);
    CHECK(outcome.kind == AdmissionOutcome::Kind::BlockedAllFull);
    CHECK(state.occupancies == std::vector<int>{1, 1});
}

TEST_CASE("hand-traced cascade: full home, draw 0.3 admits at partition 2") {
    auto state = new_server_state({1, 1});
    state.occupancies = {1, 0};
    PolicyVector policy{{0.5, 0.5}};
    FixedDraws draws{0.3};
    auto outcome = admit(state, 1, policy,
                         {ScanMode::WrapAround, RejectMode::Continue}, draws);
    REQUIRE(outcome.admitted());
    CHECK(outcome.partition == 2);
    CHECK(outcome.probability_used == 0.5);
    CHECK(state.occupancies == std::vector<int>{1, 1});
}

TEST_CASE("forward-only scan never wraps back") {
    auto state = new_server_state({1, 1});
    state.occupancies = {0, 1};
    PolicyVector policy{{1.0, 1.0}};
    FixedDraws draws{0.0};
    // Class 2's home is full; forward scan ends at partition k.
    auto outcome = admit(state, 2, policy,
                         {ScanMode::ForwardOnly, RejectMode::Continue}, draws);
    CHECK(outcome.kind == AdmissionOutcome::Kind::BlockedAllFull);
    // Wraparound finds partition 1.
    auto wrapped = admit(state, 2, policy,
                         {ScanMode::WrapAround, RejectMode::Continue}, draws);
    REQUIRE(wrapped.admitted());
    CHECK(wrapped.partition == 1);
}

TEST_CASE("drop mode blocks on the first failed draw at a free partition") {
    auto state = new_server_state({1, 1});
    PolicyVector policy{{0.2, 1.0}};
    FixedDraws draws{0.9};  // 0.9 >= 0.2, draw fails
    auto outcome = admit(state, 1, policy, {ScanMode::WrapAround, RejectMode::Drop}, draws);
    CHECK(outcome.kind == AdmissionOutcome::Kind::BlockedPolicy);
    CHECK(state.total_occupancy() == 0);
}

TEST_CASE("release decrements and detects double release") {
    auto state = new_server_state({2});
    PolicyVector policy{{1.0}};
    FixedDraws draws{0.0};
    admit(state, 1, policy, {}, draws);
    CHECK(state.occupancies[0] == 1);
    release(state, 1);
    CHECK(state.occupancies[0] == 0);
    CHECK_THROWS_AS(release(state, 1), SimulationFault);
    CHECK_THROWS_AS(release(state, 5), SimulationFault);
}

TEST_CASE("policy of all zeros admits nothing") {
    auto state = new_server_state({2, 2});
    PolicyVector policy{{0.0, 0.0}};
    RandomStream rng(3);
    for (int i = 0; i < 50; ++i) {
        auto outcome = admit(state, 1 + i % 2, policy, {}, rng);
        CHECK_FALSE(outcome.admitted());
    }
    CHECK(state.total_occupancy() == 0);
}

TEST_CASE("policy of all ones blocks iff every partition is full") {
    PolicyVector policy{{1.0, 1.0, 1.0}};
    RandomStream rng(9);
    auto state = new_server_state({1, 2, 1});
    int admitted = 0;
    for (int i = 0; i < 10; ++i) {
        auto outcome = admit(state, 1 + i % 3, policy, {}, rng);
        if (outcome.admitted()) ++admitted;
        else CHECK(outcome.kind == AdmissionOutcome::Kind::BlockedAllFull);
        CHECK(state.invariants_hold());
    }
    CHECK(admitted == 4);  // exactly the total capacity
}

TEST_CASE("exact enumeration matches analytic routing probabilities") {
    // Every fullness pattern for k <= 3, C_j <= 2, both reject modes.
    PolicyVector policy{{0.3, 0.6, 0.9}};
    for (int scan = 0; scan < 2; ++scan)
        for (int rej = 0; rej < 2; ++rej) {
            CascadeMode mode{scan ? ScanMode::ForwardOnly : ScanMode::WrapAround,
                             rej ? RejectMode::Drop : RejectMode::Continue};
            for (int q0 = 0; q0 <= 2; ++q0)
                for (int q1 = 0; q1 <= 2; ++q1)
                    for (int q2 = 0; q2 <= 2; ++q2)
                        for (std::size_t cls = 1; cls <= 3; ++cls) {
                            auto state = new_server_state({2, 2, 2});
                            state.occupancies = {q0, q1, q2};
                            auto dist = exact_admit_distribution(state, cls, policy, mode);

                            std::vector<bool> free = {q0 < 2, q1 < 2, q2 < 2};
                            auto route = admit_routing_probabilities(free, cls, policy, mode);
                            double total_prob = 0.0, admit_prob = 0.0;
                            for (auto [key, p] : dist) {
                                total_prob += p;
                                if (key > 0) {
                                    CHECK(std::abs(p - route[key - 1]) < 1e-12);
                                    admit_prob += p;
                                }
                            }
                            CHECK(std::abs(total_prob - 1.0) < 1e-12);
                            double route_total = 0.0;
                            for (double r : route) route_total += r;
                            CHECK(std::abs(admit_prob - route_total) < 1e-12);
                        }
        }
}

TEST_CASE("raising a policy entry never lowers the admission probability") {
    CascadeMode mode{ScanMode::WrapAround, RejectMode::Continue};
    std::vector<bool> free = {true, false, true, true};
    PolicyVector policy{{0.2, 0.5, 0.4, 0.1}};
    for (std::size_t cls = 1; cls <= 4; ++cls) {
        auto base = admit_routing_probabilities(free, cls, policy, mode);
        double base_total = 0.0;
        for (double r : base) base_total += r;
        for (std::size_t j = 0; j < 4; ++j) {
            PolicyVector raised = policy;
            raised.probs[j] = std::min(1.0, raised.probs[j] + 0.3);
            auto up = admit_routing_probabilities(free, cls, raised, mode);
            double up_total = 0.0;
            for (double r : up) up_total += r;
            CHECK(up_total >= base_total - 1e-12);
        }
    }
}
