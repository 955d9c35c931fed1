#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "vodsim/traffic.hpp"

using namespace vodsim;

TEST_CASE("cluster_rates builds the evenly spaced ladder") {
    auto ladder = cluster_rates(1.0, 10.5, 20);
    REQUIRE(ladder.rates.size() == 20);
    CHECK(ladder.rates.front() == 1.0);
    CHECK(ladder.rates.back() == 10.5);
    for (std::size_t i = 1; i < 20; ++i)
        CHECK(ladder.rates[i] - ladder.rates[i - 1] == doctest::Approx(0.5).epsilon(1e-12));

    auto single = cluster_rates(5.0, 5.0, 1);
    REQUIRE(single.rates.size() == 1);
    CHECK(single.rates[0] == 5.0);

    CHECK_THROWS_AS(cluster_rates(1.0, 10.5, 0), ConfigError);
    CHECK_THROWS_AS(cluster_rates(10.5, 1.0, 20), ConfigError);
    CHECK_THROWS_AS(cluster_rates(1.0, 10.5, 1), ConfigError);
}

TEST_CASE("request_rate is linear in traffic rate") {
    RateMapping mapping{4.0, 1.0};
    CHECK(request_rate(4.0, mapping) == 1.0);
    CHECK(request_rate(0.0, mapping) == 0.0);
    CHECK(request_rate(10.5, mapping) == doctest::Approx(2.625));
    CHECK_THROWS_AS(request_rate(4.0, RateMapping{0.0, 1.0}), ConfigError);
}

TEST_CASE("interarrival inverse-transform identity") {
    CHECK(interarrival_from_uniform(std::exp(-1.0), 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    RandomStream rng(7);
    CHECK_THROWS_AS(next_interarrival(0.0, rng), ConfigError);
}

TEST_CASE("interarrival empirical mean at lambda=2") {
    RandomStream rng(42);
    const int n = 100000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += next_interarrival(2.0, rng);
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("interarrival samples pass a KS test against Exp(lambda)") {
    const double lambda = 1.5;
    const int n = 10000;
    RandomStream rng(2024);
    std::vector<double> samples(n);
    for (auto& s : samples) s = next_interarrival(lambda, rng);
    std::sort(samples.begin(), samples.end());

    double d = 0.0;
    for (int i = 0; i < n; ++i) {
        double cdf = 1.0 - std::exp(-lambda * samples[i]);
        d = std::max(d, std::abs(cdf - static_cast<double>(i) / n));
        d = std::max(d, std::abs(cdf - static_cast<double>(i + 1) / n));
    }
    // 1% critical value, large-sample approximation.
    CHECK(d < 1.628 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("generate_matrix produces exact compositions") {
    auto m = generate_matrix(20, 10, 99);
    REQUIRE(m.rows() == 20);
    REQUIRE(m.cols() == 10);

    for (std::size_t c = 0; c < m.cols(); ++c) {
        long hundredths = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            double e = m.at(r, c);
            CHECK(e >= 0.01);
            CHECK(e <= 0.10);
            hundredths += static_cast<long>(e * 100.0 + 0.5);
        }
        CHECK(hundredths == 100);
    }
    // Passes validation at tolerance 0 (1e-9 FP guard only).
    CHECK(validate_control_matrix(m, 0.0).empty());
}

TEST_CASE("generate_matrix is deterministic per seed") {
    auto a = generate_matrix(20, 10, 5);
    auto b = generate_matrix(20, 10, 5);
    CHECK(a.to_csv() == b.to_csv());
    auto c = generate_matrix(20, 10, 6);
    CHECK(a.to_csv() != c.to_csv());
}

TEST_CASE("generate_matrix rejects infeasible compositions") {
    CHECK_THROWS_AS(generate_matrix(5, 1, 1), ConfigError);    // 5*0.10 < 1
    CHECK_THROWS_AS(generate_matrix(101, 1, 1), ConfigError);  // 101*0.01 > 1
    CHECK_THROWS_AS(generate_matrix(1, 1, 1), ConfigError);
}

TEST_CASE("substreams are stable under cluster addition") {
    // Draws of cluster i depend only on (seed, i), never on how many
    // clusters exist.
    RandomStream a(substream_seed(42, 0xa1, 3));
    RandomStream b(substream_seed(42, 0xa1, 3));
    for (int i = 0; i < 16; ++i) CHECK(a.next_u64() == b.next_u64());

    RandomStream c(substream_seed(42, 0xa1, 4));
    CHECK(RandomStream(substream_seed(42, 0xa1, 3)).next_u64() != c.next_u64());
}
