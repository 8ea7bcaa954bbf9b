#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "tagrec/metrics.hpp"

using namespace tagrec;

namespace {

std::vector<AcceptanceRecord> records_from(const std::vector<int>& accepted, int presented) {
    std::vector<AcceptanceRecord> out;
    for (std::size_t i = 0; i < accepted.size(); ++i)
        out.push_back({"u" + std::to_string(i + 1), accepted[i], presented});
    return out;
}

} // namespace

TEST_CASE("20 users, 72 of 100 accepted: mean 3.6, 72 percent") {
    // one concrete vector summing to 72
    std::vector<int> accepted = {2, 3, 4, 5, 3, 4, 2, 5, 4, 3, 4, 5, 3, 2, 4, 4, 5, 3, 4, 3};
    int sum = 0;
    for (int a : accepted) sum += a;
    REQUIRE(sum == 72);
    auto stats = acceptance_stats(records_from(accepted, 5), 3.6);
    CHECK(stats.mean_accepted == 3.6);
    CHECK(stats.percent_accepted == 72.0);
    CHECK(stats.user_count == 20);
}

TEST_CASE("all-accepted vector has zero variance") {
    auto stats = acceptance_stats(records_from(std::vector<int>(20, 5), 5), 3.6);
    CHECK(stats.mean_accepted == 5.0);
    CHECK(stats.sem == 0.0);
    CHECK(stats.percent_accepted == 100.0);
    CHECK(stats.percent_succeeded == 100.0);
}

TEST_CASE("20 users over 3 presented, 47 accepted: mean 2.35, about 78 percent") {
    std::vector<int> accepted = {3, 2, 3, 1, 2, 3, 3, 2, 1, 3, 2, 3, 2, 3, 2, 2, 3, 3, 2, 2};
    int sum = 0;
    for (int a : accepted) sum += a;
    REQUIRE(sum == 47);
    auto stats = acceptance_stats(records_from(accepted, 3), 2.35);
    CHECK(stats.mean_accepted == 2.35);
    CHECK(stats.percent_accepted == doctest::Approx(78.33).epsilon(0.001));
}

TEST_CASE("threshold comparison is accepted >= threshold") {
    std::vector<int> accepted = {4, 3, 5, 2};
    auto stats = acceptance_stats(records_from(accepted, 5), 3.6);
    // integer counts against 3.6 means counts of 4 and 5 succeed
    CHECK(stats.percent_succeeded == 50.0);
}

TEST_CASE("threshold extremes") {
    std::vector<int> accepted = {1, 2, 3, 4};
    CHECK(acceptance_stats(records_from(accepted, 5), 0.0).percent_succeeded == 100.0);
    CHECK(acceptance_stats(records_from(accepted, 5), 6.0).percent_succeeded == 0.0);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(acceptance_stats(records_from({3}, 5), 3.6), std::invalid_argument);
    std::vector<AcceptanceRecord> bad = {{"u1", 6, 5}, {"u2", 1, 5}};
    CHECK_THROWS_AS(acceptance_stats(bad, 3.6), std::invalid_argument);
    std::vector<AcceptanceRecord> zero = {{"u1", 0, 0}, {"u2", 1, 5}};
    CHECK_THROWS_AS(acceptance_stats(zero, 3.6), std::invalid_argument);
}

TEST_CASE("scale equivariance") {
    std::vector<int> accepted = {1, 4, 2, 5, 3, 3, 2, 4};
    auto base = acceptance_stats(records_from(accepted, 5), 3.6);
    std::vector<AcceptanceRecord> scaled;
    for (std::size_t i = 0; i < accepted.size(); ++i)
        scaled.push_back({"u" + std::to_string(i), accepted[i] * 3, 15});
    auto tripled = acceptance_stats(scaled, 3.6);
    CHECK(tripled.mean_accepted == doctest::Approx(3.0 * base.mean_accepted).epsilon(1e-12));
    CHECK(tripled.percent_accepted == doctest::Approx(base.percent_accepted).epsilon(1e-12));
}

TEST_CASE("SEM matches a two-pass oracle on random vectors") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> da(0, 5), dn(2, 40);
    for (int round = 0; round < 50; ++round) {
        int n = dn(rng);
        std::vector<int> accepted;
        for (int i = 0; i < n; ++i) accepted.push_back(da(rng));
        auto stats = acceptance_stats(records_from(accepted, 5), 3.6);
        CHECK(stats.sem == doctest::Approx(oracles::two_pass_sem(accepted)).epsilon(1e-12));
    }
}

TEST_CASE("any vector summing to 72 reproduces the same aggregate figures") {
    std::mt19937 rng(43);
    for (int round = 0; round < 30; ++round) {
        // random 20-vector of 0..5 summing to 72
        std::vector<int> accepted(20, 0);
        int remaining = 72;
        std::uniform_int_distribution<std::size_t> di(0, 19);
        while (remaining > 0) {
            std::size_t i = di(rng);
            if (accepted[i] < 5) {
                ++accepted[i];
                --remaining;
            }
        }
        auto stats = acceptance_stats(records_from(accepted, 5), 3.6);
        CHECK(stats.mean_accepted == 3.6);
        CHECK(stats.percent_accepted == 72.0);
    }
}
