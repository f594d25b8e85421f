#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "parrondo/sweep.hpp"

using namespace parrondo;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<SweepRecord> collect(const SweepSpec& spec, std::uint64_t seed) {
    std::vector<SweepRecord> records;
    run_sweep(spec, seed, [&](const SweepRecord& r) { records.push_back(r); });
    return records;
}

}  // namespace

TEST_CASE("sweep parameters are named and bounded canonically") {
    CHECK(sweep_param_name(0) == "theta_q1");
    CHECK(sweep_param_name(8) == "eta_q3");
    CHECK(sweep_param_name(9) == "theta_b1");
    CHECK(sweep_param_name(20) == "eta_b4");
    CHECK(sweep_param_index("theta_b2") == 12);
    CHECK_THROWS_AS(sweep_param_index("theta_b9"), ConfigError);

    // Thetas live on [0, pi], phases on [0, 2 pi].
    for (std::size_t i = 0; i < kSweepParamCount; ++i) {
        const Interval d = sweep_param_domain(i);
        CHECK(d.lo == 0.0);
        CHECK(d.hi == doctest::Approx(i % 3 == 0 ? kPi : 2 * kPi));
    }
}

TEST_CASE("sweep specs validate before running") {
    SUBCASE("defaults describe a single equal-superposition identity point") {
        SweepSpec spec = SweepSpec::defaults();
        spec.mode = SweepSpec::Mode::grid;
        CHECK(spec.total_points() == 1);
        const auto records = collect(spec, 1);
        REQUIRE(records.size() == 1);
        CHECK(records[0].p_win == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(records[0].classification == GameVariant::fair);
    }
    SUBCASE("out-of-domain fixed values are rejected") {
        SweepSpec spec = SweepSpec::defaults();
        spec.mode = SweepSpec::Mode::grid;
        spec.params[0] = SweepParameter::at(kPi + 0.5);
        CHECK_THROWS_AS(collect(spec, 1), ConfigError);
    }
    SUBCASE("grids beyond max_points are refused") {
        SweepSpec spec = SweepSpec::defaults();
        spec.mode = SweepSpec::Mode::grid;
        for (std::size_t i = 9; i < 21; i += 3) {
            spec.params[i] = SweepParameter::over(Interval{0, kPi}, 1000);
        }
        spec.max_points = 1000000;
        CHECK(spec.total_points() > spec.max_points);
        CHECK_THROWS_AS(collect(spec, 1), ConfigError);
    }
    SUBCASE("a zero-sample random sweep emits nothing") {
        SweepSpec spec = SweepSpec::defaults();
        spec.samples = 0;
        CHECK(collect(spec, 1).empty());
    }
}

TEST_CASE("grid mode walks the cartesian product, last parameter fastest") {
    SweepSpec spec = SweepSpec::defaults();
    spec.mode = SweepSpec::Mode::grid;
    spec.params[9] = SweepParameter::over(Interval{0, kPi}, 3);   // theta_b1
    spec.params[12] = SweepParameter::over(Interval{0, kPi}, 2);  // theta_b2
    spec.oracle_every = 1;

    const auto records = collect(spec, 7);
    REQUIRE(records.size() == 6);
    // theta_b2 (the later axis) cycles fastest.
    CHECK(records[0].angles[9] == doctest::Approx(0.0));
    CHECK(records[0].angles[12] == doctest::Approx(0.0));
    CHECK(records[1].angles[9] == doctest::Approx(0.0));
    CHECK(records[1].angles[12] == doctest::Approx(kPi));
    CHECK(records[2].angles[9] == doctest::Approx(kPi / 2));
    CHECK(records[2].angles[12] == doctest::Approx(0.0));
    CHECK(records[5].angles[9] == doctest::Approx(kPi));
    CHECK(records[5].angles[12] == doctest::Approx(kPi));
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].index == i);
        CHECK(records[i].oracle_checked);
        CHECK(records[i].expected_payoff ==
              doctest::Approx(2 * records[i].p_win - 1).epsilon(1e-12));
    }
}

TEST_CASE("zero-phase theta grids never beat fair from the equal superposition") {
    SweepSpec spec = SweepSpec::defaults();
    spec.mode = SweepSpec::Mode::grid;
    for (std::size_t i = 9; i < 21; i += 3) {
        spec.params[i] = SweepParameter::over(Interval{0, kPi}, 5);
    }
    spec.oracle_every = 100;
    const auto records = collect(spec, 11);
    REQUIRE(records.size() == 625);
    for (const auto& r : records) {
        CHECK(r.p_win <= 0.5 + 1e-12);
    }
}

TEST_CASE("random mode is deterministic in the seed") {
    SweepSpec spec = SweepSpec::defaults();
    spec.samples = 50;
    for (std::size_t i = 0; i < kSweepParamCount; ++i) {
        const Interval d = sweep_param_domain(i);
        spec.params[i] = SweepParameter::over(d);
    }
    spec.oracle_every = 10;

    const auto first = collect(spec, 99);
    const auto second = collect(spec, 99);
    REQUIRE(first.size() == 50);
    REQUIRE(second.size() == 50);
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].angles == second[i].angles);
        CHECK(first[i].p_win == second[i].p_win);
        CHECK(first[i].oracle_checked == (i % 10 == 0));
    }

    const auto other_seed = collect(spec, 100);
    CHECK(other_seed[0].angles != first[0].angles);
}

TEST_CASE("sweep angle vectors reassemble into game inputs") {
    std::array<double, kSweepParamCount> angles{};
    for (std::size_t i = 0; i < 9; i += 3) angles[i] = kPi / 2;
    angles[9] = 3 * kPi / 4;
    angles[12] = 3 * kPi / 4;
    angles[15] = 3 * kPi / 4;
    angles[18] = 3 * kPi / 4;
    const ProductSpec state = sweep_angles_to_state(angles);
    CHECK(state.q1.theta == doctest::Approx(kPi / 2));
    const auto blocks = sweep_angles_to_blocks(angles);
    CHECK(blocks[3].theta == doctest::Approx(3 * kPi / 4));
    // This point is the known losing single game.
    const double p = pwin_quantum_closed(state.q1, state.q2, state.q3, blocks);
    CHECK(p == doctest::Approx(0.5 - std::sqrt(2.0) / 4.0).epsilon(1e-12));
}
