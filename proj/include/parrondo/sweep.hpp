// sweep.hpp
// Parameter sweeps over the 21-angle domain of the quantum game (9
// initial-state angles, 12 block angles). Records stream to a sink so large
// grids run in constant memory, and every Nth closed-form value is
// re-validated against the state-vector simulation.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string_view>

#include "parrondo/quantumgame.hpp"

namespace parrondo {

// Canonical parameter order: per qubit then per block, (theta, phi, eta)
// triples: theta_q1..eta_q3 at 0..8, theta_b1..eta_b4 at 9..20.
inline constexpr std::size_t kSweepParamCount = 21;

// Canonical names, index-aligned: "theta_q1", "phi_q1", ..., "eta_b4".
std::string_view sweep_param_name(std::size_t index);

// Index for a canonical name; throws ConfigError on unknown names.
std::size_t sweep_param_index(std::string_view name);

// Valid range of a parameter: [0, pi] for thetas, [0, 2 pi] for phases.
Interval sweep_param_domain(std::size_t index);

// One axis of the sweep: a fixed value, or an interval that the grid mode
// subdivides into `points` equally spaced values and the random mode
// samples uniformly.
struct SweepParameter {
    bool fixed = true;
    double value = 0.0;  // when fixed
    Interval range{0.0, 0.0};
    std::uint64_t points = 1;  // grid mode only

    static SweepParameter at(double value);
    static SweepParameter over(Interval range, std::uint64_t points = 1);
};

struct SweepSpec {
    enum class Mode { grid, random };

    Mode mode = Mode::random;
    std::uint64_t samples = 0;  // random-mode budget
    std::array<SweepParameter, kSweepParamCount> params;
    std::uint64_t oracle_every = 1000;
    std::uint64_t max_points = 10000000;  // refuse runaway grids

    // All parameters fixed at the equal superposition with identity blocks.
    static SweepSpec defaults();

    // Total number of records the spec will produce.
    std::uint64_t total_points() const;
};

struct SweepRecord {
    std::uint64_t index;
    std::array<double, kSweepParamCount> angles;
    double p_win;
    double expected_payoff;
    GameVariant classification;
    bool oracle_checked;
};

using SweepSink = std::function<void(const SweepRecord&)>;

// Evaluates the closed form at every point, in index order. Grid mode walks
// the cartesian product row-major (the last parameter varies fastest);
// random mode draws each non-fixed parameter uniformly per point. Raises
// OracleMismatchError if a checked record deviates from the simulation by
// more than 1e-12.
void run_sweep(const SweepSpec& spec, std::uint64_t seed, const SweepSink& sink);

// Assemble the game inputs encoded by one angle vector.
ProductSpec sweep_angles_to_state(const std::array<double, kSweepParamCount>& angles);
std::array<PolarBlock, 4> sweep_angles_to_blocks(const std::array<double, kSweepParamCount>& angles);

}  // namespace parrondo
