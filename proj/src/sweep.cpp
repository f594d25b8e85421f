#include "parrondo/sweep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace parrondo {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<std::string_view, kSweepParamCount> kParamNames{
    "theta_q1", "phi_q1", "eta_q1", "theta_q2", "phi_q2", "eta_q2",
    "theta_q3", "phi_q3", "eta_q3", "theta_b1", "phi_b1",  "eta_b1",
    "theta_b2", "phi_b2", "eta_b2", "theta_b3", "phi_b3",  "eta_b3",
    "theta_b4", "phi_b4", "eta_b4"};

void validate_spec(const SweepSpec& spec) {
    for (std::size_t i = 0; i < kSweepParamCount; ++i) {
        const SweepParameter& p = spec.params[i];
        const Interval domain = sweep_param_domain(i);
        const auto in_domain = [&](double v) {
            return std::isfinite(v) && v >= domain.lo && v <= domain.hi;
        };
        if (p.fixed) {
            if (!in_domain(p.value)) {
                throw ConfigError(std::string(kParamNames[i]) + ": fixed value out of range");
            }
        } else {
            if (!in_domain(p.range.lo) || !in_domain(p.range.hi) || p.range.lo > p.range.hi) {
                throw ConfigError(std::string(kParamNames[i]) + ": invalid sweep interval");
            }
            if (spec.mode == SweepSpec::Mode::grid && p.points < 1) {
                throw ConfigError(std::string(kParamNames[i]) + ": grid needs >= 1 points");
            }
        }
    }
    if (spec.oracle_every < 1) throw ConfigError("oracle_every must be >= 1");
    if (spec.total_points() > spec.max_points) {
        throw ConfigError("sweep would produce " + std::to_string(spec.total_points()) +
                          " points, above the limit of " + std::to_string(spec.max_points));
    }
}

}  // namespace

std::string_view sweep_param_name(std::size_t index) { return kParamNames.at(index); }

std::size_t sweep_param_index(std::string_view name) {
    for (std::size_t i = 0; i < kSweepParamCount; ++i) {
        if (kParamNames[i] == name) return i;
    }
    throw ConfigError("unknown sweep parameter: " + std::string(name));
}

Interval sweep_param_domain(std::size_t index) {
    // Index 0 of each (theta, phi, eta) triple is the theta.
    return index % 3 == 0 ? Interval{0.0, kPi} : Interval{0.0, 2.0 * kPi};
}

SweepParameter SweepParameter::at(double value) {
    SweepParameter p;
    p.fixed = true;
    p.value = value;
    return p;
}

SweepParameter SweepParameter::over(Interval range, std::uint64_t points) {
    SweepParameter p;
    p.fixed = false;
    p.range = range;
    p.points = points;
    return p;
}

SweepSpec SweepSpec::defaults() {
    SweepSpec spec;
    for (std::size_t i = 0; i < kSweepParamCount; ++i) {
        // Equal-superposition qubits, identity blocks.
        const bool is_qubit_theta = i < 9 && i % 3 == 0;
        spec.params[i] = SweepParameter::at(is_qubit_theta ? kPi / 2.0 : 0.0);
    }
    return spec;
}

std::uint64_t SweepSpec::total_points() const {
    if (mode == Mode::random) return samples;
    std::uint64_t total = 1;
    for (const auto& p : params) {
        const std::uint64_t n = p.fixed ? 1 : p.points;
        if (n != 0 && total > max_points / n + 1) return max_points + 1;  // saturate
        total *= n;
    }
    return total;
}

ProductSpec sweep_angles_to_state(const std::array<double, kSweepParamCount>& a) {
    return ProductSpec{PolarQubit(a[0], a[1], a[2]), PolarQubit(a[3], a[4], a[5]),
                       PolarQubit(a[6], a[7], a[8])};
}

std::array<PolarBlock, 4> sweep_angles_to_blocks(
    const std::array<double, kSweepParamCount>& a) {
    return {PolarBlock(a[9], a[10], a[11]), PolarBlock(a[12], a[13], a[14]),
            PolarBlock(a[15], a[16], a[17]), PolarBlock(a[18], a[19], a[20])};
}

void run_sweep(const SweepSpec& spec, std::uint64_t seed, const SweepSink& sink) {
    validate_spec(spec);
    const std::uint64_t total = spec.total_points();
    if (total == 0) return;

    Rng rng(derive_seed(seed, "sweep/points"));
    std::array<std::uint64_t, kSweepParamCount> grid_pos{};  // grid-mode odometer

    for (std::uint64_t index = 0; index < total; ++index) {
        std::array<double, kSweepParamCount> angles{};
        for (std::size_t i = 0; i < kSweepParamCount; ++i) {
            const SweepParameter& p = spec.params[i];
            if (p.fixed) {
                angles[i] = p.value;
            } else if (spec.mode == SweepSpec::Mode::random) {
                angles[i] = rng.uniform_in(p.range.lo, p.range.hi);
            } else {
                angles[i] = p.points == 1
                                ? p.range.lo
                                : p.range.lo + (p.range.hi - p.range.lo) *
                                                   static_cast<double>(grid_pos[i]) /
                                                   static_cast<double>(p.points - 1);
            }
        }

        const ProductSpec state = sweep_angles_to_state(angles);
        const auto blocks = sweep_angles_to_blocks(angles);
        const double p_win = pwin_quantum_closed(state.q1, state.q2, state.q3, blocks);

        const bool check = index % spec.oracle_every == 0;
        if (check) {
            const QuantumHDGame game{blocks};
            const auto init = InitialStateSpec::of_product(state.q1, state.q2, state.q3);
            const double simulated = pwin_quantum_sim(game, init).p_win;
            if (std::abs(simulated - p_win) > kEqTol) {
                throw OracleMismatchError(
                    "sweep record " + std::to_string(index) + ": closed form " +
                    format_double(p_win) + " vs simulation " + format_double(simulated));
            }
        }

        sink(SweepRecord{index, angles, p_win, 2.0 * p_win - 1.0, classify_payoff(p_win),
                         check});

        if (spec.mode == SweepSpec::Mode::grid) {
            // Advance the odometer, last parameter fastest.
            for (std::size_t i = kSweepParamCount; i-- > 0;) {
                const std::uint64_t limit = spec.params[i].fixed ? 1 : spec.params[i].points;
                if (++grid_pos[i] < limit) break;
                grid_pos[i] = 0;
            }
        }
    }
}

}  // namespace parrondo
