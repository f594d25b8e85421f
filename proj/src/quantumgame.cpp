#include "parrondo/quantumgame.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace parrondo {

namespace {

constexpr double kPi = std::numbers::pi;

PolarQubit equal_superposition_qubit() { return PolarQubit(kPi / 2.0, 0.0, 0.0); }

}  // namespace

Multiplexer to_multiplexer(const QuantumHDGame& game) {
    std::vector<SU2Block> blocks;
    blocks.reserve(4);
    for (const auto& p : game.blocks) blocks.push_back(block_from_polar(p));
    return Multiplexer(std::move(blocks));
}

InitialStateSpec InitialStateSpec::equal_superposition() {
    return InitialStateSpec{Kind::equal_superposition, std::nullopt};
}

InitialStateSpec InitialStateSpec::ghz() { return InitialStateSpec{Kind::ghz, std::nullopt}; }

InitialStateSpec InitialStateSpec::of_product(const PolarQubit& q1, const PolarQubit& q2,
                                              const PolarQubit& q3) {
    return InitialStateSpec{Kind::product, ProductSpec{q1, q2, q3}};
}

std::optional<ProductSpec> InitialStateSpec::as_product() const {
    switch (kind) {
        case Kind::product: return product;
        case Kind::equal_superposition:
            return ProductSpec{equal_superposition_qubit(), equal_superposition_qubit(),
                               equal_superposition_qubit()};
        case Kind::ghz: return std::nullopt;
    }
    return std::nullopt;
}

PureState build_initial_state(const InitialStateSpec& spec) {
    switch (spec.kind) {
        case InitialStateSpec::Kind::product: {
            if (!spec.product) {
                throw std::invalid_argument("initial state: product spec missing qubits");
            }
            return tensor({qubit_from_polar(spec.product->q1), qubit_from_polar(spec.product->q2),
                           qubit_from_polar(spec.product->q3)});
        }
        case InitialStateSpec::Kind::equal_superposition: {
            const double amp = 1.0 / std::sqrt(8.0);
            return PureState(std::vector<Complex>(8, Complex{amp, 0.0}));
        }
        case InitialStateSpec::Kind::ghz: {
            std::vector<Complex> amps(8, Complex{0.0, 0.0});
            amps[0] = amps[7] = Complex{1.0 / std::sqrt(2.0), 0.0};
            return PureState(std::move(amps));
        }
    }
    throw std::invalid_argument("initial state: unknown kind");
}

WinReport make_win_report(double p_win) {
    return WinReport{p_win, 2.0 * p_win - 1.0, classify_payoff(p_win)};
}

PureState play(const QuantumHDGame& game, const PureState& initial) {
    if (initial.dim() != 8) {
        throw std::invalid_argument("play: initial state must have 8 amplitudes");
    }
    return to_multiplexer(game).apply(initial);
}

WinReport pwin_quantum_sim(const QuantumHDGame& game, const InitialStateSpec& spec) {
    return make_win_report(win_probability(play(game, build_initial_state(spec))));
}

double pwin_quantum_closed(const PolarQubit& q1, const PolarQubit& q2, const PolarQubit& q3,
                           const std::array<PolarBlock, 4>& blocks) {
    // Weights over the four histories from the first two qubits; only the
    // moduli |q_k1|^2, |q_k2|^2 enter, so their phases drop out.
    const double w1_loss = std::cos(q1.theta / 2.0) * std::cos(q1.theta / 2.0);
    const double w1_win = std::sin(q1.theta / 2.0) * std::sin(q1.theta / 2.0);
    const double w2_loss = std::cos(q2.theta / 2.0) * std::cos(q2.theta / 2.0);
    const double w2_win = std::sin(q2.theta / 2.0) * std::sin(q2.theta / 2.0);
    const std::array<double, 4> weight{w1_loss * w2_loss, w1_loss * w2_win,
                                       w1_win * w2_loss, w1_win * w2_win};

    // Per history j the win amplitude is conj(a_j) q32 - conj(b_j) q31, so
    //   |.|^2 = cos^2(theta_j/2) sin^2(theta_q3/2)
    //         + sin^2(theta_j/2) cos^2(theta_q3/2)
    //         - 2 cos(phi_j - eta_j + phi_q3 - eta_q3)
    //             cos(theta_j/2) sin(theta_j/2) cos(theta_q3/2) sin(theta_q3/2).
    const double c3 = std::cos(q3.theta / 2.0);
    const double s3 = std::sin(q3.theta / 2.0);

    double p_win = 0.0;
    for (int j = 0; j < 4; ++j) {
        const PolarBlock& blk = blocks[static_cast<std::size_t>(j)];
        const double cj = std::cos(blk.theta / 2.0);
        const double sj = std::sin(blk.theta / 2.0);
        const double cross = std::cos(blk.phi - blk.eta + q3.phi - q3.eta);
        const double win_mass =
            cj * cj * s3 * s3 + sj * sj * c3 * c3 - 2.0 * cross * cj * sj * c3 * s3;
        p_win += weight[static_cast<std::size_t>(j)] * win_mass;
    }
    return p_win;
}

double pwin_equal_superposition(const std::array<PolarBlock, 4>& blocks) {
    double sum = 0.0;
    for (const auto& blk : blocks) sum += std::sin(blk.theta) * std::cos(blk.eta - blk.phi);
    return 0.5 - sum / 8.0;
}

WinReport play_sequence(std::span<const QuantumHDGame> games, const InitialStateSpec& spec) {
    if (games.empty()) throw std::invalid_argument("play_sequence: empty game list");
    Multiplexer combined = to_multiplexer(games[0]);
    for (std::size_t k = 1; k < games.size(); ++k) {
        combined = compose(combined, to_multiplexer(games[k]));
    }
    return make_win_report(win_probability(combined.apply(build_initial_state(spec))));
}

double pwin_sequence_formula(std::span<const std::array<double, 4>> theta) {
    if (theta.empty()) throw std::invalid_argument("sequence formula: empty angle table");
    double sum = 0.0;
    for (int j = 0; j < 4; ++j) {
        double total = 0.0;
        for (const auto& game : theta) {
            const double t = game[static_cast<std::size_t>(j)];
            if (!std::isfinite(t) || t < 0.0 || t > kPi) {
                throw std::invalid_argument("sequence formula: theta must lie in [0, pi]");
            }
            total += t;
        }
        sum += std::sin(total);
    }
    return 0.5 - sum / 8.0;
}

QuantumParrondoReport detect_quantum_parrondo(std::span<const std::array<double, 4>> theta) {
    if (theta.empty()) throw std::invalid_argument("detect_quantum_parrondo: empty table");

    std::vector<QuantumHDGame> games;
    games.reserve(theta.size());
    for (const auto& row : theta) {
        games.push_back(QuantumHDGame{{PolarBlock(row[0], 0.0, 0.0), PolarBlock(row[1], 0.0, 0.0),
                                       PolarBlock(row[2], 0.0, 0.0),
                                       PolarBlock(row[3], 0.0, 0.0)}});
    }

    QuantumParrondoReport report;
    bool all_losing = true;
    for (const auto& game : games) {
        WinReport single = make_win_report(pwin_equal_superposition(game.blocks));
        if (single.classification != GameVariant::losing) all_losing = false;
        report.per_game.push_back(single);
    }

    const auto spec = InitialStateSpec::equal_superposition();
    report.sequence = play_sequence(games, spec);
    report.formula_pwin = pwin_sequence_formula(theta);
    if (std::abs(report.formula_pwin - report.sequence.p_win) > kEqTol) {
        throw OracleMismatchError("sequence formula deviates from simulation by " +
                                  format_double(std::abs(report.formula_pwin -
                                                         report.sequence.p_win)));
    }

    report.effect = theta.size() >= 2 && all_losing &&
                    report.sequence.classification == GameVariant::winning;
    return report;
}

double expected_payoff(double p_win) {
    if (!std::isfinite(p_win) || p_win < 0.0 || p_win > 1.0) {
        throw std::invalid_argument("expected_payoff: probability must lie in [0,1]");
    }
    return 2.0 * p_win - 1.0;
}

}  // namespace parrondo
