// quantumgame.hpp
// The quantized history-dependent game on three qubits: initial-state
// builders, game play through the block-diagonal multiplexer, the
// closed-form win probability in 21 polar angles, the equal-superposition
// special case, composed n-game sequences, and Parrondo-effect detection.
//
// Every closed form here is cross-checked against pwin_quantum_sim, which
// measures the state-vector simulation directly and serves as ground truth.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "parrondo/multiplexer.hpp"

namespace parrondo {

// Four coin blocks, one per two-step history (00, 01, 10, 11).
struct QuantumHDGame {
    std::array<PolarBlock, 4> blocks;
};

Multiplexer to_multiplexer(const QuantumHDGame& game);

struct ProductSpec {
    PolarQubit q1;
    PolarQubit q2;
    PolarQubit q3;
};

// Initial three-qubit state: an un-entangled product of polar qubits, the
// uniform superposition, or the GHZ state (entangled comparison input).
struct InitialStateSpec {
    enum class Kind { product, equal_superposition, ghz };

    Kind kind;
    std::optional<ProductSpec> product;  // engaged iff kind == product

    static InitialStateSpec equal_superposition();
    static InitialStateSpec ghz();
    static InitialStateSpec of_product(const PolarQubit& q1, const PolarQubit& q2,
                                       const PolarQubit& q3);

    // The product angles this spec evaluates to, when it has any; the equal
    // superposition is product(theta=pi/2, phi=0, eta=0) on each qubit.
    std::optional<ProductSpec> as_product() const;
};

PureState build_initial_state(const InitialStateSpec& spec);

struct WinReport {
    double p_win;
    double expected_payoff;  // 2*p_win - 1
    GameVariant classification;
};

WinReport make_win_report(double p_win);

// One play: the game's multiplexer applied to the initial 8-dim state.
PureState play(const QuantumHDGame& game, const PureState& initial);

// Ground-truth oracle: measure the win mass of the played state.
WinReport pwin_quantum_sim(const QuantumHDGame& game, const InitialStateSpec& spec);

// Closed-form win probability in the 21 polar angles (9 initial-state, 12
// block), expanded from first principles. Must agree with pwin_quantum_sim
// to 1e-12; that equality is a release gate.
double pwin_quantum_closed(const PolarQubit& q1, const PolarQubit& q2, const PolarQubit& q3,
                           const std::array<PolarBlock, 4>& blocks);

// Equal-superposition special case:
//   p_win = 1/2 - (1/8) sum_j sin(theta_j) cos(eta_j - phi_j).
double pwin_equal_superposition(const std::array<PolarBlock, 4>& blocks);

// Plays all games as one composed multiplexer (no intermediate measurement).
WinReport play_sequence(std::span<const QuantumHDGame> games, const InitialStateSpec& spec);

// Angle-addition formula for an n-game sequence from the equal superposition
// with all phases zero:
//   p_win = 1/2 - (1/8) sum_j sin(sum_k theta[k][j]).
// theta[k][j] is game k's angle for history j, each in [0, pi]; the inner
// sums range over [0, n pi]. Exact only in the zero-phase regime.
double pwin_sequence_formula(std::span<const std::array<double, 4>> theta);

struct QuantumParrondoReport {
    std::vector<WinReport> per_game;  // each game alone, equal superposition
    WinReport sequence;               // composed sequence, via simulation
    double formula_pwin;              // angle-addition formula value
    bool effect;                      // all singles losing AND sequence winning
};

// Zero-phase, equal-superposition regime: evaluates every single game and
// the composed sequence, cross-checks the formula against the simulation,
// and reports whether the Parrondo effect is present. n = 1 never counts.
QuantumParrondoReport detect_quantum_parrondo(std::span<const std::array<double, 4>> theta);

// 2p - 1 for p in [0,1].
double expected_payoff(double p_win);

}  // namespace parrondo
