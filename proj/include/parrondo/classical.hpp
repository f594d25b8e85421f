// classical.hpp
// Classical Parrondo games: the biased coin game A, the history-dependent
// game B with four conditional coins, closed-form and Markov-stationary win
// probabilities, c/s classification, Monte Carlo schedule simulation, and
// sampling for parameter points that exhibit the Parrondo effect.
//
// History encoding: state j = (before-last << 1) | last with 1 = win, so
//   j = 0 (loss,loss) -> coin p1      j = 1 (loss,win) -> coin p2
//   j = 2 (win,loss)  -> coin p3      j = 3 (win,win)  -> coin p4

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "parrondo/common.hpp"

namespace parrondo {

// One biased coin; the player wins a unit with probability p_win.
struct GameA {
    double p_win;

    explicit GameA(double p_win_in);
};

// The two-step history game: win probability p_{j+1} after history j.
struct ClassicalHDGame {
    double p1;
    double p2;
    double p3;
    double p4;

    ClassicalHDGame(double p1_in, double p2_in, double p3_in, double p4_in);

    // Coin fired by history j in [0, 3].
    double coin(int history) const;
};

struct GameClassification {
    GameVariant variant;
    double c;  // (1-p4)(1-p3) - p1*p2; negative means winning
    double s;  // p1*(p2+1-p4); positive for interior games
};

// Closed-form stationary win probability
//   p_win = p1(p2+1-p4) / ((1-p4)(2p1+1-p3) + p1 p2).
// Throws DegenerateChainError when the denominator vanishes.
double pwin_closed_form(const ClassicalHDGame& game);

// Stationary distribution of the 4-state history chain, solved by power
// iteration to residual < 1e-12. Requires every coin strictly inside (0,1);
// otherwise ReducibleChainError.
std::array<double, 4> stationary_distribution(const ClassicalHDGame& game);

// p_win = 1/(2 + c/s): winning iff c < 0, fair iff |c| <= 1e-12.
GameClassification classify(const ClassicalHDGame& game);

using ScheduleGame = std::variant<GameA, ClassicalHDGame>;

struct SimulationResult {
    double mean_payoff;  // average of the +-1 payoffs per counted step
    double std_error;
    std::uint64_t steps;
};

// Plays the schedule cyclically for `steps` counted steps after a 1000-step
// burn-in, history seeded uniformly at random. Deterministic per seed.
SimulationResult simulate_sequence(std::span<const ScheduleGame> schedule,
                                   std::uint64_t steps, std::uint64_t seed);

// Exact long-run win probability of a periodic schedule, from the
// stationary distribution of the one-period product chain.
double periodic_schedule_pwin(std::span<const ScheduleGame> schedule);

// Sampling box and budget for the Parrondo-region search. The defaults
// bracket the textbook corner where game B sits near its fair surface.
struct ParrondoSearchSpec {
    std::uint64_t budget = 10000;
    Interval a_win{0.470, 0.499};
    Interval p1{0.75, 0.95};
    Interval p2{0.10, 0.40};
    Interval p3{0.10, 0.40};
    Interval p4{0.55, 0.85};
    std::string schedule_pattern = "AB";  // cycled; 'A' or 'B' per step
    double min_payoff = 4e-3;             // floor on the analytic schedule payoff
    std::uint64_t validation_steps = 200000;
    std::size_t max_results = 16;
};

// One sampled point where both component games lose but the schedule wins.
struct ParrondoInstance {
    GameA a;
    ClassicalHDGame b;
    std::string schedule_pattern;
    GameClassification b_class;
    double analytic_pwin;    // exact periodic-schedule win probability
    double analytic_payoff;  // 2*analytic_pwin - 1
    SimulationResult validation;
};

// Random sampling over the spec's box. A point qualifies when game A and
// game B each classify losing, the analytic schedule payoff exceeds the
// floor, and a confirmation simulation agrees at 3 standard errors.
std::vector<ParrondoInstance> find_parrondo_samples(const ParrondoSearchSpec& spec,
                                                    std::uint64_t seed);

// Expands a pattern like "AB" or "AABB" into a concrete schedule.
std::vector<ScheduleGame> make_schedule(const std::string& pattern, const GameA& a,
                                        const ClassicalHDGame& b);

}  // namespace parrondo
