#include "parrondo/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace parrondo {

namespace {

constexpr std::uint64_t kBurnIn = 1000;
constexpr std::uint64_t kMaxPowerIterations = 1000000;
constexpr double kResidual = 1e-12;

void check_probability(double p, const char* field) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        throw std::invalid_argument(std::string(field) + ": probability must lie in [0,1]");
    }
}

// Row-stochastic transition matrix of the history chain for one play of the
// given game: history (x2,x1) moves to (x1,outcome).
using Transition = std::array<std::array<double, 4>, 4>;

Transition transition_matrix(const ScheduleGame& game) {
    Transition t{};
    for (int j = 0; j < 4; ++j) {
        const double p = std::holds_alternative<GameA>(game)
                             ? std::get<GameA>(game).p_win
                             : std::get<ClassicalHDGame>(game).coin(j);
        const int next_win = ((j & 1) << 1) | 1;
        const int next_loss = (j & 1) << 1;
        t[j][next_win] += p;
        t[j][next_loss] += 1.0 - p;
    }
    return t;
}

std::array<double, 4> step(const std::array<double, 4>& pi, const Transition& t) {
    std::array<double, 4> out{};
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) out[k] += pi[j] * t[j][k];
    }
    return out;
}

// Power iteration for the stationary row vector of a period map. `apply_period`
// advances a distribution by one full period.
template <typename ApplyPeriod>
std::array<double, 4> stationary_of(const ApplyPeriod& apply_period) {
    std::array<double, 4> pi{0.25, 0.25, 0.25, 0.25};
    for (std::uint64_t it = 0; it < kMaxPowerIterations; ++it) {
        std::array<double, 4> next = apply_period(pi);
        double total = 0.0;
        for (double x : next) total += x;
        for (double& x : next) x /= total;
        double residual = 0.0;
        for (int k = 0; k < 4; ++k) residual = std::max(residual, std::abs(next[k] - pi[k]));
        pi = next;
        if (residual < kResidual) return pi;
    }
    throw ReducibleChainError("stationary distribution did not converge");
}

double win_prob(const ScheduleGame& game, int history) {
    return std::holds_alternative<GameA>(game) ? std::get<GameA>(game).p_win
                                               : std::get<ClassicalHDGame>(game).coin(history);
}

}  // namespace

GameA::GameA(double p_win_in) : p_win(p_win_in) { check_probability(p_win, "GameA.p_win"); }

ClassicalHDGame::ClassicalHDGame(double p1_in, double p2_in, double p3_in, double p4_in)
    : p1(p1_in), p2(p2_in), p3(p3_in), p4(p4_in) {
    check_probability(p1, "p1");
    check_probability(p2, "p2");
    check_probability(p3, "p3");
    check_probability(p4, "p4");
}

double ClassicalHDGame::coin(int history) const {
    switch (history) {
        case 0: return p1;
        case 1: return p2;
        case 2: return p3;
        case 3: return p4;
        default: throw std::invalid_argument("history index must be in [0,3]");
    }
}

double pwin_closed_form(const ClassicalHDGame& g) {
    const double numerator = g.p1 * (g.p2 + 1.0 - g.p4);
    const double denominator = (1.0 - g.p4) * (2.0 * g.p1 + 1.0 - g.p3) + g.p1 * g.p2;
    if (denominator <= 1e-12) {
        throw DegenerateChainError("closed form undefined: denominator " +
                                   std::to_string(denominator));
    }
    return numerator / denominator;
}

std::array<double, 4> stationary_distribution(const ClassicalHDGame& g) {
    for (int j = 0; j < 4; ++j) {
        const double p = g.coin(j);
        if (p <= 0.0 || p >= 1.0) {
            throw ReducibleChainError("coin p" + std::to_string(j + 1) +
                                      " on the boundary; chain not irreducible");
        }
    }
    const Transition t = transition_matrix(ScheduleGame{g});
    return stationary_of([&](const std::array<double, 4>& pi) { return step(pi, t); });
}

GameClassification classify(const ClassicalHDGame& g) {
    const double s = g.p1 * (g.p2 + 1.0 - g.p4);
    if (s <= 0.0) {
        throw DegenerateChainError("classification undefined: s = " + std::to_string(s));
    }
    const double c = (1.0 - g.p4) * (1.0 - g.p3) - g.p1 * g.p2;
    GameVariant variant = GameVariant::losing;
    if (std::abs(c) <= kEqTol) {
        variant = GameVariant::fair;
    } else if (c < 0.0) {
        variant = GameVariant::winning;
    }
    return GameClassification{variant, c, s};
}

SimulationResult simulate_sequence(std::span<const ScheduleGame> schedule,
                                   std::uint64_t steps, std::uint64_t seed) {
    if (schedule.empty()) throw std::invalid_argument("simulate_sequence: empty schedule");
    if (steps < 1) throw std::invalid_argument("simulate_sequence: steps must be >= 1");

    Rng rng(seed);
    int history = static_cast<int>(rng.below(4));

    std::uint64_t wins = 0;
    // The schedule position advances from step 0 through the burn-in, so the
    // counted window starts wherever the cycle left off.
    for (std::uint64_t t = 0; t < kBurnIn + steps; ++t) {
        const ScheduleGame& game = schedule[t % schedule.size()];
        const bool won = rng.bernoulli(win_prob(game, history));
        history = ((history & 1) << 1) | (won ? 1 : 0);
        if (t >= kBurnIn && won) ++wins;
    }

    const double mean = 2.0 * static_cast<double>(wins) / static_cast<double>(steps) - 1.0;
    // Payoffs are +-1, so Var = 1 - mean^2.
    const double variance = std::max(0.0, 1.0 - mean * mean);
    const double std_error = std::sqrt(variance / static_cast<double>(steps));
    return SimulationResult{mean, std_error, steps};
}

double periodic_schedule_pwin(std::span<const ScheduleGame> schedule) {
    if (schedule.empty()) throw std::invalid_argument("periodic_schedule_pwin: empty schedule");
    for (const auto& game : schedule) {
        for (int j = 0; j < 4; ++j) {
            const double p = win_prob(game, j);
            if (p <= 0.0 || p >= 1.0) {
                throw ReducibleChainError("boundary probability in schedule");
            }
        }
    }

    std::vector<Transition> transitions;
    transitions.reserve(schedule.size());
    for (const auto& game : schedule) transitions.push_back(transition_matrix(game));

    const auto period = [&](const std::array<double, 4>& pi) {
        std::array<double, 4> out = pi;
        for (const auto& t : transitions) out = step(out, t);
        return out;
    };
    std::array<double, 4> pi = stationary_of(period);

    // Average the per-phase win probabilities over one period.
    double p_win = 0.0;
    for (std::size_t m = 0; m < schedule.size(); ++m) {
        for (int j = 0; j < 4; ++j) p_win += pi[j] * win_prob(schedule[m], j);
        pi = step(pi, transitions[m]);
    }
    return p_win / static_cast<double>(schedule.size());
}

std::vector<ScheduleGame> make_schedule(const std::string& pattern, const GameA& a,
                                        const ClassicalHDGame& b) {
    if (pattern.empty()) throw std::invalid_argument("schedule pattern is empty");
    std::vector<ScheduleGame> schedule;
    schedule.reserve(pattern.size());
    for (char c : pattern) {
        if (c == 'A') {
            schedule.emplace_back(a);
        } else if (c == 'B') {
            schedule.emplace_back(b);
        } else {
            throw std::invalid_argument("schedule pattern may contain only 'A' and 'B'");
        }
    }
    return schedule;
}

std::vector<ParrondoInstance> find_parrondo_samples(const ParrondoSearchSpec& spec,
                                                    std::uint64_t seed) {
    std::vector<ParrondoInstance> found;
    if (spec.budget == 0) return found;

    Rng rng(derive_seed(seed, "parrondo-region/sample"));
    for (std::uint64_t i = 0; i < spec.budget && found.size() < spec.max_results; ++i) {
        const GameA a(rng.uniform_in(spec.a_win.lo, spec.a_win.hi));
        const ClassicalHDGame b(rng.uniform_in(spec.p1.lo, spec.p1.hi),
                                rng.uniform_in(spec.p2.lo, spec.p2.hi),
                                rng.uniform_in(spec.p3.lo, spec.p3.hi),
                                rng.uniform_in(spec.p4.lo, spec.p4.hi));

        // Both component games must lose on their own.
        if (a.p_win >= 0.5) continue;
        const GameClassification b_class = classify(b);
        if (b_class.variant != GameVariant::losing) continue;

        const auto schedule = make_schedule(spec.schedule_pattern, a, b);
        const double analytic_pwin = periodic_schedule_pwin(schedule);
        const double analytic_payoff = 2.0 * analytic_pwin - 1.0;
        if (analytic_payoff < spec.min_payoff) continue;

        // Confirm by simulation with a seed derived from the sample index.
        const std::uint64_t sim_seed =
            derive_seed(seed, "parrondo-region/validate" + std::to_string(i));
        const SimulationResult validation =
            simulate_sequence(schedule, spec.validation_steps, sim_seed);
        if (validation.mean_payoff <= 3.0 * validation.std_error) continue;

        found.push_back(ParrondoInstance{a, b, spec.schedule_pattern, b_class,
                                         analytic_pwin, analytic_payoff, validation});
    }
    return found;
}

}  // namespace parrondo
