// parrondo_main.cpp
// Command-line front end. Subcommands:
//   classical classify|simulate|region
//   quantum play|sequence|sweep
//   compare
// One JSON config document per run; --seed/--format/--out/--oracle-every
// override the matching config fields. Exit codes: 0 ok, 2 config error,
// 3 degenerate classical chain, 4 closed-form/simulation mismatch.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>

#include "parrondo/config.hpp"

namespace parrondo {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Flags {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> format;
    std::optional<std::string> out;
    std::optional<std::uint64_t> oracle_every;
};

void apply_flags(const Flags& flags, CommonConfig& common) {
    if (flags.seed) common.seed = *flags.seed;
    if (flags.format) common.format = format_from_name(*flags.format);
    if (flags.out) common.out_path = *flags.out;
    if (flags.oracle_every) {
        if (*flags.oracle_every < 1) throw ConfigError("--oracle-every: must be >= 1");
        common.oracle_every = *flags.oracle_every;
    }
}

// Opens the output stream; file when configured, stdout otherwise.
class OutputStream {
public:
    explicit OutputStream(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

    void finish() {
        stream().flush();
        if (!stream()) throw std::runtime_error("write failure on output stream");
    }

private:
    std::ofstream file_;
};

void push_angles(Record& rec, const char* names[], const double* values, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) rec.push_back({names[i], Value{values[i]}});
}

int run_classical_classify(const Flags& flags) {
    auto cfg = load_classical_classify(load_config_file(flags.config_path));
    apply_flags(flags, cfg.common);

    const GameClassification cls = classify(cfg.game);
    const double p_win = pwin_closed_form(cfg.game);

    double sim_mean = kNaN, sim_err = kNaN;
    std::int64_t sim_steps = 0;
    if (cfg.validate_steps > 0) {
        const std::vector<ScheduleGame> schedule{ScheduleGame{cfg.game}};
        const auto sim = simulate_sequence(schedule, cfg.validate_steps,
                                           derive_seed(cfg.common.seed, "classical/classify"));
        sim_mean = sim.mean_payoff;
        sim_err = sim.std_error;
        sim_steps = static_cast<std::int64_t>(sim.steps);
    }

    OutputStream out(cfg.common.out_path);
    RecordWriter writer(out.stream(), cfg.common.format);
    writer.write(Record{{"p1", Value{cfg.game.p1}},
                        {"p2", Value{cfg.game.p2}},
                        {"p3", Value{cfg.game.p3}},
                        {"p4", Value{cfg.game.p4}},
                        {"p_win", Value{p_win}},
                        {"c", Value{cls.c}},
                        {"s", Value{cls.s}},
                        {"classification", Value{std::string(variant_name(cls.variant))}},
                        {"sim_mean_payoff", Value{sim_mean}},
                        {"sim_std_error", Value{sim_err}},
                        {"sim_steps", Value{sim_steps}}});
    out.finish();
    return 0;
}

int run_classical_simulate(const Flags& flags) {
    auto cfg = load_classical_simulate(load_config_file(flags.config_path));
    apply_flags(flags, cfg.common);

    const auto result = simulate_sequence(cfg.schedule, cfg.steps,
                                          derive_seed(cfg.common.seed, "classical/simulate"));

    OutputStream out(cfg.common.out_path);
    RecordWriter writer(out.stream(), cfg.common.format);
    writer.write(Record{{"steps", Value{static_cast<std::int64_t>(result.steps)}},
                        {"schedule_len", Value{static_cast<std::int64_t>(cfg.schedule.size())}},
                        {"seed", Value{static_cast<std::int64_t>(cfg.common.seed)}},
                        {"mean_payoff", Value{result.mean_payoff}},
                        {"std_error", Value{result.std_error}}});
    out.finish();
    return 0;
}

int run_classical_region(const Flags& flags) {
    auto cfg = load_classical_region(load_config_file(flags.config_path));
    apply_flags(flags, cfg.common);

    const auto instances = find_parrondo_samples(cfg.search, cfg.common.seed);

    OutputStream out(cfg.common.out_path);
    RecordWriter writer(out.stream(), cfg.common.format,
                        {"index", "a_win", "p1", "p2", "p3", "p4", "schedule", "b_c", "b_s",
                         "analytic_p_win", "analytic_payoff", "sim_mean_payoff",
                         "sim_std_error", "sim_steps", "effect"});
    std::int64_t index = 0;
    for (const auto& inst : instances) {
        writer.write(Record{
            {"index", Value{index++}},
            {"a_win", Value{inst.a.p_win}},
            {"p1", Value{inst.b.p1}},
            {"p2", Value{inst.b.p2}},
            {"p3", Value{inst.b.p3}},
            {"p4", Value{inst.b.p4}},
            {"schedule", Value{inst.schedule_pattern}},
            {"b_c", Value{inst.b_class.c}},
            {"b_s", Value{inst.b_class.s}},
            {"analytic_p_win", Value{inst.analytic_pwin}},
            {"analytic_payoff", Value{inst.analytic_payoff}},
            {"sim_mean_payoff", Value{inst.validation.mean_payoff}},
            {"sim_std_error", Value{inst.validation.std_error}},
            {"sim_steps", Value{static_cast<std::int64_t>(inst.validation.steps)}},
            {"effect", Value{true}}});
    }
    // An empty result is valid; the CSV then carries only its header line.
    out.finish();
    return 0;
}

const char* kQubitAngleNames[] = {"theta_q1", "phi_q1", "eta_q1", "theta_q2", "phi_q2",
                                  "eta_q2",   "theta_q3", "phi_q3", "eta_q3"};
const char* kBlockAngleNames[] = {"theta_b1", "phi_b1", "eta_b1", "theta_b2", "phi_b2",
                                  "eta_b2",   "theta_b3", "phi_b3", "eta_b3", "theta_b4",
                                  "phi_b4",   "eta_b4"};

const char* state_kind_name(InitialStateSpec::Kind kind) {
    switch (kind) {
        case InitialStateSpec::Kind::product: return "product";
        case InitialStateSpec::Kind::equal_superposition: return "equal_superposition";
        case InitialStateSpec::Kind::ghz: return "ghz";
    }
    return "unknown";
}

int run_quantum_play(const Flags& flags) {
    auto cfg = load_quantum_play(load_config_file(flags.config_path));
    apply_flags(flags, cfg.common);

    const auto product = cfg.initial.as_product();
    const WinReport simulated = pwin_quantum_sim(cfg.game, cfg.initial);

    double p_win = simulated.p_win;
    bool oracle_checked = false;
    if (product) {
        // Closed form carries the record; the simulation is the oracle.
        p_win = pwin_quantum_closed(product->q1, product->q2, product->q3, cfg.game.blocks);
        if (std::abs(p_win - simulated.p_win) > kEqTol) {
            throw OracleMismatchError("play: closed form " + format_double(p_win) +
                                      " vs simulation " + format_double(simulated.p_win));
        }
        oracle_checked = true;
    }

    std::array<double, 9> qubit_angles;
    qubit_angles.fill(kNaN);
    if (product) {
        qubit_angles = {product->q1.theta, product->q1.phi, product->q1.eta,
                        product->q2.theta, product->q2.phi, product->q2.eta,
                        product->q3.theta, product->q3.phi, product->q3.eta};
    }
    const std::array<double, 12> block_angles = {
        cfg.game.blocks[0].theta, cfg.game.blocks[0].phi, cfg.game.blocks[0].eta,
        cfg.game.blocks[1].theta, cfg.game.blocks[1].phi, cfg.game.blocks[1].eta,
        cfg.game.blocks[2].theta, cfg.game.blocks[2].phi, cfg.game.blocks[2].eta,
        cfg.game.blocks[3].theta, cfg.game.blocks[3].phi, cfg.game.blocks[3].eta};

    Record rec{{"initial_state", Value{std::string(state_kind_name(cfg.initial.kind))}}};
    push_angles(rec, kQubitAngleNames, qubit_angles.data(), qubit_angles.size());
    push_angles(rec, kBlockAngleNames, block_angles.data(), block_angles.size());
    const WinReport report = make_win_report(p_win);
    rec.push_back({"p_win", Value{report.p_win}});
    rec.push_back({"expected_payoff", Value{report.expected_payoff}});
    rec.push_back({"classification", Value{std::string(variant_name(report.classification))}});
    rec.push_back({"oracle_checked", Value{oracle_checked}});

    OutputStream out(cfg.common.out_path);
    RecordWriter writer(out.stream(), cfg.common.format);
    writer.write(rec);
    out.finish();
    return 0;
}

int run_quantum_sequence(const Flags& flags) {
    auto cfg = load_quantum_sequence(load_config_file(flags.config_path));
    apply_flags(flags, cfg.common);

    const WinReport sequence = play_sequence(cfg.games, cfg.initial);

    // Each game alone on the same initial state.
    double singles_max = 0.0;
    bool all_losing = true;
    for (const auto& game : cfg.games) {
        const WinReport single = pwin_quantum_sim(game, cfg.initial);
        singles_max = std::max(singles_max, single.p_win);
        if (single.classification != GameVariant::losing) all_losing = false;
    }
    const bool effect = cfg.games.size() >= 2 && all_losing &&
                        sequence.classification == GameVariant::winning;

    // The angle-addition formula applies from the equal superposition with
    // all block phases zero; cross-check it there.
    double formula = kNaN, deviation = kNaN;
    bool zero_phases = true;
    for (const auto& game : cfg.games) {
        for (const auto& blk : game.blocks) {
            if (blk.phi != 0.0 || blk.eta != 0.0) zero_phases = false;
        }
    }
    if (zero_phases && cfg.initial.kind == InitialStateSpec::Kind::equal_superposition) {
        std::vector<std::array<double, 4>> theta;
        theta.reserve(cfg.games.size());
        for (const auto& game : cfg.games) {
            theta.push_back({game.blocks[0].theta, game.blocks[1].theta,
                             game.blocks[2].theta, game.blocks[3].theta});
        }
        formula = pwin_sequence_formula(theta);
        deviation = std::abs(formula - sequence.p_win);
        if (deviation > kEqTol) {
            throw OracleMismatchError("sequence formula " + format_double(formula) +
                                      " vs composition " + format_double(sequence.p_win));
        }
    }

    OutputStream out(cfg.common.out_path);
    RecordWriter writer(out.stream(), cfg.common.format);
    writer.write(Record{
        {"n_games", Value{static_cast<std::int64_t>(cfg.games.size())}},
        {"initial_state", Value{std::string(state_kind_name(cfg.initial.kind))}},
        {"p_win", Value{sequence.p_win}},
        {"expected_payoff", Value{sequence.expected_payoff}},
        {"classification", Value{std::string(variant_name(sequence.classification))}},
        {"formula_p_win", Value{formula}},
        {"formula_abs_dev", Value{deviation}},
        {"singles_max_p_win", Value{singles_max}},
        {"effect", Value{effect}}});
    out.finish();
    return 0;
}

int run_quantum_sweep(const Flags& flags) {
    auto cfg = load_quantum_sweep(load_config_file(flags.config_path));
    apply_flags(flags, cfg.common);
    cfg.sweep.oracle_every = cfg.common.oracle_every;

    OutputStream out(cfg.common.out_path);
    RecordWriter writer(out.stream(), cfg.common.format);
    run_sweep(cfg.sweep, cfg.common.seed, [&](const SweepRecord& point) {
        Record rec{{"index", Value{static_cast<std::int64_t>(point.index)}}};
        for (std::size_t i = 0; i < kSweepParamCount; ++i) {
            rec.push_back({std::string(sweep_param_name(i)), Value{point.angles[i]}});
        }
        rec.push_back({"p_win", Value{point.p_win}});
        rec.push_back({"expected_payoff", Value{point.expected_payoff}});
        rec.push_back(
            {"classification", Value{std::string(variant_name(point.classification))}});
        rec.push_back({"oracle_checked", Value{point.oracle_checked}});
        writer.write(rec);
    });
    out.finish();
    return 0;
}

int run_compare(const Flags& flags) {
    auto cfg = load_compare(load_config_file(flags.config_path));
    apply_flags(flags, cfg.common);

    const GameClassification cls = classify(cfg.game);
    const double classical_pwin = pwin_closed_form(cfg.game);

    // Matched quantum game: coin j flips |0> to |1> with probability p_j,
    // so theta_j = 2 asin(sqrt(p_j)) with zero phases. Histories enter in
    // equal superposition and the target starts at |0>; the quantum value
    // is then the plain average of the four coins.
    std::array<PolarBlock, 4> blocks{
        PolarBlock(2.0 * std::asin(std::sqrt(cfg.game.p1)), 0.0, 0.0),
        PolarBlock(2.0 * std::asin(std::sqrt(cfg.game.p2)), 0.0, 0.0),
        PolarBlock(2.0 * std::asin(std::sqrt(cfg.game.p3)), 0.0, 0.0),
        PolarBlock(2.0 * std::asin(std::sqrt(cfg.game.p4)), 0.0, 0.0)};
    const PolarQubit half(std::numbers::pi / 2.0, 0.0, 0.0);
    const PolarQubit zero(0.0, 0.0, 0.0);
    const double quantum_pwin = pwin_quantum_closed(half, half, zero, blocks);

    const QuantumHDGame game{blocks};
    const auto initial = InitialStateSpec::of_product(half, half, zero);
    const double simulated = pwin_quantum_sim(game, initial).p_win;
    if (std::abs(quantum_pwin - simulated) > kEqTol) {
        throw OracleMismatchError("compare: closed form " + format_double(quantum_pwin) +
                                  " vs simulation " + format_double(simulated));
    }

    OutputStream out(cfg.common.out_path);
    RecordWriter writer(out.stream(), cfg.common.format);
    writer.write(Record{
        {"p1", Value{cfg.game.p1}},
        {"p2", Value{cfg.game.p2}},
        {"p3", Value{cfg.game.p3}},
        {"p4", Value{cfg.game.p4}},
        {"classical_p_win", Value{classical_pwin}},
        {"classical_c", Value{cls.c}},
        {"classical_s", Value{cls.s}},
        {"classical_classification", Value{std::string(variant_name(cls.variant))}},
        {"quantum_p_win", Value{quantum_pwin}},
        {"quantum_classification",
         Value{std::string(variant_name(classify_payoff(quantum_pwin)))}},
        {"oracle_checked", Value{true}}});
    out.finish();
    return 0;
}

}  // namespace
}  // namespace parrondo

int main(int argc, char** argv) {
    using namespace parrondo;

    CLI::App app{"Parrondo games: classical history-dependent play and its quantum "
                 "multiplexer counterpart"};
    app.require_subcommand(1);

    Flags flags;
    app.add_option("--config", flags.config_path, "JSON run configuration")
        ->check(CLI::ExistingFile);
    app.add_option("--seed", flags.seed, "Top-level RNG seed (overrides config)");
    app.add_option("--format", flags.format, "Output format: csv or jsonl");
    app.add_option("--out", flags.out, "Output path (default stdout)");
    app.add_option("--oracle-every", flags.oracle_every,
                   "Re-validate every Nth closed-form record against the simulation");

    int (*run)(const Flags&) = nullptr;
    const auto leaf = [&run](CLI::App* sub, int (*fn)(const Flags&)) {
        sub->fallthrough();
        sub->callback([&run, fn] { run = fn; });
    };

    CLI::App* classical = app.add_subcommand("classical", "Classical Parrondo games");
    classical->fallthrough();
    classical->require_subcommand(1);
    leaf(classical->add_subcommand("classify", "Closed-form win probability and c/s class"),
         run_classical_classify);
    leaf(classical->add_subcommand("simulate", "Monte Carlo play of a periodic schedule"),
         run_classical_simulate);
    leaf(classical->add_subcommand("region", "Sample for the Parrondo effect"),
         run_classical_region);

    CLI::App* quantum = app.add_subcommand("quantum", "Quantized games");
    quantum->fallthrough();
    quantum->require_subcommand(1);
    leaf(quantum->add_subcommand("play", "One game on an initial state"), run_quantum_play);
    leaf(quantum->add_subcommand("sequence", "Composed n-game sequence"), run_quantum_sequence);
    leaf(quantum->add_subcommand("sweep", "Grid or random sweep over the 21 angles"),
         run_quantum_sweep);

    leaf(app.add_subcommand("compare", "Classical vs matched quantum game"), run_compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return run(flags);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateChainError& e) {
        std::cerr << "degenerate chain: " << e.what() << "\n";
        return 3;
    } catch (const ReducibleChainError& e) {
        std::cerr << "degenerate chain: " << e.what() << "\n";
        return 3;
    } catch (const OracleMismatchError& e) {
        std::cerr << "oracle mismatch: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
