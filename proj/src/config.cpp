#include "parrondo/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

namespace parrondo {

namespace {

using nlohmann::json;

// Angle fields scale by pi when the document says angle_unit "pi" (the
// default), so 0.75 in a config means 3pi/4.
double angle_scale(const json& doc) {
    const std::string unit = doc.value("angle_unit", std::string("pi"));
    if (unit == "pi") return std::numbers::pi;
    if (unit == "radians" || unit == "rad") return 1.0;
    throw ConfigError("angle_unit: expected 'pi' or 'radians', got '" + unit + "'");
}

// Unknown top-level keys are config errors, not silent no-ops; a typo in a
// field name must not quietly fall back to defaults. The common keys are
// accepted by every subcommand.
void check_keys(const json& doc, std::initializer_list<std::string_view> extra) {
    static constexpr std::string_view common[] = {"seed", "format", "oracle_every", "out"};
    if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
    for (const auto& item : doc.items()) {
        bool known = false;
        for (std::string_view name : common) known = known || item.key() == name;
        for (std::string_view name : extra) known = known || item.key() == name;
        if (!known) throw ConfigError(item.key() + ": unknown config field");
    }
}

double require_number(const json& node, const std::string& field) {
    if (!node.is_number()) throw ConfigError(field + ": expected a number");
    return node.get<double>();
}

double get_number(const json& parent, const std::string& field) {
    if (!parent.contains(field)) throw ConfigError(field + ": missing required field");
    return require_number(parent.at(field), field);
}

std::uint64_t get_count(const json& parent, const std::string& field, std::uint64_t fallback) {
    if (!parent.contains(field)) return fallback;
    const json& node = parent.at(field);
    if (!node.is_number_unsigned()) {
        throw ConfigError(field + ": expected a non-negative integer");
    }
    return node.get<std::uint64_t>();
}

double get_probability(const json& parent, const std::string& field) {
    const double p = get_number(parent, field);
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        throw ConfigError(field + ": probability must lie in [0,1], got " + format_double(p));
    }
    return p;
}

double get_angle(const json& parent, const std::string& field, double scale,
                 double fallback = 0.0) {
    if (!parent.contains(field)) return fallback;
    return require_number(parent.at(field), field) * scale;
}

CommonConfig load_common(const json& doc) {
    CommonConfig common;
    common.seed = get_count(doc, "seed", 0);
    if (doc.contains("format")) {
        if (!doc.at("format").is_string()) throw ConfigError("format: expected a string");
        common.format = format_from_name(doc.at("format").get<std::string>());
    }
    common.oracle_every = get_count(doc, "oracle_every", 1000);
    if (common.oracle_every < 1) throw ConfigError("oracle_every: must be >= 1");
    if (doc.contains("out")) {
        if (!doc.at("out").is_string()) throw ConfigError("out: expected a path string");
        common.out_path = doc.at("out").get<std::string>();
    }
    return common;
}

ClassicalHDGame load_hd_game(const json& node, const std::string& prefix) {
    if (!node.is_object()) throw ConfigError(prefix + ": expected an object with p1..p4");
    try {
        return ClassicalHDGame(get_probability(node, "p1"), get_probability(node, "p2"),
                               get_probability(node, "p3"), get_probability(node, "p4"));
    } catch (const ConfigError& e) {
        throw ConfigError(prefix + "." + e.what());
    }
}

PolarBlock load_block(const json& node, double scale, const std::string& prefix) {
    if (!node.is_object()) throw ConfigError(prefix + ": expected {theta, phi, eta}");
    try {
        return PolarBlock(get_angle(node, "theta", scale), get_angle(node, "phi", scale),
                          get_angle(node, "eta", scale));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(prefix + ": " + e.what());
    } catch (const ConfigError& e) {
        throw ConfigError(prefix + "." + e.what());
    }
}

PolarQubit load_qubit(const json& node, double scale, const std::string& prefix) {
    if (!node.is_object()) throw ConfigError(prefix + ": expected {theta, phi, eta}");
    try {
        return PolarQubit(get_angle(node, "theta", scale), get_angle(node, "phi", scale),
                          get_angle(node, "eta", scale));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(prefix + ": " + e.what());
    } catch (const ConfigError& e) {
        throw ConfigError(prefix + "." + e.what());
    }
}

QuantumHDGame load_game_blocks(const json& node, double scale, const std::string& prefix) {
    if (!node.is_array() || node.size() != 4) {
        throw ConfigError(prefix + ": expected an array of 4 blocks");
    }
    return QuantumHDGame{{load_block(node.at(0), scale, prefix + "[0]"),
                          load_block(node.at(1), scale, prefix + "[1]"),
                          load_block(node.at(2), scale, prefix + "[2]"),
                          load_block(node.at(3), scale, prefix + "[3]")}};
}

InitialStateSpec load_initial_state(const json& doc, double scale) {
    if (!doc.contains("initial_state")) return InitialStateSpec::equal_superposition();
    const json& node = doc.at("initial_state");
    if (!node.is_object() || !node.contains("kind") || !node.at("kind").is_string()) {
        throw ConfigError("initial_state: expected an object with a 'kind' string");
    }
    const std::string kind = node.at("kind").get<std::string>();
    if (kind == "equal_superposition") return InitialStateSpec::equal_superposition();
    if (kind == "ghz") return InitialStateSpec::ghz();
    if (kind == "product") {
        if (!node.contains("qubits") || !node.at("qubits").is_array() ||
            node.at("qubits").size() != 3) {
            throw ConfigError("initial_state.qubits: expected an array of 3 qubits");
        }
        const json& qs = node.at("qubits");
        return InitialStateSpec::of_product(
            load_qubit(qs.at(0), scale, "initial_state.qubits[0]"),
            load_qubit(qs.at(1), scale, "initial_state.qubits[1]"),
            load_qubit(qs.at(2), scale, "initial_state.qubits[2]"));
    }
    throw ConfigError("initial_state.kind: expected product|equal_superposition|ghz, got '" +
                      kind + "'");
}

Interval load_interval(const json& node, const std::string& prefix) {
    if (!node.is_object()) throw ConfigError(prefix + ": expected {lo, hi}");
    const double lo = get_number(node, "lo");
    const double hi = get_number(node, "hi");
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
        throw ConfigError(prefix + ": needs finite lo <= hi");
    }
    return Interval{lo, hi};
}

}  // namespace

ClassicalClassifyConfig load_classical_classify(const json& doc) {
    check_keys(doc, {"game", "validate_steps"});
    ClassicalClassifyConfig cfg;
    cfg.common = load_common(doc);
    if (!doc.contains("game")) throw ConfigError("game: missing required field");
    cfg.game = load_hd_game(doc.at("game"), "game");
    cfg.validate_steps = get_count(doc, "validate_steps", 0);
    return cfg;
}

ClassicalSimulateConfig load_classical_simulate(const json& doc) {
    check_keys(doc, {"schedule", "steps"});
    ClassicalSimulateConfig cfg;
    cfg.common = load_common(doc);
    if (!doc.contains("schedule") || !doc.at("schedule").is_array() ||
        doc.at("schedule").empty()) {
        throw ConfigError("schedule: expected a non-empty array of games");
    }
    std::size_t i = 0;
    for (const json& node : doc.at("schedule")) {
        const std::string prefix = "schedule[" + std::to_string(i++) + "]";
        if (!node.is_object() || !node.contains("type") || !node.at("type").is_string()) {
            throw ConfigError(prefix + ": expected an object with type 'A' or 'B'");
        }
        const std::string type = node.at("type").get<std::string>();
        if (type == "A") {
            cfg.schedule.emplace_back(GameA(get_probability(node, "p_win")));
        } else if (type == "B") {
            cfg.schedule.emplace_back(load_hd_game(node, prefix));
        } else {
            throw ConfigError(prefix + ".type: expected 'A' or 'B', got '" + type + "'");
        }
    }
    cfg.steps = get_count(doc, "steps", 1000000);
    if (cfg.steps < 1) throw ConfigError("steps: must be >= 1");
    return cfg;
}

ClassicalRegionConfig load_classical_region(const json& doc) {
    check_keys(doc, {"budget", "schedule_pattern", "ranges", "min_payoff", "validation_steps",
                     "max_results"});
    ClassicalRegionConfig cfg;
    cfg.common = load_common(doc);
    cfg.search.budget = get_count(doc, "budget", cfg.search.budget);
    if (doc.contains("schedule_pattern")) {
        if (!doc.at("schedule_pattern").is_string()) {
            throw ConfigError("schedule_pattern: expected a string of 'A'/'B'");
        }
        cfg.search.schedule_pattern = doc.at("schedule_pattern").get<std::string>();
        for (char c : cfg.search.schedule_pattern) {
            if (c != 'A' && c != 'B') {
                throw ConfigError("schedule_pattern: may contain only 'A' and 'B'");
            }
        }
        if (cfg.search.schedule_pattern.empty()) {
            throw ConfigError("schedule_pattern: must be non-empty");
        }
    }
    if (doc.contains("ranges")) {
        const json& r = doc.at("ranges");
        if (!r.is_object()) throw ConfigError("ranges: expected an object");
        if (r.contains("a_win")) cfg.search.a_win = load_interval(r.at("a_win"), "ranges.a_win");
        if (r.contains("p1")) cfg.search.p1 = load_interval(r.at("p1"), "ranges.p1");
        if (r.contains("p2")) cfg.search.p2 = load_interval(r.at("p2"), "ranges.p2");
        if (r.contains("p3")) cfg.search.p3 = load_interval(r.at("p3"), "ranges.p3");
        if (r.contains("p4")) cfg.search.p4 = load_interval(r.at("p4"), "ranges.p4");
    }
    if (doc.contains("min_payoff")) {
        cfg.search.min_payoff = get_number(doc, "min_payoff");
    }
    cfg.search.validation_steps =
        get_count(doc, "validation_steps", cfg.search.validation_steps);
    if (cfg.search.validation_steps < 1) throw ConfigError("validation_steps: must be >= 1");
    cfg.search.max_results =
        static_cast<std::size_t>(get_count(doc, "max_results", cfg.search.max_results));
    return cfg;
}

QuantumPlayConfig load_quantum_play(const json& doc) {
    check_keys(doc, {"angle_unit", "blocks", "initial_state"});
    QuantumPlayConfig cfg;
    cfg.common = load_common(doc);
    const double scale = angle_scale(doc);
    if (!doc.contains("blocks")) throw ConfigError("blocks: missing required field");
    cfg.game = load_game_blocks(doc.at("blocks"), scale, "blocks");
    cfg.initial = load_initial_state(doc, scale);
    return cfg;
}

QuantumSequenceConfig load_quantum_sequence(const json& doc) {
    check_keys(doc, {"angle_unit", "games", "initial_state"});
    QuantumSequenceConfig cfg;
    cfg.common = load_common(doc);
    const double scale = angle_scale(doc);
    if (!doc.contains("games") || !doc.at("games").is_array() || doc.at("games").empty()) {
        throw ConfigError("games: expected a non-empty array");
    }
    std::size_t k = 0;
    for (const json& node : doc.at("games")) {
        const std::string prefix = "games[" + std::to_string(k++) + "]";
        if (!node.is_object() || !node.contains("blocks")) {
            throw ConfigError(prefix + ".blocks: missing required field");
        }
        cfg.games.push_back(load_game_blocks(node.at("blocks"), scale, prefix + ".blocks"));
    }
    cfg.initial = load_initial_state(doc, scale);
    return cfg;
}

QuantumSweepConfig load_quantum_sweep(const json& doc) {
    check_keys(doc, {"angle_unit", "mode", "samples", "parameters", "max_points"});
    QuantumSweepConfig cfg;
    cfg.common = load_common(doc);
    const double scale = angle_scale(doc);

    cfg.sweep = SweepSpec::defaults();
    if (!doc.contains("mode") || !doc.at("mode").is_string()) {
        throw ConfigError("mode: expected 'grid' or 'random'");
    }
    const std::string mode = doc.at("mode").get<std::string>();
    if (mode == "grid") {
        cfg.sweep.mode = SweepSpec::Mode::grid;
    } else if (mode == "random") {
        cfg.sweep.mode = SweepSpec::Mode::random;
        cfg.sweep.samples = get_count(doc, "samples", 0);
        if (cfg.sweep.samples < 1) throw ConfigError("samples: must be >= 1 in random mode");
    } else {
        throw ConfigError("mode: expected 'grid' or 'random', got '" + mode + "'");
    }

    if (doc.contains("parameters")) {
        const json& params = doc.at("parameters");
        if (!params.is_object()) throw ConfigError("parameters: expected an object");
        for (const auto& [name, node] : params.items()) {
            const std::size_t idx = sweep_param_index(name);
            const std::string prefix = "parameters." + name;
            if (node.is_number()) {
                cfg.sweep.params[idx] =
                    SweepParameter::at(require_number(node, prefix) * scale);
            } else if (node.is_object()) {
                const double lo = get_number(node, "min") * scale;
                const double hi = get_number(node, "max") * scale;
                if (lo > hi) throw ConfigError(prefix + ": min must not exceed max");
                const std::uint64_t points = get_count(node, "points", 1);
                cfg.sweep.params[idx] = SweepParameter::over(Interval{lo, hi}, points);
            } else {
                throw ConfigError(prefix + ": expected a number or {min, max, points}");
            }
        }
    }
    cfg.sweep.oracle_every = cfg.common.oracle_every;
    cfg.sweep.max_points = get_count(doc, "max_points", cfg.sweep.max_points);
    return cfg;
}

CompareConfig load_compare(const json& doc) {
    check_keys(doc, {"game"});
    CompareConfig cfg;
    cfg.common = load_common(doc);
    if (!doc.contains("game")) throw ConfigError("game: missing required field");
    cfg.game = load_hd_game(doc.at("game"), "game");
    return cfg;
}

nlohmann::json load_config_file(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
}

}  // namespace parrondo
