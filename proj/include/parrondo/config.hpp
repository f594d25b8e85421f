// config.hpp
// JSON run configuration for the CLI. One document per run; command-line
// flags override the corresponding fields. Angles are given in units of pi
// by default (angle_unit: "pi"), or raw radians with angle_unit: "radians".

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "parrondo/classical.hpp"
#include "parrondo/quantumgame.hpp"
#include "parrondo/records.hpp"
#include "parrondo/sweep.hpp"

namespace parrondo {

// Fields shared by every subcommand.
struct CommonConfig {
    std::uint64_t seed = 0;
    Format format = Format::csv;
    std::uint64_t oracle_every = 1000;
    std::string out_path;  // empty = stdout
};

struct ClassicalClassifyConfig {
    CommonConfig common;
    ClassicalHDGame game{0.5, 0.5, 0.5, 0.5};
    std::uint64_t validate_steps = 0;  // 0 = no Monte Carlo validation
};

struct ClassicalSimulateConfig {
    CommonConfig common;
    std::vector<ScheduleGame> schedule;
    std::uint64_t steps = 1000000;
};

struct ClassicalRegionConfig {
    CommonConfig common;
    ParrondoSearchSpec search;
};

struct QuantumPlayConfig {
    CommonConfig common;
    QuantumHDGame game{{PolarBlock(0, 0, 0), PolarBlock(0, 0, 0), PolarBlock(0, 0, 0),
                        PolarBlock(0, 0, 0)}};
    InitialStateSpec initial = InitialStateSpec::equal_superposition();
};

struct QuantumSequenceConfig {
    CommonConfig common;
    std::vector<QuantumHDGame> games;
    InitialStateSpec initial = InitialStateSpec::equal_superposition();
};

struct QuantumSweepConfig {
    CommonConfig common;
    SweepSpec sweep;
};

struct CompareConfig {
    CommonConfig common;
    ClassicalHDGame game{0.5, 0.5, 0.5, 0.5};
};

// Loaders parse and validate, naming the offending field in ConfigError.
// The json argument is the whole config document.
ClassicalClassifyConfig load_classical_classify(const nlohmann::json& doc);
ClassicalSimulateConfig load_classical_simulate(const nlohmann::json& doc);
ClassicalRegionConfig load_classical_region(const nlohmann::json& doc);
QuantumPlayConfig load_quantum_play(const nlohmann::json& doc);
QuantumSequenceConfig load_quantum_sequence(const nlohmann::json& doc);
QuantumSweepConfig load_quantum_sweep(const nlohmann::json& doc);
CompareConfig load_compare(const nlohmann::json& doc);

// Reads and parses a config file; empty path yields an empty document.
nlohmann::json load_config_file(const std::string& path);

}  // namespace parrondo
