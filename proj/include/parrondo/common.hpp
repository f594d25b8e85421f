// common.hpp
// Shared plumbing: error types, win/fair/loss classification, deterministic
// RNG, seed derivation, and locale-independent number formatting.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace parrondo {

// Tolerances used across the library. Construction-time checks are loose
// (1e-9); equality assertions and classification thresholds are tight (1e-12).
inline constexpr double kNormTol = 1e-9;
inline constexpr double kEqTol = 1e-12;

// Raised when a classical game's closed form has a vanishing denominator or
// the c/s classification is undefined (boundary probabilities).
class DegenerateChainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when the 4-state history chain has no unique stationary
// distribution reachable by power iteration.
class ReducibleChainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a closed-form win probability disagrees with the state-vector
// simulation beyond tolerance. Always a bug, never ignored.
class OracleMismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised on malformed run configuration; the message names the field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Closed interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

enum class GameVariant { winning, fair, losing };

std::string_view variant_name(GameVariant v);
GameVariant variant_from_name(std::string_view name);

// Classify a win probability against the fair point 1/2.
inline GameVariant classify_payoff(double p_win, double tol = kEqTol) {
    if (std::abs(p_win - 0.5) <= tol) return GameVariant::fair;
    return p_win > 0.5 ? GameVariant::winning : GameVariant::losing;
}

// Deterministic RNG. Wraps mt19937_64 and derives doubles from raw bits so
// that identical seeds give bit-identical streams on every platform
// (std::uniform_real_distribution makes no such guarantee).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform_in(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Modulo bias is < 2^-40 for the n used here (tiny ranges); fine for
        // seeding histories and picking grid cells.
        return engine_() % n;
    }

private:
    std::mt19937_64 engine_;
};

// Derive a per-stream seed from one top-level seed and a fixed label, so
// subcommands draw from independent, reproducible streams.
std::uint64_t derive_seed(std::uint64_t base, std::string_view label);

// Format a double with 17 significant digits ("%.17g" style) using
// std::to_chars: locale independent and round-trippable.
std::string format_double(double value);

// Parse a double the same way (accepts what format_double emits).
double parse_double(std::string_view text, std::string_view field);

// True when the value carries no NaN/Inf.
inline bool is_finite(double x) { return std::isfinite(x); }

}  // namespace parrondo
