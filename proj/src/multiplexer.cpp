#include "parrondo/multiplexer.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace parrondo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_angles(double theta, double phi, double eta, const char* what) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi) {
        throw std::invalid_argument(std::string(what) + ": theta must lie in [0, pi]");
    }
    if (!std::isfinite(phi) || phi < 0.0 || phi > kTwoPi) {
        throw std::invalid_argument(std::string(what) + ": phi must lie in [0, 2pi]");
    }
    if (!std::isfinite(eta) || eta < 0.0 || eta > kTwoPi) {
        throw std::invalid_argument(std::string(what) + ": eta must lie in [0, 2pi]");
    }
}

Complex polar_unit(double angle) { return Complex{std::cos(angle), std::sin(angle)}; }

}  // namespace

SU2Block::SU2Block(Complex a_in, Complex b_in) : a(a_in), b(b_in) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
        !std::isfinite(b.real()) || !std::isfinite(b.imag())) {
        throw std::invalid_argument("SU2Block: non-finite entry");
    }
    const double unit = std::norm(a) + std::norm(b);
    if (std::abs(unit - 1.0) > kNormTol) {
        throw std::invalid_argument("SU2Block: |a|^2 + |b|^2 = " + std::to_string(unit) +
                                    ", expected 1");
    }
}

SU2Block operator*(const SU2Block& lhs, const SU2Block& rhs) {
    // [[a1,b1],[-b1*,a1*]] * [[a2,b2],[-b2*,a2*]] keeps the same shape.
    return SU2Block(lhs.a * rhs.a - lhs.b * std::conj(rhs.b),
                    lhs.a * rhs.b + lhs.b * std::conj(rhs.a));
}

PolarBlock::PolarBlock(double theta_in, double phi_in, double eta_in)
    : theta(theta_in), phi(phi_in), eta(eta_in) {
    check_angles(theta, phi, eta, "PolarBlock");
}

PolarQubit::PolarQubit(double theta_in, double phi_in, double eta_in)
    : theta(theta_in), phi(phi_in), eta(eta_in) {
    check_angles(theta, phi, eta, "PolarQubit");
}

SU2Block block_from_polar(const PolarBlock& p) {
    return SU2Block(polar_unit(p.phi) * std::cos(p.theta / 2.0),
                    polar_unit(p.eta) * std::sin(p.theta / 2.0));
}

PureState qubit_from_polar(const PolarQubit& p) {
    return PureState({polar_unit(p.phi) * std::cos(p.theta / 2.0),
                      polar_unit(p.eta) * std::sin(p.theta / 2.0)});
}

Multiplexer::Multiplexer(std::vector<SU2Block> blocks) : blocks_(std::move(blocks)) {
    const std::size_t n = blocks_.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw std::invalid_argument(
            "Multiplexer: block count must be 2^(k-1) with k >= 2, got " + std::to_string(n));
    }
}

Multiplexer Multiplexer::identity(std::size_t num_blocks) {
    return Multiplexer(std::vector<SU2Block>(num_blocks, SU2Block::identity()));
}

int Multiplexer::num_qubits() const {
    return std::bit_width(blocks_.size());  // log2(blocks) + 1
}

PureState Multiplexer::apply(const PureState& state) const {
    if (state.dim() != 2 * blocks_.size()) {
        throw std::invalid_argument("Multiplexer::apply: state dimension " +
                                    std::to_string(state.dim()) + " needs " +
                                    std::to_string(2 * blocks_.size()));
    }
    std::vector<Complex> out(state.dim());
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        auto [even, odd] = blocks_[j].apply(state[2 * j], state[2 * j + 1]);
        out[2 * j] = even;
        out[2 * j + 1] = odd;
    }
    return PureState(std::move(out));
}

Multiplexer Multiplexer::adjoint() const {
    std::vector<SU2Block> blocks;
    blocks.reserve(blocks_.size());
    for (const auto& blk : blocks_) blocks.push_back(blk.adjoint());
    return Multiplexer(std::move(blocks));
}

std::vector<std::vector<Complex>> Multiplexer::as_dense_matrix() const {
    const std::size_t dim = 2 * blocks_.size();
    std::vector<std::vector<Complex>> m(dim, std::vector<Complex>(dim, Complex{0.0, 0.0}));
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        const auto& blk = blocks_[j];
        m[2 * j][2 * j] = blk.a;
        m[2 * j][2 * j + 1] = blk.b;
        m[2 * j + 1][2 * j] = -std::conj(blk.b);
        m[2 * j + 1][2 * j + 1] = std::conj(blk.a);
    }
    return m;
}

Multiplexer compose(const Multiplexer& first, const Multiplexer& second) {
    if (first.num_blocks() != second.num_blocks()) {
        throw std::invalid_argument("compose: block counts differ");
    }
    std::vector<SU2Block> blocks;
    blocks.reserve(first.num_blocks());
    for (std::size_t j = 0; j < first.num_blocks(); ++j) {
        blocks.push_back(second.block(j) * first.block(j));
    }
    return Multiplexer(std::move(blocks));
}

}  // namespace parrondo
