// multiplexer.hpp
// SU(2) coin blocks and the block-diagonal multiplexer unitary built from
// them: construction from polar angles, state application, composition, and
// dense-matrix export.
//
// Control convention: on k qubits the first k-1 qubits are controls and the
// last qubit is the target. Block j acts on the amplitude pair at indices
// (2j, 2j+1), i.e. j is the control bits read as a big-endian integer, so
// block 0 fires on history 00 (two open controls).

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "parrondo/qcore.hpp"

namespace parrondo {

// One special-unitary 2x2 coin with rows (a, b) / (-conj(b), conj(a)).
// Construction enforces |a|^2 + |b|^2 = 1 within 1e-9 and finite entries.
struct SU2Block {
    Complex a;
    Complex b;

    SU2Block(Complex a_in, Complex b_in);

    static SU2Block identity() { return SU2Block(Complex{1.0, 0.0}, Complex{0.0, 0.0}); }

    // Matrix-vector product with the amplitude pair (x, y).
    std::pair<Complex, Complex> apply(const Complex& x, const Complex& y) const {
        return {a * x + b * y, -std::conj(b) * x + std::conj(a) * y};
    }

    // Conjugate transpose; the inverse, since the block is unitary.
    SU2Block adjoint() const { return SU2Block(std::conj(a), -b); }
};

// 2x2 matrix product lhs * rhs. The SU(2) form is closed under products.
SU2Block operator*(const SU2Block& lhs, const SU2Block& rhs);

// Polar parameterization of a coin block:
//   a = e^{i phi} cos(theta/2),  b = e^{i eta} sin(theta/2)
// with theta in [0, pi] and phi, eta in [0, 2 pi]. Out-of-range angles are
// rejected, not wrapped: theta ranges are semantically significant for
// composed sequences.
struct PolarBlock {
    double theta;
    double phi;
    double eta;

    PolarBlock(double theta_in, double phi_in, double eta_in);
};

// Polar parameterization of a single-qubit state, same angle convention.
struct PolarQubit {
    double theta;
    double phi;
    double eta;

    PolarQubit(double theta_in, double phi_in, double eta_in);
};

SU2Block block_from_polar(const PolarBlock& p);
PureState qubit_from_polar(const PolarQubit& p);

// Block-diagonal unitary over 2^(k-1) coin blocks, acting on k qubits.
class Multiplexer {
public:
    explicit Multiplexer(std::vector<SU2Block> blocks);

    static Multiplexer identity(std::size_t num_blocks);

    std::size_t num_blocks() const { return blocks_.size(); }
    int num_qubits() const;
    const SU2Block& block(std::size_t j) const { return blocks_[j]; }

    // Left-multiplies each amplitude pair (2j, 2j+1) by block j. O(2^k);
    // never touches amplitudes across different control prefixes.
    PureState apply(const PureState& state) const;

    Multiplexer adjoint() const;

    // Full 2^k x 2^k block-diagonal matrix, row-major. Test oracle and
    // export only; apply() does not go through this.
    std::vector<std::vector<Complex>> as_dense_matrix() const;

private:
    std::vector<SU2Block> blocks_;
};

// Blockwise product: block j of the result is second.block(j) * first.block(j),
// so apply(compose(f, s), x) == apply(s, apply(f, x)). "first" acts first.
Multiplexer compose(const Multiplexer& first, const Multiplexer& second);

}  // namespace parrondo
