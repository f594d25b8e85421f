// qcore.hpp
// Complex amplitude vectors over the computational basis, tensor products,
// and win/loss measurement marginals.
//
// Bit order is big-endian throughout: the first qubit is the most
// significant bit of the basis index, so |q1 q2 q3> sits at index
// q1*4 + q2*2 + q3. The last qubit is the game outcome: |0> = loss,
// |1> = win.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "parrondo/common.hpp"

namespace parrondo {

using Complex = std::complex<double>;

// A normalized state vector over 2^k basis states, k >= 1. Immutable after
// construction; construction rejects NaN/Inf entries, non-power-of-two
// lengths, and vectors whose norm deviates from 1 by more than 1e-9.
class PureState {
public:
    explicit PureState(std::vector<Complex> amplitudes);

    // |index> on num_qubits qubits.
    static PureState basis(int num_qubits, std::size_t index);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }
    const std::vector<Complex>& amplitudes() const { return amps_; }

private:
    std::vector<Complex> amps_;
    int num_qubits_;
};

// One basis label with explicit bits, most significant (first qubit) first.
struct BasisLabel {
    std::vector<int> bits;

    std::size_t index() const;
    static BasisLabel from_index(std::size_t index, int num_qubits);
    std::string to_string() const;  // e.g. "|011>"
};

// Kronecker product of the factors in big-endian order. Total qubit count
// is capped at 20.
PureState tensor(std::span<const PureState> factors);
PureState tensor(std::initializer_list<PureState> factors);

double norm_squared(const PureState& state);

// Measurement mass on the winning subset: basis states whose last qubit
// (least significant bit) is |1>.
double win_probability(const PureState& state);
double loss_probability(const PureState& state);

}  // namespace parrondo
