#include "parrondo/qcore.hpp"

#include <bit>
#include <stdexcept>

namespace parrondo {

namespace {

constexpr int kMaxQubits = 20;

bool finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

double sum_norm(const std::vector<Complex>& amps) {
    double total = 0.0;
    for (const auto& a : amps) total += std::norm(a);
    return total;
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    const std::size_t n = amps_.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw std::invalid_argument(
            "PureState: amplitude count must be 2^k with k >= 1, got " + std::to_string(n));
    }
    num_qubits_ = std::bit_width(n) - 1;
    if (num_qubits_ > kMaxQubits) {
        throw std::invalid_argument("PureState: more than 20 qubits");
    }
    for (const auto& a : amps_) {
        if (!finite(a)) throw std::invalid_argument("PureState: non-finite amplitude");
    }
    const double norm = sum_norm(amps_);
    if (std::abs(norm - 1.0) > kNormTol) {
        throw std::invalid_argument("PureState: not normalized, |amps|^2 = " +
                                    std::to_string(norm));
    }
}

PureState PureState::basis(int num_qubits, std::size_t index) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("PureState::basis: qubit count out of range");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) {
        throw std::invalid_argument("PureState::basis: index out of range");
    }
    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    amps[index] = Complex{1.0, 0.0};
    return PureState(std::move(amps));
}

std::size_t BasisLabel::index() const {
    std::size_t idx = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("BasisLabel: bits must be 0 or 1");
        idx = (idx << 1) | static_cast<std::size_t>(b);
    }
    return idx;
}

BasisLabel BasisLabel::from_index(std::size_t index, int num_qubits) {
    BasisLabel label;
    label.bits.resize(static_cast<std::size_t>(num_qubits));
    for (int i = 0; i < num_qubits; ++i) {
        label.bits[static_cast<std::size_t>(i)] =
            static_cast<int>((index >> (num_qubits - 1 - i)) & 1u);
    }
    return label;
}

std::string BasisLabel::to_string() const {
    std::string out = "|";
    for (int b : bits) out += static_cast<char>('0' + b);
    out += ">";
    return out;
}

PureState tensor(std::span<const PureState> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("tensor: empty factor list");
    }
    int total_qubits = 0;
    for (const auto& f : factors) total_qubits += f.num_qubits();
    if (total_qubits > kMaxQubits) {
        throw std::invalid_argument("tensor: result exceeds 20 qubits");
    }

    std::vector<Complex> out{Complex{1.0, 0.0}};
    for (const auto& f : factors) {
        std::vector<Complex> next(out.size() * f.dim());
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (std::size_t j = 0; j < f.dim(); ++j) {
                next[i * f.dim() + j] = out[i] * f[j];
            }
        }
        out = std::move(next);
    }
    return PureState(std::move(out));
}

PureState tensor(std::initializer_list<PureState> factors) {
    return tensor(std::span<const PureState>(factors.begin(), factors.size()));
}

double norm_squared(const PureState& state) {
    return sum_norm(state.amplitudes());
}

double win_probability(const PureState& state) {
    double p = 0.0;
    for (std::size_t i = 1; i < state.dim(); i += 2) p += std::norm(state[i]);
    return p;
}

double loss_probability(const PureState& state) {
    double p = 0.0;
    for (std::size_t i = 0; i < state.dim(); i += 2) p += std::norm(state[i]);
    return p;
}

}  // namespace parrondo
