#include "qaoaplus/statevector.hpp"

#include "qaoaplus/errors.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace qaoaplus {

double State::norm_squared() const noexcept {
    double total = 0.0;
    for (const auto &a : amplitudes_)
        total += std::norm(a);
    return total;
}

State State::from_amplitudes(std::vector<Complex> amplitudes) {
    const auto dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim) ||
        dim > (std::size_t{1} << kMaxQubits))
        throw SizeError("amplitude count must be a power of two in [2, 2^24], got " +
                        std::to_string(dim));
    const auto n = static_cast<unsigned>(std::countr_zero(dim));
    return State(n, std::move(amplitudes));
}

State init_zero(unsigned n) {
    if (n < 1 || n > kMaxQubits)
        throw SizeError("qubit count must be in [1, 24], got " +
                        std::to_string(n));
    std::vector<Complex> amps(std::size_t{1} << n);
    amps[0] = 1.0;
    return State(n, std::move(amps));
}

std::vector<double> diagonal_from_coefficients(std::span<const double> coeffs) {
    const std::size_t dim = std::size_t{1} << coeffs.size();
    std::vector<double> diag(dim, 0.0);
    // Peel the lowest set bit; every index reuses an already-filled entry.
    for (std::size_t b = 1; b < dim; ++b)
        diag[b] = diag[b & (b - 1)] + coeffs[std::countr_zero(b)];
    return diag;
}

void apply_diagonal_phase(State &state, double gamma,
                          std::span<const double> diag) {
    if (diag.size() != state.dimension())
        throw ShapeError("diagonal length " + std::to_string(diag.size()) +
                         " does not match state dimension " +
                         std::to_string(state.dimension()));
    if (gamma == 0.0)
        return;
    auto amps = state.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b)
        amps[b] *= std::polar(1.0, -gamma * diag[b]);
}

void apply_phase_separator(State &state, double gamma,
                           std::span<const double> coeffs) {
    if (coeffs.size() != state.num_qubits())
        throw ShapeError("expected " + std::to_string(state.num_qubits()) +
                         " phase coefficients, got " +
                         std::to_string(coeffs.size()));
    const auto diag = diagonal_from_coefficients(coeffs);
    apply_diagonal_phase(state, gamma, diag);
}

void apply_partial_mixer_masked(State &state, unsigned target,
                                Mask control_mask, double beta) {
    const unsigned n = state.num_qubits();
    if (target >= n)
        throw IndexError("target qubit " + std::to_string(target) +
                         " out of range for " + std::to_string(n) + " qubits");
    if (n < 64 && (control_mask >> n) != 0)
        throw IndexError("control qubit out of range");
    const Mask target_bit = Mask{1} << target;
    if (control_mask & target_bit)
        throw IndexError("target qubit " + std::to_string(target) +
                         " listed among its own controls");

    const double c = std::cos(beta);
    const double s = std::sin(beta);
    auto amps = state.amplitudes();
    const std::size_t dim = amps.size();
    // Enumerate indices with the target bit clear by inserting a zero bit.
    const std::size_t low = target_bit - 1;
    for (std::size_t k = 0; k < dim / 2; ++k) {
        const std::size_t b0 = ((k & ~low) << 1) | (k & low);
        if (b0 & control_mask)
            continue;
        const std::size_t b1 = b0 | target_bit;
        const Complex a0 = amps[b0];
        const Complex a1 = amps[b1];
        // -i*s*a = (s*a.imag, -s*a.real)
        amps[b0] = Complex(c * a0.real() + s * a1.imag(),
                           c * a0.imag() - s * a1.real());
        amps[b1] = Complex(c * a1.real() + s * a0.imag(),
                           c * a1.imag() - s * a0.real());
    }
}

void apply_partial_mixer(State &state, unsigned target,
                         std::span<const unsigned> zero_controls, double beta) {
    const unsigned n = state.num_qubits();
    Mask mask = 0;
    for (unsigned q : zero_controls) {
        if (q >= n)
            throw IndexError("control qubit " + std::to_string(q) +
                             " out of range for " + std::to_string(n) +
                             " qubits");
        if (q == target)
            throw IndexError("target qubit " + std::to_string(target) +
                             " listed among its own controls");
        mask |= Mask{1} << q;
    }
    apply_partial_mixer_masked(state, target, mask, beta);
}

double expectation_diagonal(const State &state, std::span<const double> diag) {
    if (diag.size() != state.dimension())
        throw ShapeError("diagonal length " + std::to_string(diag.size()) +
                         " does not match state dimension " +
                         std::to_string(state.dimension()));
    double total = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b)
        total += std::norm(amps[b]) * diag[b];
    return total;
}

double probability_of(const State &state, std::size_t index) {
    if (index >= state.dimension())
        throw IndexError("basis index " + std::to_string(index) +
                         " out of range for dimension " +
                         std::to_string(state.dimension()));
    return std::norm(state[index]);
}

} // namespace qaoaplus
