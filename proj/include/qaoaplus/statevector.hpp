#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qaoaplus {

using Complex = std::complex<double>;
using Mask = std::uint64_t;

inline constexpr unsigned kMaxQubits = 24;

/**
 * Dense statevector over n qubits.
 *
 * Qubit i is bit i of the basis index, so index 0 is |0...0> and the
 * selection variable of set i+1 lives on qubit i.
 */
class State {
  public:
    State() = default;

    [[nodiscard]] unsigned num_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t dimension() const noexcept {
        return amplitudes_.size();
    }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept {
        return amplitudes_;
    }
    [[nodiscard]] const Complex &operator[](std::size_t i) const {
        return amplitudes_[i];
    }

    /// Sum of squared magnitudes.
    [[nodiscard]] double norm_squared() const noexcept;

    /// Wraps raw amplitudes; length must be a power of two in [2, 2^24].
    static State from_amplitudes(std::vector<Complex> amplitudes);

    friend State init_zero(unsigned n);

  private:
    State(unsigned n, std::vector<Complex> amps)
        : n_(n), amplitudes_(std::move(amps)) {}

    unsigned n_ = 0;
    std::vector<Complex> amplitudes_;
};

/// |0...0> on n qubits, 1 <= n <= 24.
State init_zero(unsigned n);

/// Multiplies amplitude b by exp(-i * gamma * sum_{i in b} coeffs[i]).
void apply_phase_separator(State &state, double gamma,
                           std::span<const double> coeffs);

/// Multiplies amplitude b by exp(-i * gamma * diag[b]).
void apply_diagonal_phase(State &state, double gamma,
                          std::span<const double> diag);

/// Diagonal d[b] = sum of coeffs over the set bits of b.
std::vector<double> diagonal_from_coefficients(std::span<const double> coeffs);

/**
 * RX(2*beta) on `target`, active only where every qubit in `zero_controls`
 * is |0>. Each affected pair (b, b ^ 2^target) is rotated by
 * [[cos b, -i sin b], [-i sin b, cos b]].
 */
void apply_partial_mixer(State &state, unsigned target,
                         std::span<const unsigned> zero_controls, double beta);

/// Same as above with the controls already packed into a bit mask.
void apply_partial_mixer_masked(State &state, unsigned target,
                                Mask control_mask, double beta);

/// sum_b |amp_b|^2 * diag[b]
double expectation_diagonal(const State &state, std::span<const double> diag);

/// |amp_index|^2
double probability_of(const State &state, std::size_t index);

} // namespace qaoaplus
