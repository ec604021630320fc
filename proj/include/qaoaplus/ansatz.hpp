#pragma once

#include "qaoaplus/hamiltonian.hpp"
#include "qaoaplus/problem.hpp"
#include "qaoaplus/statevector.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qaoaplus {

/// `original` alternates phase and mixer layers (2p parameters);
/// `optimized` drops the phase layers entirely (p parameters).
enum class Variant { original, optimized };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);

/// Variational angles. `gammas` is empty for the optimized variant.
struct Params {
    std::vector<double> gammas;
    std::vector<double> betas;

    /// Flat layout (gamma_1..gamma_p, beta_1..beta_p); gammas omitted when empty.
    [[nodiscard]] std::vector<double> flatten() const;

    friend bool operator==(const Params &, const Params &) = default;
};

/// Reporting form: gamma wrapped into [0, 2pi), beta into [0, pi).
/// The objective is not invariant under this map; never evaluate wrapped values.
Params wrapped_for_report(const Params &params);

class CompiledAnsatz {
  public:
    CompiledAnsatz(PhaseCoefficients phase, std::vector<MixerTerm> mixers,
                   Variant variant, unsigned level);

    [[nodiscard]] unsigned num_qubits() const noexcept {
        return static_cast<unsigned>(phase_.size());
    }
    [[nodiscard]] unsigned level() const noexcept { return level_; }
    [[nodiscard]] Variant variant() const noexcept { return variant_; }
    [[nodiscard]] const PhaseCoefficients &phase() const noexcept { return phase_; }
    [[nodiscard]] const std::vector<MixerTerm> &mixers() const noexcept {
        return mixers_;
    }
    /// Phase Hamiltonian diagonal over all 2^n basis states (constant term dropped).
    [[nodiscard]] const std::vector<double> &diagonal() const noexcept {
        return diagonal_;
    }
    [[nodiscard]] std::size_t num_parameters() const noexcept {
        return variant_ == Variant::original ? 2 * level_ : level_;
    }

    /// Same circuit at a different level.
    [[nodiscard]] CompiledAnsatz with_level(unsigned level) const;
    [[nodiscard]] CompiledAnsatz with_variant(Variant variant) const;

    /// Inverse of Params::flatten for this ansatz's shape.
    [[nodiscard]] Params unflatten(std::span<const double> x) const;
    void check_shape(const Params &params) const;

  private:
    PhaseCoefficients phase_;
    std::vector<MixerTerm> mixers_;
    std::vector<double> diagonal_;
    Variant variant_;
    unsigned level_;
};

CompiledAnsatz compile_ansatz(const MecInstance &instance, const Lambdas &lambdas,
                              Variant variant, unsigned level);

CompiledAnsatz compile_tail_ansatz(const TailInstance &instance,
                                   const TailLambdas &lambdas, Variant variant,
                                   unsigned level);

/// Runs the circuit from |0...0>: per level, phase layer (original only) then
/// the partial mixers in ascending target order.
State evolve(const CompiledAnsatz &ansatz, const Params &params);

/// <psi|H_P|psi> using the ansatz's cached diagonal.
double f_p(const CompiledAnsatz &ansatz, const Params &params);

/// <psi|H_P|psi> with the diagonal rebuilt from objective_value; both
/// variants measure the full phase Hamiltonian.
double f_p(const CompiledAnsatz &ansatz, const Params &params,
           const MecInstance &instance, const Lambdas &lambdas);

double success_probability(const CompiledAnsatz &ansatz, const Params &params,
                           Mask x_sol);

} // namespace qaoaplus
