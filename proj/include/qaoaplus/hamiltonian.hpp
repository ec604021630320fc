#pragma once

#include "qaoaplus/problem.hpp"

#include <vector>

namespace qaoaplus {

/// One partial mixer: flip `target` when every qubit in `zero_controls` is |0>.
struct MixerTerm {
    unsigned target = 0;
    std::vector<unsigned> zero_controls; // sorted
    Mask control_mask = 0;

    friend bool operator==(const MixerTerm &, const MixerTerm &) = default;
};

/// Coefficient c_i of (1 - Z_i)/2 in the phase Hamiltonian, per qubit.
using PhaseCoefficients = std::vector<double>;

/// c_i = lambda1 * omega_i - lambda2
PhaseCoefficients phase_coefficients(const MecInstance &instance,
                                     const Lambdas &lambdas);

/// c_i = lambda1 * omega_i - lambda2 - lambda3 * cost_i
PhaseCoefficients tail_phase_coefficients(const TailInstance &instance,
                                          const TailLambdas &lambdas);

/// One term per vertex in ascending target order, controlled on its neighborhood.
std::vector<MixerTerm> mixer_terms(const ConflictGraph &graph);

} // namespace qaoaplus
