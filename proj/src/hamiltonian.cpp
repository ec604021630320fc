#include "qaoaplus/hamiltonian.hpp"

#include <bit>

namespace qaoaplus {

PhaseCoefficients phase_coefficients(const MecInstance &instance,
                                     const Lambdas &lambdas) {
    PhaseCoefficients c(instance.num_sets());
    for (unsigned i = 0; i < c.size(); ++i)
        c[i] = lambdas.lambda1() * instance.weight(i) - lambdas.lambda2();
    return c;
}

PhaseCoefficients tail_phase_coefficients(const TailInstance &instance,
                                          const TailLambdas &lambdas) {
    PhaseCoefficients c(instance.num_routes());
    for (unsigned i = 0; i < c.size(); ++i)
        c[i] = lambdas.lambda1() * instance.weight(i) - lambdas.lambda2() -
               lambdas.lambda3() * instance.costs()[i];
    return c;
}

std::vector<MixerTerm> mixer_terms(const ConflictGraph &graph) {
    std::vector<MixerTerm> terms;
    terms.reserve(graph.num_vertices());
    for (unsigned v = 0; v < graph.num_vertices(); ++v) {
        MixerTerm t;
        t.target = v;
        t.control_mask = graph.neighbors(v);
        for (Mask b = t.control_mask; b != 0; b &= b - 1)
            t.zero_controls.push_back(static_cast<unsigned>(std::countr_zero(b)));
        terms.push_back(std::move(t));
    }
    return terms;
}

} // namespace qaoaplus
