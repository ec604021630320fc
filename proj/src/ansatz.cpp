#include "qaoaplus/ansatz.hpp"

#include "qaoaplus/errors.hpp"

#include <cmath>
#include <numbers>

namespace qaoaplus {

std::string_view to_string(Variant v) {
    return v == Variant::original ? "original" : "optimized";
}

Variant parse_variant(std::string_view text) {
    if (text == "original")
        return Variant::original;
    if (text == "optimized")
        return Variant::optimized;
    throw DomainError("unknown circuit variant '" + std::string(text) +
                                "' (expected original or optimized)");
}

std::vector<double> Params::flatten() const {
    std::vector<double> x(gammas);
    x.insert(x.end(), betas.begin(), betas.end());
    return x;
}

namespace {

double wrap(double value, double period) {
    double r = std::fmod(value, period);
    if (r < 0.0)
        r += period;
    // fmod of a tiny negative can round up to exactly `period`.
    return r >= period ? 0.0 : r;
}

} // namespace

Params wrapped_for_report(const Params &params) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    Params out;
    for (double g : params.gammas)
        out.gammas.push_back(wrap(g, two_pi));
    for (double b : params.betas)
        out.betas.push_back(wrap(b, std::numbers::pi));
    return out;
}

CompiledAnsatz::CompiledAnsatz(PhaseCoefficients phase,
                               std::vector<MixerTerm> mixers, Variant variant,
                               unsigned level)
    : phase_(std::move(phase)), mixers_(std::move(mixers)), variant_(variant),
      level_(level) {
    if (level_ < 1)
        throw DomainError("ansatz level must be at least 1");
    const auto n = static_cast<unsigned>(phase_.size());
    if (n < 1 || n > kMaxQubits)
        throw SizeError("ansatz supports 1..24 qubits, got " + std::to_string(n));
    for (const auto &t : mixers_) {
        if (t.target >= n || (n < 64 && (t.control_mask >> n) != 0))
            throw IndexError("mixer term refers to a qubit beyond " +
                             std::to_string(n));
        if ((t.control_mask >> t.target) & 1u)
            throw IndexError("mixer target listed among its own controls");
    }
    diagonal_ = diagonal_from_coefficients(phase_);
}

CompiledAnsatz CompiledAnsatz::with_level(unsigned level) const {
    CompiledAnsatz copy = *this;
    if (level < 1)
        throw DomainError("ansatz level must be at least 1");
    copy.level_ = level;
    return copy;
}

CompiledAnsatz CompiledAnsatz::with_variant(Variant variant) const {
    CompiledAnsatz copy = *this;
    copy.variant_ = variant;
    return copy;
}

Params CompiledAnsatz::unflatten(std::span<const double> x) const {
    if (x.size() != num_parameters())
        throw ShapeError("expected " + std::to_string(num_parameters()) +
                         " parameters, got " + std::to_string(x.size()));
    Params p;
    if (variant_ == Variant::original) {
        p.gammas.assign(x.begin(), x.begin() + level_);
        p.betas.assign(x.begin() + level_, x.end());
    } else {
        p.betas.assign(x.begin(), x.end());
    }
    return p;
}

void CompiledAnsatz::check_shape(const Params &params) const {
    const std::size_t want_gammas = variant_ == Variant::original ? level_ : 0;
    if (params.gammas.size() != want_gammas || params.betas.size() != level_)
        throw ShapeError(std::string(to_string(variant_)) + " ansatz at level " +
                         std::to_string(level_) + " needs " +
                         std::to_string(want_gammas) + " gammas and " +
                         std::to_string(level_) + " betas, got " +
                         std::to_string(params.gammas.size()) + " and " +
                         std::to_string(params.betas.size()));
}

CompiledAnsatz compile_ansatz(const MecInstance &instance, const Lambdas &lambdas,
                              Variant variant, unsigned level) {
    return CompiledAnsatz(phase_coefficients(instance, lambdas),
                          mixer_terms(conflict_graph(instance)), variant, level);
}

CompiledAnsatz compile_tail_ansatz(const TailInstance &instance,
                                   const TailLambdas &lambdas, Variant variant,
                                   unsigned level) {
    return CompiledAnsatz(tail_phase_coefficients(instance, lambdas),
                          mixer_terms(conflict_graph(instance)), variant, level);
}

State evolve(const CompiledAnsatz &ansatz, const Params &params) {
    ansatz.check_shape(params);
    State state = init_zero(ansatz.num_qubits());
    for (unsigned k = 0; k < ansatz.level(); ++k) {
        if (ansatz.variant() == Variant::original)
            apply_diagonal_phase(state, params.gammas[k], ansatz.diagonal());
        for (const auto &term : ansatz.mixers())
            apply_partial_mixer_masked(state, term.target, term.control_mask,
                                       params.betas[k]);
    }
    return state;
}

double f_p(const CompiledAnsatz &ansatz, const Params &params) {
    return expectation_diagonal(evolve(ansatz, params), ansatz.diagonal());
}

double f_p(const CompiledAnsatz &ansatz, const Params &params,
           const MecInstance &instance, const Lambdas &lambdas) {
    if (instance.num_sets() != ansatz.num_qubits())
        throw ShapeError("instance and ansatz disagree on qubit count");
    const State state = evolve(ansatz, params);
    std::vector<double> diag(state.dimension());
    for (std::size_t b = 0; b < diag.size(); ++b)
        diag[b] = objective_value(instance, lambdas, b);
    return expectation_diagonal(state, diag);
}

double success_probability(const CompiledAnsatz &ansatz, const Params &params,
                           Mask x_sol) {
    if (x_sol >= (Mask{1} << ansatz.num_qubits()))
        throw IndexError("solution index out of range");
    return probability_of(evolve(ansatz, params), x_sol);
}

} // namespace qaoaplus
