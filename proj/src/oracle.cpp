#include "qaoaplus/oracle.hpp"

#include "qaoaplus/errors.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace qaoaplus {

namespace {

constexpr double kTieTolerance = 1e-12;

void check_enumerable(unsigned n) {
    if (n > kMaxOracleSets)
        throw SizeError("brute-force enumeration is capped at " +
                        std::to_string(kMaxOracleSets) + " sets, got " +
                        std::to_string(n));
}

// Collects every mask within kTieTolerance of the maximum.
template <typename ValueFn>
void fill_argmax(const std::vector<Mask> &feasible, ValueFn &&value,
                 std::vector<Mask> &argmax, double &best) {
    argmax.clear();
    best = -INFINITY;
    for (Mask b : feasible) {
        const double v = value(b);
        if (v > best + kTieTolerance) {
            best = v;
            argmax.assign(1, b);
        } else if (std::abs(v - best) <= kTieTolerance) {
            argmax.push_back(b);
            best = std::max(best, v);
        }
    }
}

std::size_t count_from(const ConflictGraph &graph, Mask candidates) {
    if (candidates == 0)
        return 1;
    const auto v = static_cast<unsigned>(std::countr_zero(candidates));
    const Mask without_v = candidates & ~(Mask{1} << v);
    return count_from(graph, without_v) +
           count_from(graph, without_v & ~graph.neighbors(v));
}

} // namespace

bool OracleReport::accepted() const noexcept {
    return exact_covers.size() == 1 && mec_masks.size() == 1 &&
           argmax_masks.size() == 1 && argmax_masks.front() == mec_masks.front() &&
           x_sol.has_value();
}

std::vector<Mask> enumerate_feasible(const ConflictGraph &graph) {
    const unsigned n = graph.num_vertices();
    check_enumerable(n);
    std::vector<Mask> out;
    const Mask end = Mask{1} << n;
    for (Mask b = 0; b < end; ++b)
        if (is_independent(graph, b))
            out.push_back(b);
    return out;
}

std::size_t count_independent_sets(const ConflictGraph &graph) {
    const unsigned n = graph.num_vertices();
    check_enumerable(n);
    return count_from(graph, n == 64 ? ~Mask{0} : (Mask{1} << n) - 1);
}

OracleReport solve(const MecInstance &instance, const std::optional<Lambdas> &lambdas) {
    const unsigned n = instance.num_sets();
    check_enumerable(n);
    const Lambdas weights =
        lambdas ? *lambdas : default_lambdas(n, instance.universe_size());
    OracleReport report;
    report.feasible_masks = enumerate_feasible(conflict_graph(instance));

    int best_size = -1;
    for (Mask b : report.feasible_masks) {
        if (!is_exact_cover(instance, b))
            continue;
        report.exact_covers.push_back(b);
        const int size = std::popcount(b);
        if (best_size < 0 || size < best_size) {
            best_size = size;
            report.mec_masks.assign(1, b);
        } else if (size == best_size) {
            report.mec_masks.push_back(b);
        }
    }
    if (report.mec_masks.size() == 1)
        report.x_sol = report.mec_masks.front();

    fill_argmax(
        report.feasible_masks,
        [&](Mask b) { return objective_value(instance, weights, b); },
        report.argmax_masks, report.argmax_value);
    return report;
}

TailOracleReport solve_tail(const TailInstance &instance, const TailLambdas &lambdas) {
    check_enumerable(instance.num_routes());
    TailOracleReport report;
    report.feasible_masks = enumerate_feasible(conflict_graph(instance));
    for (Mask b : report.feasible_masks)
        if (is_route_partition(instance, b))
            report.route_partitions.push_back(b);
    fill_argmax(
        report.feasible_masks,
        [&](Mask b) { return tail_objective_value(instance, lambdas, b); },
        report.argmax_masks, report.argmax_value);
    if (report.argmax_masks.size() == 1)
        report.x_sol = report.argmax_masks.front();
    return report;
}

bool verify_lambda_lemma(const MecInstance &instance, const Lambdas &lambdas) {
    const auto report = solve(instance, lambdas);
    if (!report.x_sol)
        throw PreconditionError("lambda check needs a unique minimum exact cover; found " +
                                std::to_string(report.mec_masks.size()));
    const Mask mec = *report.x_sol;
    const double f_mec = objective_value(instance, lambdas, mec);
    for (Mask b : report.feasible_masks)
        if (b != mec && !(f_mec > objective_value(instance, lambdas, b)))
            return false;
    return true;
}

Eigen::MatrixXcd partial_mixer_matrix(unsigned n, const MixerTerm &term, double beta) {
    if (n > kMaxDenseQubits)
        throw SizeError("dense matrices are capped at " +
                        std::to_string(kMaxDenseQubits) + " qubits");
    const Eigen::Index dim = Eigen::Index{1} << n;
    const std::complex<double> c(std::cos(beta), 0.0);
    const std::complex<double> mis(0.0, -std::sin(beta));
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        bool controls_clear = true;
        for (unsigned q : term.zero_controls)
            if ((col >> q) & 1)
                controls_clear = false;
        if (!controls_clear) {
            u(col, col) = 1.0;
            continue;
        }
        const Eigen::Index flipped = col ^ (Eigen::Index{1} << term.target);
        u(col, col) = c;
        u(flipped, col) = mis;
    }
    return u;
}

Eigen::MatrixXcd phase_layer_matrix(const CompiledAnsatz &ansatz, double gamma) {
    const unsigned n = ansatz.num_qubits();
    if (n > kMaxDenseQubits)
        throw SizeError("dense matrices are capped at " +
                        std::to_string(kMaxDenseQubits) + " qubits");
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        // Sum coefficients bit by bit rather than reuse the cached diagonal.
        double energy = 0.0;
        for (unsigned q = 0; q < n; ++q)
            if ((b >> q) & 1)
                energy += ansatz.phase()[q];
        u(b, b) = std::polar(1.0, -gamma * energy);
    }
    return u;
}

Eigen::MatrixXcd mixer_layer_matrix(const CompiledAnsatz &ansatz, double beta) {
    const unsigned n = ansatz.num_qubits();
    if (n > kMaxDenseQubits)
        throw SizeError("dense matrices are capped at " +
                        std::to_string(kMaxDenseQubits) + " qubits");
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd layer = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto &term : ansatz.mixers())
        layer = partial_mixer_matrix(n, term, beta) * layer;
    return layer;
}

Eigen::VectorXcd dense_layer_oracle(const CompiledAnsatz &ansatz, const Params &params) {
    ansatz.check_shape(params);
    const unsigned n = ansatz.num_qubits();
    if (n > kMaxDenseQubits)
        throw SizeError("dense oracle is capped at " +
                        std::to_string(kMaxDenseQubits) + " qubits");
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    psi(0) = 1.0;
    for (unsigned k = 0; k < ansatz.level(); ++k) {
        if (ansatz.variant() == Variant::original)
            psi = phase_layer_matrix(ansatz, params.gammas[k]) * psi;
        psi = mixer_layer_matrix(ansatz, params.betas[k]) * psi;
    }
    return psi;
}

} // namespace qaoaplus
