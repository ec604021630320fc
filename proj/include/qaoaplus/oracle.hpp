#pragma once

#include "qaoaplus/ansatz.hpp"
#include "qaoaplus/problem.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace qaoaplus {

/// Enumeration cap (16M masks).
inline constexpr unsigned kMaxOracleSets = 24;
/// Explicit-matrix cross-check cap.
inline constexpr unsigned kMaxDenseQubits = 10;

/// Brute-force ground truth for one MEC instance.
struct OracleReport {
    std::vector<Mask> feasible_masks; ///< independent sets, ascending
    std::vector<Mask> exact_covers;
    std::vector<Mask> mec_masks;      ///< exact covers of minimum cardinality
    std::vector<Mask> argmax_masks;   ///< feasible maximizers of the objective
    double argmax_value = 0.0;
    std::optional<Mask> x_sol;        ///< set iff the MEC is unique

    /// Objective argmax is not a single mask.
    [[nodiscard]] bool degenerate() const noexcept { return argmax_masks.size() != 1; }
    /// Unique EC, unique MEC, and the objective argmax is that MEC.
    [[nodiscard]] bool accepted() const noexcept;
};

/// Brute-force ground truth for a tail-assignment instance.
struct TailOracleReport {
    std::vector<Mask> feasible_masks;
    std::vector<Mask> route_partitions; ///< masks meeting sum_r a_fr x_r = 1
    std::vector<Mask> argmax_masks;
    double argmax_value = 0.0;
    std::optional<Mask> x_sol; ///< set iff the argmax is unique

    [[nodiscard]] bool degenerate() const noexcept { return argmax_masks.size() != 1; }
};

/// All independent sets in ascending mask order.
std::vector<Mask> enumerate_feasible(const ConflictGraph &graph);

/// Independent-set count by recursive branching on the lowest free vertex.
/// Shares no code with enumerate_feasible.
std::size_t count_independent_sets(const ConflictGraph &graph);

/// Full enumeration; argmax uses default weights unless `lambdas` is given.
OracleReport solve(const MecInstance &instance,
                   const std::optional<Lambdas> &lambdas = std::nullopt);

TailOracleReport solve_tail(const TailInstance &instance, const TailLambdas &lambdas);

/// True iff the unique MEC strictly beats every other feasible selection.
/// Throws PreconditionError when the MEC is not unique.
bool verify_lambda_lemma(const MecInstance &instance, const Lambdas &lambdas);

/// Explicit zero-controlled RX(2 beta) over the full 2^n space.
Eigen::MatrixXcd partial_mixer_matrix(unsigned n, const MixerTerm &term, double beta);
/// diag(exp(-i gamma d_b)).
Eigen::MatrixXcd phase_layer_matrix(const CompiledAnsatz &ansatz, double gamma);
/// Product of partial_mixer_matrix over the terms, first term applied first.
Eigen::MatrixXcd mixer_layer_matrix(const CompiledAnsatz &ansatz, double beta);

/// Same circuit as evolve(), built from explicit layer matrices. n <= 10.
Eigen::VectorXcd dense_layer_oracle(const CompiledAnsatz &ansatz, const Params &params);

} // namespace qaoaplus
