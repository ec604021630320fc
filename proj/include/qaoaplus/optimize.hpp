#pragma once

#include "qaoaplus/ansatz.hpp"
#include "qaoaplus/random.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qaoaplus {

using Objective = std::function<double(std::span<const double>)>;

struct OptSettings {
    unsigned max_iterations = 200;
    double gradient_eps = 1e-6;
    double convergence_tol = 1e-8;
    unsigned restarts = 50;
    std::uint64_t rng_seed = 0;

    /// Throws DomainError on non-positive fields.
    void validate() const;
};

struct BfgsResult {
    std::vector<double> x;
    double value = 0.0;
    unsigned iterations = 0;
    bool converged = false; ///< gradient norm fell below tolerance
    bool failed = false;    ///< a non-finite objective value was hit
};

struct LevelResult {
    unsigned p = 0;
    Variant variant = Variant::original;
    Params best_params;
    double best_fp = 0.0;
    double success_prob = 0.0;
    /// Final f_p of each successful restart, in restart order.
    std::vector<double> restart_values;
    unsigned failed_restarts = 0;
    unsigned best_restart = 0;
};

/// Central differences (f(x + eps e_i) - f(x - eps e_i)) / (2 eps).
std::vector<double> finite_diff_gradient(const Objective &objective,
                                         std::span<const double> x, double eps);

/// BFGS on the inverse Hessian with backtracking Armijo line search and
/// finite-difference gradients. Minimizes; returns the best point visited.
BfgsResult bfgs_minimize(const Objective &objective, std::span<const double> x0,
                         const OptSettings &settings);

/// Thread count for restart-level parallelism; QAOAPLUS_THREADS overrides.
unsigned worker_threads();

/**
 * Deterministic stream for (seed, level, restart). Draws depend only on the
 * key, so restarts can run in any order or in parallel.
 */
class RestartStream : public SplitMix64 {
  public:
    RestartStream(std::uint64_t seed, unsigned level, unsigned restart)
        : SplitMix64(mix_seed({seed, level, restart})) {}
};

/// Uniform random parameters: gamma in [0, 2pi), beta in [0, pi).
Params random_params(const CompiledAnsatz &ansatz, RestartStream &rng);

/**
 * Maximizes f_p from `settings.restarts` random starts. Ties in f_p go to
 * the lowest restart index. Success probability is taken at the best params
 * against `x_sol`.
 */
LevelResult multistart(const CompiledAnsatz &ansatz, Mask x_sol,
                       const OptSettings &settings);

/// Warm start used at level p of the fixing schedule: previous optima with the
/// new layer appended as (gamma_new, beta_new).
Params extend_params(const Params &previous, const CompiledAnsatz &ansatz,
                     double gamma_new, double beta_new);

/**
 * Levels 1..p_max. Level 1 is a plain multistart; level p > 1 starts every
 * restart from the level p-1 optimum plus one random layer, all coordinates
 * free. Restart 0 of each warm level uses a zero new layer so the previous
 * optimum is reproduced exactly and best_fp cannot drop.
 */
std::vector<LevelResult> parameter_fixing_schedule(const CompiledAnsatz &ansatz,
                                                   unsigned p_max, Mask x_sol,
                                                   const OptSettings &settings);

} // namespace qaoaplus
