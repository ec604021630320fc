#include "qaoaplus/optimize.hpp"

#include "qaoaplus/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <thread>

namespace qaoaplus {

void OptSettings::validate() const {
    if (max_iterations == 0)
        throw DomainError("max_iterations must be positive");
    if (!(gradient_eps > 0.0))
        throw DomainError("gradient_eps must be positive");
    if (!(convergence_tol > 0.0))
        throw DomainError("convergence_tol must be positive");
    if (restarts == 0)
        throw DomainError("restarts must be at least 1");
}

std::vector<double> finite_diff_gradient(const Objective &objective,
                                         std::span<const double> x, double eps) {
    if (!(eps > 0.0))
        throw DomainError("finite-difference step must be positive");
    std::vector<double> probe(x.begin(), x.end());
    std::vector<double> grad(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + eps;
        const double up = objective(probe);
        probe[i] = x[i] - eps;
        const double down = objective(probe);
        probe[i] = x[i];
        grad[i] = (up - down) / (2.0 * eps);
    }
    return grad;
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

bool all_finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x))
            return false;
    return true;
}

constexpr double kArmijo = 1e-4;
constexpr double kBacktrack = 0.5;
constexpr int kMaxBacktracks = 60;

} // namespace

BfgsResult bfgs_minimize(const Objective &objective, std::span<const double> x0,
                         const OptSettings &settings) {
    settings.validate();
    const std::size_t dim = x0.size();
    BfgsResult out;
    out.x.assign(x0.begin(), x0.end());
    out.value = objective(out.x);
    if (!std::isfinite(out.value)) {
        out.failed = true;
        return out;
    }
    std::vector<double> g = finite_diff_gradient(objective, out.x, settings.gradient_eps);
    if (!all_finite(g)) {
        out.failed = true;
        return out;
    }

    // Row-major inverse Hessian approximation.
    std::vector<double> h(dim * dim, 0.0);
    auto reset_identity = [&] {
        std::fill(h.begin(), h.end(), 0.0);
        for (std::size_t i = 0; i < dim; ++i)
            h[i * dim + i] = 1.0;
    };
    reset_identity();
    bool scaled = false;

    std::vector<double> d(dim), x_new(dim), s(dim), y(dim), hy(dim);
    for (out.iterations = 0; out.iterations < settings.max_iterations;
         ++out.iterations) {
        if (std::sqrt(dot(g, g)) < settings.convergence_tol) {
            out.converged = true;
            break;
        }
        for (std::size_t i = 0; i < dim; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < dim; ++j)
                acc -= h[i * dim + j] * g[j];
            d[i] = acc;
        }
        double slope = dot(g, d);
        if (!(slope < 0.0)) {
            reset_identity();
            scaled = false;
            for (std::size_t i = 0; i < dim; ++i)
                d[i] = -g[i];
            slope = -dot(g, g);
        }

        double step = 1.0;
        double f_new = 0.0;
        bool accepted = false;
        for (int k = 0; k < kMaxBacktracks; ++k) {
            for (std::size_t i = 0; i < dim; ++i)
                x_new[i] = out.x[i] + step * d[i];
            f_new = objective(x_new);
            if (!std::isfinite(f_new)) {
                out.failed = true;
                return out;
            }
            if (f_new <= out.value + kArmijo * step * slope) {
                accepted = true;
                break;
            }
            step *= kBacktrack;
        }
        if (!accepted)
            break; // no descent possible at working precision

        std::vector<double> g_new =
            finite_diff_gradient(objective, x_new, settings.gradient_eps);
        if (!all_finite(g_new)) {
            out.failed = true;
            return out;
        }
        for (std::size_t i = 0; i < dim; ++i) {
            s[i] = x_new[i] - out.x[i];
            y[i] = g_new[i] - g[i];
        }
        const double sy = dot(s, y);
        if (sy > 1e-14 * std::sqrt(dot(s, s) * dot(y, y))) {
            if (!scaled) {
                const double gamma = sy / dot(y, y);
                for (auto &v : h)
                    v *= gamma;
                scaled = true;
            }
            // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
            const double rho = 1.0 / sy;
            for (std::size_t i = 0; i < dim; ++i) {
                double acc = 0.0;
                for (std::size_t j = 0; j < dim; ++j)
                    acc += h[i * dim + j] * y[j];
                hy[i] = acc;
            }
            const double yhy = dot(y, hy);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    h[i * dim + j] += rho * ((1.0 + rho * yhy) * s[i] * s[j] -
                                             hy[i] * s[j] - s[i] * hy[j]);
        }
        out.x = x_new;
        out.value = f_new;
        g = std::move(g_new);
    }
    return out;
}

unsigned worker_threads() {
    if (const char *env = std::getenv("QAOAPLUS_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1)
            return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace {

template <typename Fn> void parallel_for(unsigned count, Fn &&fn) {
    const unsigned threads = std::min(worker_threads(), count);
    if (threads <= 1) {
        for (unsigned i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<unsigned> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (unsigned i = next++; i < count; i = next++)
                fn(i);
        });
}

struct RestartOutcome {
    BfgsResult run;
    Params params;
};

LevelResult reduce_restarts(const CompiledAnsatz &ansatz, Mask x_sol,
                            const std::vector<RestartOutcome> &outcomes) {
    LevelResult result;
    result.p = ansatz.level();
    result.variant = ansatz.variant();
    bool have_best = false;
    for (unsigned r = 0; r < outcomes.size(); ++r) {
        const auto &o = outcomes[r];
        if (o.run.failed) {
            ++result.failed_restarts;
            continue;
        }
        const double fp = -o.run.value;
        result.restart_values.push_back(fp);
        if (!have_best || fp > result.best_fp) {
            have_best = true;
            result.best_fp = fp;
            result.best_params = o.params;
            result.best_restart = r;
        }
    }
    if (!have_best)
        throw OptimizationError("all " + std::to_string(outcomes.size()) +
                                " restarts failed at level " +
                                std::to_string(ansatz.level()));
    result.success_prob = success_probability(ansatz, result.best_params, x_sol);
    return result;
}

// Runs every restart from the starts produced by `make_start(r)`.
template <typename StartFn>
LevelResult run_restarts(const CompiledAnsatz &ansatz, Mask x_sol,
                         const OptSettings &settings, StartFn &&make_start) {
    settings.validate();
    if (x_sol >= (Mask{1} << ansatz.num_qubits()))
        throw IndexError("solution index out of range");
    const Objective negative_fp = [&ansatz](std::span<const double> x) {
        return -f_p(ansatz, ansatz.unflatten(x));
    };
    std::vector<RestartOutcome> outcomes(settings.restarts);
    parallel_for(settings.restarts, [&](unsigned r) {
        const Params start = make_start(r);
        auto &o = outcomes[r];
        o.run = bfgs_minimize(negative_fp, start.flatten(), settings);
        if (!o.run.failed)
            o.params = ansatz.unflatten(o.run.x);
    });
    return reduce_restarts(ansatz, x_sol, outcomes);
}

} // namespace

Params random_params(const CompiledAnsatz &ansatz, RestartStream &rng) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    Params p;
    if (ansatz.variant() == Variant::original)
        for (unsigned k = 0; k < ansatz.level(); ++k)
            p.gammas.push_back(rng.uniform(0.0, two_pi));
    for (unsigned k = 0; k < ansatz.level(); ++k)
        p.betas.push_back(rng.uniform(0.0, std::numbers::pi));
    return p;
}

LevelResult multistart(const CompiledAnsatz &ansatz, Mask x_sol,
                       const OptSettings &settings) {
    return run_restarts(ansatz, x_sol, settings, [&](unsigned r) {
        RestartStream rng(settings.rng_seed, ansatz.level(), r);
        return random_params(ansatz, rng);
    });
}

Params extend_params(const Params &previous, const CompiledAnsatz &ansatz,
                     double gamma_new, double beta_new) {
    Params next = previous;
    if (ansatz.variant() == Variant::original)
        next.gammas.push_back(gamma_new);
    next.betas.push_back(beta_new);
    ansatz.check_shape(next);
    return next;
}

std::vector<LevelResult> parameter_fixing_schedule(const CompiledAnsatz &ansatz,
                                                   unsigned p_max, Mask x_sol,
                                                   const OptSettings &settings) {
    if (p_max < 1)
        throw DomainError("p_max must be at least 1");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<LevelResult> levels;
    levels.push_back(multistart(ansatz.with_level(1), x_sol, settings));
    for (unsigned p = 2; p <= p_max; ++p) {
        const auto level_ansatz = ansatz.with_level(p);
        const Params &prev = levels.back().best_params;
        levels.push_back(run_restarts(level_ansatz, x_sol, settings, [&](unsigned r) {
            if (r == 0)
                return extend_params(prev, level_ansatz, 0.0, 0.0);
            RestartStream rng(settings.rng_seed, p, r);
            const double g = rng.uniform(0.0, two_pi);
            const double b = rng.uniform(0.0, std::numbers::pi);
            return extend_params(prev, level_ansatz, g, b);
        }));
    }
    return levels;
}

} // namespace qaoaplus
