#include "fixtures.hpp"

#include "qaoaplus/ansatz.hpp"
#include "qaoaplus/errors.hpp"
#include "qaoaplus/instancegen.hpp"
#include "qaoaplus/optimize.hpp"
#include "qaoaplus/oracle.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <numbers>

using namespace qaoaplus;
using namespace qaoaplus::testing;

namespace {

constexpr double kPi = std::numbers::pi;

class ThreadsEnv {
  public:
    explicit ThreadsEnv(const char *value) {
        if (const char *old = std::getenv("QAOAPLUS_THREADS"))
            saved_ = old;
        ::setenv("QAOAPLUS_THREADS", value, 1);
    }
    ~ThreadsEnv() {
        if (saved_.empty())
            ::unsetenv("QAOAPLUS_THREADS");
        else
            ::setenv("QAOAPLUS_THREADS", saved_.c_str(), 1);
    }

  private:
    std::string saved_;
};

OptSettings small_settings(unsigned restarts, std::uint64_t seed = 3) {
    OptSettings s;
    s.restarts = restarts;
    s.rng_seed = seed;
    return s;
}

GeneratedInstance six_qubit(std::uint64_t seed) {
    GenSpec spec;
    spec.n = 6;
    spec.m = 12;
    spec.seed = seed;
    return generate_with_plant(spec);
}

} // namespace

TEST(FiniteDiff, Quadratic) {
    const Objective f = [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; };
    const auto g = finite_diff_gradient(f, std::vector<double>{1.0, -2.0}, 1e-6);
    EXPECT_NEAR(g[0], 2.0, 1e-6);
    EXPECT_NEAR(g[1], -4.0, 1e-6);
}

TEST(FiniteDiff, ConstantIsZero) {
    const Objective f = [](std::span<const double>) { return 3.5; };
    const auto g = finite_diff_gradient(f, std::vector<double>{0.3, 0.7, -1.0}, 1e-6);
    for (double v : g)
        EXPECT_EQ(v, 0.0);
}

TEST(Bfgs, ShiftedQuadratic) {
    const Objective f = [](std::span<const double> x) { return (x[0] - 2) * (x[0] - 2); };
    const auto r = bfgs_minimize(f, std::vector<double>{-5.0}, OptSettings{});
    EXPECT_NEAR(r.x[0], 2.0, 1e-5);
    EXPECT_LT(r.value, 1e-10);
    EXPECT_FALSE(r.failed);
}

TEST(Bfgs, Rosenbrock) {
    const Objective f = [](std::span<const double> x) {
        const double a = 1 - x[0], b = x[1] - x[0] * x[0];
        return a * a + 100 * b * b;
    };
    const auto r = bfgs_minimize(f, std::vector<double>{-1.2, 1.0}, OptSettings{});
    EXPECT_LT(r.value, 1e-8);
}

TEST(Bfgs, NonFiniteObjectiveFlagsFailure) {
    const Objective f = [](std::span<const double>) { return std::nan(""); };
    const auto r = bfgs_minimize(f, std::vector<double>{1.0}, OptSettings{});
    EXPECT_TRUE(r.failed);
}

TEST(OptSettings, Validation) {
    OptSettings s;
    s.restarts = 0;
    EXPECT_THROW(s.validate(), DomainError);
    s = OptSettings{};
    s.gradient_eps = 0.0;
    EXPECT_THROW(s.validate(), DomainError);
}

TEST(FiniteDiff, RichardsonAgreementOnFp) {
    SplitMix64 rng(9);
    const auto inst = dense6();
    const auto a = compile_ansatz(inst, default_lambdas(6, 12), Variant::original, 2);
    const Objective f = [&](std::span<const double> x) { return f_p(a, a.unflatten(x)); };
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> x(4);
        for (auto &v : x)
            v = rng.uniform(-kPi, kPi);
        const auto g1 = finite_diff_gradient(f, x, 1e-3);
        const auto g2 = finite_diff_gradient(f, x, 5e-4);
        const auto g = finite_diff_gradient(f, x, 1e-6);
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double richardson = (4 * g2[i] - g1[i]) / 3;
            EXPECT_NEAR(g[i], richardson, 1e-6);
        }
    }
}

TEST(FiniteDiff, DirectionalDerivative) {
    SplitMix64 rng(10);
    const auto a = compile_ansatz(dense6(), default_lambdas(6, 12), Variant::original, 3);
    const Objective f = [&](std::span<const double> x) { return f_p(a, a.unflatten(x)); };
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> x(6), d(6);
        for (auto &v : x)
            v = rng.uniform(-kPi, kPi);
        double norm = 0;
        for (auto &v : d) {
            v = rng.uniform(-1, 1);
            norm += v * v;
        }
        for (auto &v : d)
            v /= std::sqrt(norm);
        const auto g = finite_diff_gradient(f, x, 1e-6);
        double gd = 0;
        for (std::size_t i = 0; i < 6; ++i)
            gd += g[i] * d[i];
        const double t = 1e-4;
        std::vector<double> xp(x), xm(x);
        for (std::size_t i = 0; i < 6; ++i) {
            xp[i] += t * d[i];
            xm[i] -= t * d[i];
        }
        EXPECT_NEAR(gd, (f(xp) - f(xm)) / (2 * t), 1e-4);
    }
}

TEST(RestartStream, KeyedDraws) {
    RestartStream a(1, 2, 3), b(1, 2, 3), c(1, 2, 4);
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, c.next());
}

TEST(RandomParams, Ranges) {
    const auto a = compile_ansatz(dense6(), default_lambdas(6, 12), Variant::original, 4);
    RestartStream rng(5, 4, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_params(a, rng);
        ASSERT_EQ(p.gammas.size(), 4u);
        for (double g : p.gammas) {
            EXPECT_GE(g, 0.0);
            EXPECT_LT(g, 2 * kPi);
        }
        for (double b : p.betas) {
            EXPECT_GE(b, 0.0);
            EXPECT_LT(b, kPi);
        }
    }
}

TEST(Multistart, Toy4MatchesGridSearch) {
    const auto inst = toy4();
    const auto l = default_lambdas(4, 4);
    const auto a = compile_ansatz(inst, l, Variant::original, 1);
    double grid_best = -1.0;
    for (int i = 0; i < 400; ++i)
        for (int j = 0; j < 200; ++j) {
            const Params p{{2 * kPi * i / 400}, {2 * kPi * j / 200}};
            grid_best = std::max(grid_best, f_p(a, p));
        }
    const auto r = multistart(a, 0b0011, small_settings(10));
    EXPECT_GE(r.best_fp, grid_best - 1e-6);
    EXPECT_LE(r.best_fp, 1.0 + 1e-12);
    EXPECT_GT(r.success_prob, 0.0);
    EXPECT_LE(r.success_prob, 1.0 + 1e-12);
    EXPECT_EQ(r.restart_values.size(), 10u);
}

TEST(Multistart, BestIsMaxOfRestartsWithLowestIndexTie) {
    const auto g = six_qubit(2);
    const auto a = compile_ansatz(g.instance, default_lambdas(6, 12), Variant::original, 2);
    const auto r = multistart(a, g.planted, small_settings(6));
    const auto it = std::max_element(r.restart_values.begin(), r.restart_values.end());
    EXPECT_EQ(r.best_fp, *it);
    EXPECT_EQ(r.best_restart, static_cast<unsigned>(it - r.restart_values.begin()));
    EXPECT_NEAR(f_p(a, r.best_params), r.best_fp, 1e-12);
}

TEST(Multistart, DeterministicAcrossThreadCounts) {
    const auto g = six_qubit(3);
    const auto a = compile_ansatz(g.instance, default_lambdas(6, 12), Variant::original, 2);
    LevelResult serial, parallel;
    {
        ThreadsEnv env("1");
        serial = multistart(a, g.planted, small_settings(8));
    }
    {
        ThreadsEnv env("4");
        parallel = multistart(a, g.planted, small_settings(8));
    }
    EXPECT_EQ(serial.restart_values, parallel.restart_values);
    EXPECT_EQ(serial.best_params, parallel.best_params);
    EXPECT_EQ(serial.success_prob, parallel.success_prob);
}

TEST(Multistart, SeedChangesRestarts) {
    const auto g = six_qubit(3);
    const auto a = compile_ansatz(g.instance, default_lambdas(6, 12), Variant::original, 1);
    const auto r1 = multistart(a, g.planted, small_settings(3, 1));
    const auto r2 = multistart(a, g.planted, small_settings(3, 2));
    EXPECT_NE(r1.restart_values, r2.restart_values);
}

TEST(ExtendParams, AppendsLayer) {
    const auto a = compile_ansatz(toy4(), default_lambdas(4, 4), Variant::original, 3);
    const auto p = extend_params(Params{{0.1, 0.2}, {0.3, 0.4}}, a, 0.5, 0.6);
    EXPECT_EQ(p, (Params{{0.1, 0.2, 0.5}, {0.3, 0.4, 0.6}}));
    const auto o = a.with_variant(Variant::optimized);
    EXPECT_EQ(extend_params(Params{{}, {0.3}}, o.with_level(2), 9.0, 0.6), (Params{{}, {0.3, 0.6}}));
}

TEST(ParameterFixing, MonotoneBestFp) {
    for (std::uint64_t seed : {1u, 4u}) {
        const auto g = six_qubit(seed);
        for (auto v : {Variant::original, Variant::optimized}) {
            const auto a = compile_ansatz(g.instance, default_lambdas(6, 12), v, 1);
            const auto levels = parameter_fixing_schedule(a, 4, g.planted, small_settings(4));
            ASSERT_EQ(levels.size(), 4u);
            for (std::size_t k = 0; k < levels.size(); ++k) {
                EXPECT_EQ(levels[k].p, k + 1);
                EXPECT_EQ(levels[k].best_params.betas.size(), k + 1);
                if (k > 0)
                    EXPECT_GE(levels[k].best_fp, levels[k - 1].best_fp - 1e-9);
            }
        }
    }
}
