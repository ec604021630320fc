#include "fixtures.hpp"

#include "qaoaplus/hamiltonian.hpp"
#include "qaoaplus/instancegen.hpp"
#include "qaoaplus/oracle.hpp"

#include <gtest/gtest.h>

#include <deque>
#include <set>

using namespace qaoaplus;
using namespace qaoaplus::testing;

TEST(PhaseCoefficients, Toy4) {
    const auto c = phase_coefficients(toy4(), default_lambdas(4, 4));
    const std::vector<double> want{7.0 / 14, 7.0 / 14, 7.0 / 14, 11.0 / 14};
    ASSERT_EQ(c.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_NEAR(c[i], want[i], 1e-15);
}

TEST(PhaseCoefficients, Dense6FirstQubit) {
    const auto c = phase_coefficients(dense6(), default_lambdas(6, 12));
    EXPECT_NEAR(c[0], 47.0 / 70.0, 1e-15);
}

TEST(TailPhaseCoefficients, TwoRouteToy) {
    const TailInstance inst(3, {{1, 2}, {3}}, {1.0, 2.0});
    const auto c = tail_phase_coefficients(inst, TailLambdas(0.4, 0.2, 0.1));
    EXPECT_NEAR(c[0], 0.5, 1e-15);
    EXPECT_NEAR(c[1], 0.0, 1e-15);
}

TEST(TailPhaseCoefficients, ZeroCostsMatchMec) {
    const auto mec = toy4();
    const TailInstance tail(4, mec.sets(), std::vector<double>(4, 0.0));
    const auto l = default_lambdas(4, 4);
    EXPECT_EQ(tail_phase_coefficients(tail, TailLambdas(l.lambda1(), l.lambda2(), 0.01)),
              phase_coefficients(mec, l));
}

TEST(TailPhaseCoefficients, SumsMatchTailObjective) {
    SplitMix64 rng(17);
    const TailInstance tail(12, dense6().sets(), {0.3, 0.9, 0.0, 0.45, 0.12, 0.77});
    const TailLambdas l(6.0 / 70, 1.0 / 70, 1.0 / 420);
    const auto c = tail_phase_coefficients(tail, l);
    for (int trial = 0; trial < 50; ++trial) {
        const Mask b = rng.below(64);
        double sum = 0.0;
        for (unsigned q = 0; q < 6; ++q)
            if ((b >> q) & 1u)
                sum += c[q];
        EXPECT_NEAR(sum, tail_objective_value(tail, l, b), 1e-12);
    }
}

TEST(MixerTerms, Toy4) {
    const auto terms = mixer_terms(conflict_graph(toy4()));
    ASSERT_EQ(terms.size(), 4u);
    EXPECT_EQ(terms[0].zero_controls, (std::vector<unsigned>{2, 3}));
    EXPECT_EQ(terms[1].zero_controls, (std::vector<unsigned>{2, 3}));
    EXPECT_EQ(terms[2].zero_controls, (std::vector<unsigned>{0, 1, 3}));
    EXPECT_EQ(terms[3].zero_controls, (std::vector<unsigned>{0, 1, 2}));
    for (unsigned i = 0; i < 4; ++i)
        EXPECT_EQ(terms[i].target, i);
}

TEST(MixerTerms, EdgelessGraph) {
    const auto terms = mixer_terms(ConflictGraph(3));
    ASSERT_EQ(terms.size(), 3u);
    for (const auto &t : terms) {
        EXPECT_TRUE(t.zero_controls.empty());
        EXPECT_EQ(t.control_mask, 0u);
    }
}

TEST(MixerTerms, Dense6SecondSet) {
    const auto terms = mixer_terms(conflict_graph(dense6()));
    EXPECT_EQ(terms[1].zero_controls, (std::vector<unsigned>{0, 3, 4}));
}

namespace {

std::vector<MecInstance> closure_instances() {
    std::vector<MecInstance> out{toy4(), dense6()};
    for (unsigned n : {6u, 8u, 10u}) {
        GenSpec spec;
        spec.n = n;
        spec.m = 2 * n;
        spec.seed = 100 + n;
        out.push_back(generate(spec));
    }
    return out;
}

} // namespace

TEST(MixerProperties, FeasibleSubspaceClosure) {
    SplitMix64 rng(99);
    for (const auto &inst : closure_instances()) {
        const auto g = conflict_graph(inst);
        const auto terms = mixer_terms(g);
        for (Mask v : enumerate_feasible(g)) {
            for (int trial = 0; trial < 3; ++trial) {
                const double beta = rng.uniform(-3.2, 3.2);
                std::vector<Complex> amps(std::size_t{1} << inst.num_sets());
                amps[v] = 1.0;
                auto s = State::from_amplitudes(std::move(amps));
                for (const auto &t : terms)
                    apply_partial_mixer(s, t.target, t.zero_controls, beta);
                for (std::size_t b = 0; b < s.dimension(); ++b)
                    if (!is_independent(g, b))
                        ASSERT_EQ(s[b], Complex(0.0, 0.0)) << "mask " << b;
            }
        }
    }
}

TEST(MixerProperties, ReachabilityFromEmptySet) {
    for (const auto &inst : closure_instances()) {
        const auto g = conflict_graph(inst);
        const auto terms = mixer_terms(g);
        const auto feasible = enumerate_feasible(g);
        std::set<Mask> seen{0};
        std::deque<Mask> queue{0};
        while (!queue.empty()) {
            const Mask cur = queue.front();
            queue.pop_front();
            for (const auto &t : terms) {
                if (cur & t.control_mask)
                    continue; // term inactive here
                const Mask next = cur ^ (Mask{1} << t.target);
                if (seen.insert(next).second)
                    queue.push_back(next);
            }
        }
        EXPECT_EQ(seen.size(), feasible.size());
        for (Mask b : seen)
            EXPECT_TRUE(is_independent(g, b));
    }
}

TEST(PhaseProperties, CoefficientSumsEqualObjective) {
    std::vector<MecInstance> instances = closure_instances();
    GenSpec spec;
    spec.n = 12;
    spec.m = 24;
    spec.seed = 4;
    instances.push_back(generate(spec));
    for (const auto &inst : instances) {
        const auto l = default_lambdas(inst.num_sets(), inst.universe_size());
        const auto c = phase_coefficients(inst, l);
        const auto diag = diagonal_from_coefficients(c);
        for (Mask b = 0; b < diag.size(); ++b)
            ASSERT_NEAR(diag[b], objective_value(inst, l, b), 1e-12);
    }
}
