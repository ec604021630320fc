#include "fixtures.hpp"

#include "qaoaplus/errors.hpp"
#include "qaoaplus/hamiltonian.hpp"
#include "qaoaplus/statevector.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <numbers>

using namespace qaoaplus;
using namespace qaoaplus::testing;

TEST(InitZero, SingleQubit) {
    const auto s = init_zero(1);
    ASSERT_EQ(s.dimension(), 2u);
    EXPECT_EQ(s[0], Complex(1.0, 0.0));
    EXPECT_EQ(s[1], Complex(0.0, 0.0));
}

TEST(InitZero, FourQubits) {
    const auto s = init_zero(4);
    ASSERT_EQ(s.dimension(), 16u);
    EXPECT_EQ(s[0], Complex(1.0, 0.0));
    for (std::size_t i = 1; i < 16; ++i)
        EXPECT_EQ(s[i], Complex(0.0, 0.0));
}

TEST(InitZero, RejectsOutOfRange) {
    EXPECT_THROW(init_zero(25), SizeError);
    EXPECT_THROW(init_zero(0), SizeError);
}

TEST(PhaseSeparator, ZeroGammaIsIdentity) {
    SplitMix64 rng(3);
    auto s = random_state(4, rng);
    const std::vector<Complex> before(s.amplitudes().begin(), s.amplitudes().end());
    apply_phase_separator(s, 0.0, std::vector<double>{0.3, -1.2, 2.0, 0.7});
    EXPECT_EQ(max_abs_diff(before, s.amplitudes()), 0.0);
}

TEST(PhaseSeparator, LeavesIndexZeroUntouched) {
    auto s = init_zero(4);
    apply_phase_separator(s, 1.37, std::vector<double>{0.3, -1.2, 2.0, 0.7});
    EXPECT_EQ(s[0], Complex(1.0, 0.0));
}

TEST(PhaseSeparator, MatchesPerIndexFormulaOnToy4) {
    const auto inst = toy4();
    const auto coeffs = phase_coefficients(inst, default_lambdas(4, 4));
    std::vector<Complex> uniform(16, Complex(0.25, 0.0));
    auto s = State::from_amplitudes(uniform);
    apply_phase_separator(s, 1.0, coeffs);
    for (std::size_t b = 0; b < 16; ++b) {
        // Independent scalar evaluation: walk the bits directly.
        double exponent = 0.0;
        for (unsigned q = 0; q < 4; ++q)
            if ((b >> q) & 1u)
                exponent += coeffs[q];
        const Complex expected = 0.25 * std::exp(Complex(0.0, -exponent));
        EXPECT_NEAR(std::abs(s[b] - expected), 0.0, 1e-15) << "index " << b;
    }
}

TEST(PhaseSeparator, RejectsWrongCoefficientCount) {
    auto s = init_zero(3);
    EXPECT_THROW(apply_phase_separator(s, 1.0, std::vector<double>{1.0, 2.0}), ShapeError);
}

TEST(PartialMixer, ZeroBetaIsIdentity) {
    SplitMix64 rng(5);
    auto s = random_state(4, rng);
    const std::vector<Complex> before(s.amplitudes().begin(), s.amplitudes().end());
    apply_partial_mixer(s, 1, std::vector<unsigned>{0, 3}, 0.0);
    EXPECT_EQ(max_abs_diff(before, s.amplitudes()), 0.0);
}

TEST(PartialMixer, BlockedByControl) {
    std::vector<Complex> v(16);
    v[0b0100] = 1.0;
    auto s = State::from_amplitudes(v);
    apply_partial_mixer(s, 0, std::vector<unsigned>{2}, 0.9);
    EXPECT_EQ(s[0b0100], Complex(1.0, 0.0));
    EXPECT_EQ(s[0b0101], Complex(0.0, 0.0));
}

TEST(PartialMixer, FullFlipAtHalfPi) {
    auto s = init_zero(4);
    apply_partial_mixer(s, 0, std::vector<unsigned>{2, 3}, std::numbers::pi / 2);
    // [[c, -is], [-is, c]] (1, 0)^T with c = 0, s = 1 -> (0, -i)
    EXPECT_NEAR(std::abs(s[1] - Complex(0.0, -1.0)), 0.0, 1e-15);
    for (std::size_t b = 0; b < 16; ++b)
        if (b != 1)
            EXPECT_NEAR(std::abs(s[b]), 0.0, 1e-15);
    EXPECT_NEAR(probability_of(s, 1), 1.0, 1e-15);
}

TEST(PartialMixer, IndexErrors) {
    auto s = init_zero(3);
    EXPECT_THROW(apply_partial_mixer(s, 1, std::vector<unsigned>{1}, 0.3), IndexError);
    EXPECT_THROW(apply_partial_mixer(s, 3, std::vector<unsigned>{}, 0.3), IndexError);
    EXPECT_THROW(apply_partial_mixer(s, 0, std::vector<unsigned>{5}, 0.3), IndexError);
}

TEST(Expectation, PointMassAndUniform) {
    std::vector<double> diag{0.5, -1.0, 2.0, 3.25};
    std::vector<Complex> v(4);
    v[2] = 1.0;
    EXPECT_EQ(expectation_diagonal(State::from_amplitudes(v), diag), 2.0);
    std::vector<Complex> u(4, Complex(0.5, 0.0));
    EXPECT_NEAR(expectation_diagonal(State::from_amplitudes(u), diag), 4.75 / 4, 1e-15);
}

TEST(Expectation, Toy4FeasibleUniform) {
    const auto inst = toy4();
    const auto lambdas = default_lambdas(4, 4);
    const std::vector<std::size_t> feasible{0, 1, 2, 3, 4, 8};
    std::vector<Complex> v(16);
    for (auto b : feasible)
        v[b] = 1.0 / std::sqrt(6.0);
    std::vector<double> diag(16);
    for (std::size_t b = 0; b < 16; ++b)
        diag[b] = objective_value(inst, lambdas, b);
    // f over the feasible masks: 0, 1/2 (x3), 1, 11/14 -> mean 23/42
    EXPECT_NEAR(expectation_diagonal(State::from_amplitudes(v), diag), 23.0 / 42.0, 1e-15);
}

TEST(Expectation, RejectsLengthMismatch) {
    EXPECT_THROW(expectation_diagonal(init_zero(2), std::vector<double>{1, 2, 3}), ShapeError);
}

TEST(Probability, Basics) {
    const auto s = init_zero(4);
    EXPECT_EQ(probability_of(s, 0), 1.0);
    EXPECT_EQ(probability_of(s, 3), 0.0);
    EXPECT_THROW(probability_of(s, 16), IndexError);
}

// Random gate sequences on random states.
class StatevectorProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(StatevectorProperties, NormPreserved) {
    SplitMix64 rng(GetParam());
    const unsigned n = 2 + static_cast<unsigned>(rng.below(6));
    auto s = random_state(n, rng);
    std::vector<double> coeffs(n);
    for (auto &c : coeffs)
        c = rng.uniform(-2.0, 2.0);
    for (int step = 0; step < 40; ++step) {
        if (rng.below(2) == 0) {
            apply_phase_separator(s, rng.uniform(-7.0, 7.0), coeffs);
        } else {
            const auto target = static_cast<unsigned>(rng.below(n));
            std::vector<unsigned> controls;
            for (unsigned q = 0; q < n; ++q)
                if (q != target && rng.below(2))
                    controls.push_back(q);
            apply_partial_mixer(s, target, controls, rng.uniform(-4.0, 4.0));
        }
        ASSERT_LE(std::abs(s.norm_squared() - 1.0), 1e-12);
    }
}

TEST_P(StatevectorProperties, Linearity) {
    SplitMix64 rng(GetParam() + 1000);
    const unsigned n = 3;
    const auto u = random_vector(n, rng);
    const auto v = random_vector(n, rng);
    const Complex a(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Complex b(rng.uniform(-1, 1), rng.uniform(-1, 1));
    std::vector<Complex> mix(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        mix[i] = a * u[i] + b * v[i];

    const std::vector<unsigned> controls{2};
    const std::vector<double> coeffs{0.4, -0.9, 1.3};
    auto gate = [&](std::vector<Complex> x) {
        auto s = State::from_amplitudes(std::move(x));
        apply_partial_mixer(s, 0, controls, 0.77);
        apply_phase_separator(s, 1.9, coeffs);
        return std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end());
    };
    const auto gu = gate(u), gv = gate(v), gmix = gate(mix);
    for (std::size_t i = 0; i < u.size(); ++i)
        EXPECT_NEAR(std::abs(gmix[i] - (a * gu[i] + b * gv[i])), 0.0, 1e-14);
}

TEST_P(StatevectorProperties, MixerInverse) {
    SplitMix64 rng(GetParam() + 2000);
    const unsigned n = 5;
    auto s = random_state(n, rng);
    const std::vector<Complex> before(s.amplitudes().begin(), s.amplitudes().end());
    const double beta = rng.uniform(-3.0, 3.0);
    const std::vector<unsigned> controls{1, 4};
    apply_partial_mixer(s, 2, controls, beta);
    apply_partial_mixer(s, 2, controls, -beta);
    EXPECT_LE(max_abs_diff(before, s.amplitudes()), 1e-12);
}

TEST_P(StatevectorProperties, PhaseKeepsDiagonalExpectation) {
    SplitMix64 rng(GetParam() + 3000);
    const unsigned n = 4;
    auto s = random_state(n, rng);
    std::vector<double> diag(16), coeffs(n);
    for (auto &d : diag)
        d = rng.uniform(-3.0, 3.0);
    for (auto &c : coeffs)
        c = rng.uniform(-3.0, 3.0);
    const double before = expectation_diagonal(s, diag);
    apply_phase_separator(s, rng.uniform(-10.0, 10.0), coeffs);
    EXPECT_NEAR(expectation_diagonal(s, diag), before, 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Seeds, StatevectorProperties, ::testing::Range<std::uint64_t>(1, 21));

TEST(DiagonalFromCoefficients, MatchesBitSum) {
    const std::vector<double> c{0.5, 1.25, -2.0};
    const auto d = diagonal_from_coefficients(c);
    ASSERT_EQ(d.size(), 8u);
    for (std::size_t b = 0; b < 8; ++b) {
        double want = 0.0;
        for (unsigned q = 0; q < 3; ++q)
            if ((b >> q) & 1u)
                want += c[q];
        EXPECT_DOUBLE_EQ(d[b], want);
    }
}
