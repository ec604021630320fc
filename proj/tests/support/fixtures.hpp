#pragma once

#include "qaoaplus/problem.hpp"
#include "qaoaplus/random.hpp"
#include "qaoaplus/statevector.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace qaoaplus::testing {

/// m=4, S1={1,2}, S2={3,4}, S3={1,3}, S4={2,3,4}; unique MEC {S1,S2}.
inline MecInstance toy4() {
    return MecInstance(4, {{1, 2}, {3, 4}, {1, 3}, {2, 3, 4}});
}

/// Six sets over {1..12} used to illustrate graph and circuit construction.
/// It has no exact cover.
inline MecInstance dense6() {
    return MecInstance(12, {{1, 2, 4, 5, 6, 8, 9, 10},
                            {1, 4, 6, 7},
                            {5, 8, 9, 11, 12},
                            {4, 7, 8, 9, 10, 11, 12},
                            {2, 3, 4, 5, 6, 7, 11, 12},
                            {3, 10, 12}});
}

/// Two minimum exact covers: {S1,S2} and {S3,S4}.
inline MecInstance two_mec() {
    return MecInstance(4, {{1, 2}, {3, 4}, {1, 3}, {2, 4}});
}

/// Random unnormalized complex vector of length 2^n.
inline std::vector<Complex> random_vector(unsigned n, SplitMix64 &rng) {
    std::vector<Complex> v(std::size_t{1} << n);
    for (auto &a : v)
        a = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return v;
}

/// Random unit-norm state on n qubits.
inline State random_state(unsigned n, SplitMix64 &rng) {
    auto v = random_vector(n, rng);
    double norm = 0.0;
    for (const auto &a : v)
        norm += std::norm(a);
    for (auto &a : v)
        a /= std::sqrt(norm);
    return State::from_amplitudes(std::move(v));
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

} // namespace qaoaplus::testing
