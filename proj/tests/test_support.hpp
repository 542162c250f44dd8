#pragma once

#include "pvi/fuchsian.hpp"

#include <random>

namespace pvi::testing {

inline Rational random_rational(std::mt19937 &rng, int num_range = 8, int den_max = 8) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_max);
    return make_rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937 &rng, int num_range = 8,
                                        int den_max = 8) {
    for (;;) {
        Rational q = random_rational(rng, num_range, den_max);
        if (q != 0) return q;
    }
}

inline ThetaVector random_theta(std::mt19937 &rng) {
    return {random_rational(rng), random_rational(rng), random_rational(rng),
            random_rational(rng)};
}

inline PolynomialQ random_polynomial(std::mt19937 &rng, int max_degree = 4) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    std::vector<Rational> coeffs;
    for (int i = 0; i <= d; ++i) coeffs.push_back(random_rational(rng, 5, 4));
    return PolynomialQ(std::move(coeffs));
}

inline PolynomialQ random_nonzero_polynomial(std::mt19937 &rng, int max_degree = 4) {
    for (;;) {
        PolynomialQ p = random_polynomial(rng, max_degree);
        if (!p.is_zero()) return p;
    }
}

inline RationalFunctionQ random_rational_function(std::mt19937 &rng, int max_degree = 3) {
    return RationalFunctionQ(random_polynomial(rng, max_degree),
                             random_nonzero_polynomial(rng, max_degree));
}

// admissible (x, y, t, spectral) with distinct mu and nondegenerate solves
struct BuilderSample {
    Rational x, y, t;
    SpectralData3 spectral;
};

inline BuilderSample random_builder_sample(std::mt19937 &rng) {
    for (;;) {
        Rational l1 = random_rational(rng, 4, 4), l2 = random_rational(rng, 4, 4),
                 l3 = random_rational(rng, 4, 4);
        Rational m1 = random_rational(rng, 4, 4), m2 = random_rational(rng, 4, 4);
        Rational m3 = l1 + l2 + l3 - m1 - m2;
        if (m1 == m2 || m1 == m3 || m2 == m3 || m3 == 0) continue;
        Rational x = random_nonzero_rational(rng, 4, 4);
        Rational y = random_rational(rng, 6, 4);
        Rational t = random_rational(rng, 6, 4);
        if (t == 0 || t == 1 || y == 0 || y == 1 || y == t) continue;
        BuilderSample sample{x, y, t, SpectralData3({l1, l2, l3}, {m1, m2, m3})};
        try {
            (void)build_full<Rational>(sample.x, sample.y, sample.t, sample.spectral);
        } catch (const math_error &) {
            continue;
        }
        return sample;
    }
}

} // namespace pvi::testing
