// Copyright 2026 The magicdistill Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "magicdistill/density.h"
#include "magicdistill/stabilizer.h"
#include "test_util.h"

using namespace magicdistill;

TEST(Density, DensePauliMatchesKron) {
    for (uint32_t i = 0; i < num_paulis(3); ++i) {
        const auto p = PauliOperator::from_index(3, i);
        EXPECT_LT(testutil::max_abs(dense_pauli(p) - testutil::label_matrix(p.label())), 1e-15) << p.label();
    }
    EXPECT_LT(testutil::max_abs(dense_pauli(PauliOperator::from_string("-XY")) + testutil::label_matrix("XY")), 1e-15);
}

TEST(Density, CoefficientRoundTrip) {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 3; ++n) {
        const auto rho = testutil::random_density(rng, n);
        const auto c = coeffs_from_density(DensityMatrix(n, rho));
        EXPECT_NEAR(c[0], 1.0 / (1 << n), 1e-14);
        EXPECT_LT(testutil::max_abs(density_from_coeffs(c).matrix() - rho), 1e-13);
        EXPECT_TRUE(is_valid_state(c));
    }
}

TEST(Density, RejectsNonHermitian) {
    testutil::Mat m = testutil::Mat::Zero(2, 2);
    m(0, 1) = 1;
    EXPECT_THROW(coeffs_from_density(DensityMatrix(1, m)), std::invalid_argument);
    EXPECT_THROW(DensityMatrix(2, m), std::invalid_argument);
}

TEST(Density, ExactPositivity) {
    // Bloch vectors on, inside and outside the sphere.
    EXPECT_TRUE(is_valid_state(bloch_coefficients(Rational(3, 5), Rational(4, 5), Rational(0))));
    EXPECT_TRUE(is_valid_state(bloch_coefficients(Rational(1, 3), Rational(1, 3), Rational(1, 3))));
    EXPECT_FALSE(is_valid_state(bloch_coefficients(Rational(3, 5), Rational(4, 5), Rational(1, 100))));
    // Trace must be exactly one.
    auto c = bloch_coefficients(Rational(0), Rational(0), Rational(0));
    c[0] = Rational(1, 3);
    EXPECT_FALSE(is_valid_state(c));
    EXPECT_TRUE(is_positive_semidefinite(c));

    // (II + f(XX - YY + ZZ))/4 is positive for f in [-1/3, 1].
    for (int k = -15; k <= 15; ++k) {
        const Rational f(k, 12);
        RationalCoefficients w(2);
        w.at("II") = Rational(1, 4);
        w.at("XX") = f / 4;
        w.at("YY") = -f / 4;
        w.at("ZZ") = f / 4;
        const auto eig = Eigen::SelfAdjointEigenSolver<testutil::Mat>(density_from_coeffs(to_real(w)).matrix())
                             .eigenvalues()
                             .minCoeff();
        EXPECT_EQ(is_valid_state(w), eig > -1e-12) << f;
        EXPECT_EQ(is_valid_state(w), f >= Rational(-1, 3) && f <= 1) << f;
    }
}

TEST(Density, StabilizerStatesAreValid) {
    for (const auto& s : enumerate_stabilizer_states(2)) {
        EXPECT_TRUE(is_valid_state(s));
        EXPECT_TRUE(is_valid_state(to_real(s)));
    }
}

TEST(Density, FloatValidityTolerance) {
    auto c = bloch_coefficients({1 + 1e-12, 0, 0});
    EXPECT_TRUE(is_valid_state(c, 1e-10));
    c = bloch_coefficients({1.01, 0, 0});
    EXPECT_FALSE(is_valid_state(c, 1e-10));
}
