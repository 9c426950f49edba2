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

#include "magicdistill/pauli.h"
#include "test_util.h"

using namespace magicdistill;
using testutil::label_matrix;

TEST(Pauli, LabelRoundTrip) {
    for (int n = 1; n <= 4; ++n)
        for (uint32_t i = 0; i < num_paulis(n); ++i) EXPECT_EQ(index_from_label(label_from_index(n, i)), i);
    EXPECT_EQ(index_from_label("I"), 0u);
    EXPECT_EQ(index_from_label("Z"), 1u);
    EXPECT_EQ(index_from_label("X"), 2u);
    EXPECT_EQ(index_from_label("Y"), 3u);
    // Qubit 0 is the leftmost character and the high bit.
    EXPECT_EQ(index_from_label("XI"), pauli_index(2, 0b10, 0b00));
    EXPECT_EQ(index_from_label("IZ"), pauli_index(2, 0b00, 0b01));
    EXPECT_THROW(index_from_label("XQ"), std::invalid_argument);
}

TEST(Pauli, ProductMatchesMatrices) {
    const int n = 2;
    for (uint32_t a = 0; a < num_paulis(n); ++a)
        for (uint32_t b = 0; b < num_paulis(n); ++b) {
            const auto pa = PauliOperator::from_index(n, a), pb = PauliOperator::from_index(n, b);
            const auto prod = pa * pb;
            const testutil::Mat expected = label_matrix(pa.label()) * label_matrix(pb.label());
            std::complex<double> phase = 1;
            for (int k = 0; k < prod.phase_exp() % 4; ++k) phase *= std::complex<double>(0, 1);
            const testutil::Mat got = phase * label_matrix(prod.label());
            EXPECT_LT(testutil::max_abs(got - expected), 1e-14) << pa.str() << " * " << pb.str();
            const bool commute = testutil::max_abs(expected - label_matrix(pb.label()) * label_matrix(pa.label())) < 1e-14;
            EXPECT_EQ(commutes(pa, pb), commute);
            EXPECT_EQ(symplectic_product(n, a, b) == 0, commute);
        }
}

TEST(Pauli, SignedStrings) {
    EXPECT_EQ(PauliOperator::from_string("-XZ").sign(), -1);
    EXPECT_EQ(PauliOperator::from_string("+YY").sign(), 1);
    EXPECT_EQ(PauliOperator::from_string("YY").sign(), 1);
    EXPECT_FALSE(PauliOperator::from_string("iZ").is_hermitian());
    EXPECT_EQ(PauliOperator::from_string("-XZ").str(), "-XZ");
    const auto y = PauliOperator::from_string("X") * PauliOperator::from_string("Z");
    EXPECT_EQ(y, PauliOperator::from_string("-iY"));
    EXPECT_THROW(PauliOperator::from_string("X") * PauliOperator::from_string("XX"), std::invalid_argument);
}

TEST(Pauli, BlochCoefficients) {
    const BlochVector b{0.1, -0.2, 0.3};
    const auto c = bloch_coefficients(b);
    EXPECT_DOUBLE_EQ(c.at("I"), 0.5);
    EXPECT_DOUBLE_EQ(c.at("X"), 0.05);
    EXPECT_DOUBLE_EQ(c.at("Y"), -0.1);
    EXPECT_DOUBLE_EQ(c.at("Z"), 0.15);
    const auto back = bloch_from_coefficients(c);
    EXPECT_DOUBLE_EQ(back.x, b.x);
    EXPECT_DOUBLE_EQ(back.y, b.y);
    EXPECT_DOUBLE_EQ(back.z, b.z);
}

TEST(Pauli, TensorOfCoefficients) {
    const auto a = bloch_coefficients({0.5, 0, 0});
    const auto b = bloch_coefficients({0, 0, 1});
    const auto ab = tensor(a, b);
    EXPECT_DOUBLE_EQ(ab.at("XZ"), 0.25 * 0.5 * 1);
    EXPECT_DOUBLE_EQ(ab.at("II"), 0.25);
    EXPECT_DOUBLE_EQ(ab.at("ZX"), 0.0);
}

TEST(Pauli, RationalConversion) {
    EXPECT_EQ(rational_from_double(0.375), Rational(3, 8));
    EXPECT_EQ(parse_rational("-7/21"), Rational(-1, 3));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}
