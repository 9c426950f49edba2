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
#include <set>

#include "magicdistill/clifford.h"
#include "test_util.h"

using namespace magicdistill;
using testutil::cd;
using testutil::Mat;

namespace {

Mat on_qubit(const Mat& u, int q, int n) {
    Mat out = q == 0 ? u : Mat::Identity(2, 2);
    for (int i = 1; i < n; ++i) out = testutil::kron(out, i == q ? u : Mat::Identity(2, 2));
    return out;
}

// Checks U P U^dagger against the tabulated action for every Pauli.
void expect_matches(const CliffordElement& c, const Mat& u) {
    const int n = c.num_qubits();
    for (uint32_t i = 0; i < num_paulis(n); ++i) {
        const Mat p = testutil::label_matrix(label_from_index(n, i));
        const Mat image = testutil::label_matrix(label_from_index(n, c.image(i))) * double(c.sign(i));
        EXPECT_LT(testutil::max_abs(u * p * u.adjoint() - image), 1e-14) << label_from_index(n, i);
    }
}

}  // namespace

TEST(Clifford, GatesMatchMatrices) {
    const double h = 1 / std::sqrt(2.0);
    Mat hm(2, 2), sm(2, 2), tm(2, 2);
    hm << h, h, h, -h;
    sm << 1, 0, 0, cd(0, 1);
    tm << cd(-1, 1), cd(1, 1), cd(-1, 1), cd(-1, -1);
    tm /= 2.0;
    for (int q = 0; q < 2; ++q) {
        expect_matches(hadamard(2, q), on_qubit(hm, q, 2));
        expect_matches(phase_gate(2, q), on_qubit(sm, q, 2));
        expect_matches(t_gate(2, q), on_qubit(tm, q, 2));
    }
    Mat cx = Mat::Zero(4, 4);
    cx(0, 0) = cx(1, 1) = cx(2, 3) = cx(3, 2) = 1;
    expect_matches(cnot(2, 0, 1), cx);
    Mat xc = Mat::Zero(4, 4);
    xc(0, 0) = xc(2, 2) = xc(1, 3) = xc(3, 1) = 1;
    expect_matches(cnot(2, 1, 0), xc);
}

TEST(Clifford, TGateCyclesAxes) {
    const auto t = t_gate(1, 0);
    EXPECT_EQ(t.apply(PauliOperator::from_string("X")), PauliOperator::from_string("Y"));
    EXPECT_EQ(t.apply(PauliOperator::from_string("Y")), PauliOperator::from_string("Z"));
    EXPECT_EQ(t.apply(PauliOperator::from_string("Z")), PauliOperator::from_string("X"));
}

TEST(Clifford, GroupSizesAndClosure) {
    const auto g1 = generate_clifford_group(1);
    EXPECT_EQ(g1.size(), 24u);
    const auto g2 = generate_clifford_group(2);
    ASSERT_EQ(g2.size(), 11520u);
    const std::set<CliffordElement> members(g2.begin(), g2.end());
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<size_t> pick(0, g2.size() - 1);
    for (int i = 0; i < 200; ++i) {
        const auto& a = g2[pick(rng)];
        const auto& b = g2[pick(rng)];
        EXPECT_TRUE(members.contains(a.then(b)));
        EXPECT_EQ(a.then(a.inverse()), CliffordElement::identity(2));
    }
    EXPECT_TRUE(std::is_sorted(g2.begin(), g2.end()));
}

TEST(Clifford, PreservesCommutation) {
    const auto g2 = generate_clifford_group(2);
    for (size_t k = 0; k < g2.size(); k += 997)
        for (uint32_t a = 1; a < 16; ++a)
            for (uint32_t b = 1; b < 16; ++b)
                EXPECT_EQ(symplectic_product(2, a, b), symplectic_product(2, g2[k].image(a), g2[k].image(b)));
}

TEST(Clifford, RejectsNonSymplecticImages) {
    const std::vector<PauliOperator> xs = {PauliOperator::from_string("X")};
    const std::vector<PauliOperator> zs = {PauliOperator::from_string("X")};
    EXPECT_THROW(CliffordElement::from_generator_images(1, xs, zs), std::invalid_argument);
}

TEST(Clifford, BlochAction) {
    const auto b = apply_clifford(hadamard(1, 0), BlochVector{0.1, 0.2, 0.3});
    EXPECT_DOUBLE_EQ(b.x, 0.3);
    EXPECT_DOUBLE_EQ(b.y, -0.2);
    EXPECT_DOUBLE_EQ(b.z, 0.1);
}
