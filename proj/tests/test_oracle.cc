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

#include "magicdistill/oracle.h"
#include "magicdistill/stabilizer.h"
#include "test_util.h"

using namespace magicdistill;
using testutil::Mat;

TEST(Oracle, ProjectorsAreIdempotentAndHermitian) {
    for (int n = 2; n <= 4; ++n) {
        const ReductionSpace space(n);
        for (uint64_t i = 0; i < space.size(); i += space.size() / 13 + 1) {
            const Mat p = group_projector(space.at(i));
            EXPECT_LT(testutil::max_abs(p * p - p), 1e-13);
            EXPECT_LT(testutil::max_abs(p - p.adjoint()), 1e-13);
            EXPECT_NEAR(p.trace().real(), 2.0, 1e-13);
        }
    }
}

TEST(Oracle, SuccessProbabilitiesMultiply) {
    std::mt19937_64 rng(71);
    const auto rho = DensityMatrix(3, testutil::random_density(rng, 3));
    const auto a = StabilizerGroup::from_strings({"+ZZI"});
    const auto b = StabilizerGroup::from_strings({"-IZZ"});
    const auto both = StabilizerGroup::from_strings({"+ZZI", "-IZZ"});
    const auto two = run_protocol({rho}, {ProjectStep{a}, ProjectStep{b}});
    const auto one = run_protocol({rho}, {ProjectStep{both}});
    // Sequential projections onto commuting groups multiply to the joint trace.
    EXPECT_NEAR(two.success_probability, one.success_probability, 1e-12);
    EXPECT_LT(testutil::max_abs(two.state.matrix() - one.state.matrix()), 1e-12);
    const Mat p = group_projector(both);
    EXPECT_NEAR(one.success_probability, (p * rho.matrix() * p).trace().real(), 1e-12);
}

TEST(Oracle, PartialTrace) {
    const auto a = DensityMatrix::from_bloch({0.1, 0.2, 0.3});
    const auto b = DensityMatrix::from_bloch({-0.4, 0.0, 0.5});
    const auto c = DensityMatrix::from_bloch({0.0, 0.6, 0.0});
    const auto abc = tensor(tensor(a, b), c);
    EXPECT_LT(testutil::max_abs(partial_trace(abc, {1}).matrix() - b.matrix()), 1e-15);
    EXPECT_LT(testutil::max_abs(partial_trace(abc, {2, 0}).matrix() - tensor(c, a).matrix()), 1e-15);
    EXPECT_THROW(partial_trace(abc, {0, 0}), std::invalid_argument);
    const auto bv = bloch_of(partial_trace(abc, {0}));
    EXPECT_NEAR(bv.x, 0.1, 1e-15);
    EXPECT_NEAR(bv.y, 0.2, 1e-15);
    EXPECT_NEAR(bv.z, 0.3, 1e-15);
}

TEST(Oracle, DenseTGate) {
    const Mat t = dense_t_gate();
    EXPECT_LT(testutil::max_abs(t * t.adjoint() - Mat::Identity(2, 2)), 1e-15);
    EXPECT_LT(testutil::max_abs(t * testutil::single('X') * t.adjoint() - testutil::single('Y')), 1e-15);
    EXPECT_LT(testutil::max_abs(t * testutil::single('Y') * t.adjoint() - testutil::single('Z')), 1e-15);
    EXPECT_LT(testutil::max_abs(t * testutil::single('Z') * t.adjoint() - testutil::single('X')), 1e-15);
}

TEST(Oracle, UnitaryAndDecodeSteps) {
    const auto plus = DensityMatrix::from_bloch({1, 0, 0});
    Mat h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    const auto r = run_protocol({plus}, {UnitaryStep{h}});
    EXPECT_NEAR(bloch_of(r.state).z, 1, 1e-15);
    // Orthogonal outcome: zero probability is flagged, not divided by.
    const auto zero = DensityMatrix::from_bloch({0, 0, 1});
    const auto z = run_protocol({zero, zero}, {ProjectStep{StabilizerGroup::from_strings({"-ZZ"})}});
    EXPECT_TRUE(z.zero_probability);
}

TEST(Oracle, CodeDistillProbabilityAtPureMagicState) {
    const double c = 1 / std::sqrt(3.0);
    const BlochVector t{c, c, c};
    const auto r = oracle_code_distill({t, t, t, t, t}, {0, 0, 0, 0, 0});
    EXPECT_NEAR(r.p_success, 1.0 / 6.0, 1e-12);
    EXPECT_NEAR(r.out.norm(), 1.0, 1e-12);
}
