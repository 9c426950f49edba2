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

#include <cmath>
#include <numbers>
#include <random>

#include "magicdistill/maps.h"
#include "magicdistill/oracle.h"
#include "test_util.h"

using namespace magicdistill;

namespace {

double dist(const BlochVector& a, const BlochVector& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

}  // namespace

TEST(Maps, ParityMatchesOracle) {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 50; ++i) {
        const auto b = testutil::random_bloch(rng);
        EXPECT_LT(dist(parity_map(b), oracle_parity(b)), 1e-12);
        EXPECT_LT(dist(pair_parity_map(b), oracle_pair_parity(b)), 1e-12);
    }
}

TEST(Maps, DualRound) {
    EXPECT_DOUBLE_EQ(dual_round_map(0.5), 0.5);
    const double root = 0.68232780382801932;  // x^3 + x - 1 = 0
    EXPECT_NEAR(dual_round_map(root), root, 1e-15);
    EXPECT_DOUBLE_EQ(dual_round_map(0.0), 0.0);
    for (double x : {0.1, 0.45, 0.55, 0.6, 0.68, 0.9}) {
        const auto o = oracle_dual_round(x);
        EXPECT_NEAR((o.x + o.z) / 2, dual_round_map(x), 1e-12);
    }
    // Gain only between 1/2 and the real root of x^3 + x - 1.
    EXPECT_LT(dual_round_map(0.45), 0.45);
    EXPECT_GT(dual_round_map(0.6), 0.6);
    EXPECT_LT(dual_round_map(0.7), 0.7);
}

TEST(Maps, SymmetricStep) {
    const auto t = FidelityTuple::uniform(1.0);
    EXPECT_DOUBLE_EQ(t.sym(0), 1);
    EXPECT_DOUBLE_EQ(t.sym(3), 10);
    EXPECT_DOUBLE_EQ(t.sym(5), 1);
    const auto s = five_qubit_symmetric_step(t);
    EXPECT_NEAR(s.f_out, 1.0, 1e-15);
    EXPECT_NEAR(s.p_success, 1.0 / 6.0, 1e-15);
    const double f = std::sqrt(3.0 / 7.0);
    EXPECT_NEAR(five_qubit_symmetric_step(FidelityTuple::uniform(f)).f_out, f, 1e-14);
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 20; ++i) {
        FidelityTuple ft;
        std::array<BlochVector, 5> in;
        for (int k = 0; k < 5; ++k) {
            ft.f[k] = u(rng);
            const double c = ft.f[k] / std::sqrt(3.0);
            in[k] = {c, c, c};
        }
        const auto dense = oracle_code_distill(in, {0, 0, 0, 0, 0});
        const auto closed = five_qubit_symmetric_step(ft);
        EXPECT_NEAR(dense.p_success, closed.p_success, 1e-12);
        // The decoded output points along -(1,1,1).
        const double c = closed.f_out / std::sqrt(3.0);
        EXPECT_LT(dist(dense.out, {-c, -c, -c}), 1e-12);
    }
}

TEST(Maps, MonotonicityNumeratorMatchesQuotientRule) {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 500; ++i) {
        FidelityTuple t;
        for (auto& f : t.f) f = u(rng);
        for (int k = 0; k < 5; ++k) {
            EXPECT_NEAR(monotonicity_numerator(t, k), quotient_rule_numerator(t, k), 1e-12);
            EXPECT_GE(monotonicity_numerator(t, k), 0);
        }
    }
}

TEST(Maps, TwistedMatchesOracle) {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 30; ++i) {
        const auto b = testutil::random_bloch(rng);
        const auto dense = oracle_code_distill({b, b, b, b, b}, kTwistAssignment).out;
        const double v[3] = {dense.x, dense.y, dense.z};
        double r[3] = {0, 0, 0};
        for (int a = 0; a < 3; ++a)
            for (int c = 0; c < 3; ++c) r[a] += kTwistRotation[a][c] * v[c];
        EXPECT_LT(dist(twisted_five_qubit_map(b), {r[0], r[1], r[2]}), 1e-12);
    }
}

TEST(Maps, Regions) {
    EXPECT_TRUE(region_check({0.6, 0.5, 0}, Region::thm2));
    EXPECT_FALSE(region_check({0.5, 0.5, 0}, Region::thm2));
    EXPECT_TRUE(region_check({0.6, 0.43, 0}, Region::thm1_codes));
    EXPECT_FALSE(region_check({0.6, 0.41, 0}, Region::thm1_codes));
    const double c = 1 / std::sqrt(7.0);
    EXPECT_FALSE(region_check({c - 1e-12, c, c}, Region::thm1_T));
    EXPECT_TRUE(region_check({c + 1e-9, c, c}, Region::thm1_T));
    EXPECT_TRUE(region_check({0.5, 0.6, 0.1}, Region::thm3_cone));
    for (auto r : kAllRegions) EXPECT_EQ(parse_region(region_name(r)), r);
    // The unscaled diagonal point sits on both boundaries; the scaled one inside neither.
    const auto p = diagonal_point();
    EXPECT_NEAR(p.x + p.y + p.z, 3 / std::sqrt(7.0), 1e-12);
    const auto q = p * kDiagonalScale;
    EXPECT_FALSE(region_check(q, Region::thm1_T));
    EXPECT_FALSE(region_check(q, Region::thm3_cone));
}

TEST(Maps, SymmetrizeT) {
    const auto s = symmetrize_t({0.3, 0.6, 0.0});
    EXPECT_DOUBLE_EQ(s.x, 0.3);
    EXPECT_DOUBLE_EQ(s.y, 0.3);
    EXPECT_DOUBLE_EQ(s.z, 0.3);
    const auto avg = t_average([](const BlochVector& b) { return b; });
    const auto a = avg({0.3, 0.6, 0.0});
    EXPECT_NEAR(a.x, 0.3, 1e-15);
    const auto h = hadamard_average([](const BlochVector& b) { return b; })({0.2, 0.1, 0.6});
    EXPECT_NEAR(h.x, 0.4, 1e-15);
    EXPECT_NEAR(h.z, 0.4, 1e-15);
}

TEST(Maps, AngleAlignMix) {
    const BlochVector b{0.7 * std::cos(0.3), 0.7 * std::sin(0.3), 0.6};
    const auto m = angle_align_mix(b, 4);
    const double unit = std::numbers::pi / 16;
    EXPECT_NEAR(m.mixed.phi(), m.k * unit, 1e-12);
    EXPECT_GE(m.p, 0);
    EXPECT_LE(m.p, 1);
    EXPECT_GT(m.mixed.r() + m.mixed.z, 1);
    EXPECT_THROW(angle_align_mix({0.3, 0, 0.3}, 4), std::domain_error);
}

TEST(Maps, IterateStopsInRegion) {
    const auto stop = scheme_stop(Scheme::twisted);
    const auto t = iterate(scheme_map(Scheme::twisted), diagonal_point() * kDiagonalScale, stop, 200);
    ASSERT_TRUE(t.terminal.has_value());
    EXPECT_TRUE(region_check(t.points.back(), *t.terminal));
    EXPECT_EQ(static_cast<int>(t.points.size()), t.iterations + 1);
    // Below the boundary the twisted scheme shrinks toward the center.
    const auto low = iterate(scheme_map(Scheme::twisted), {0.2, 0.2, 0.5}, stop, 50);
    EXPECT_FALSE(low.terminal.has_value());
}

TEST(Maps, SweepParityBoundaryIsTight) {
    SweepOptions o;
    o.plane = SweepPlane::y_eq_0;
    o.scheme = Scheme::parity;
    o.x_min = 0.1;
    o.x_max = 0.9;
    o.resolution = 0.1;
    o.tol = 1e-7;
    const auto rows = sweep(o);
    ASSERT_FALSE(rows.empty());
    for (const auto& r : rows) EXPECT_NEAR(r.b.x + r.b.z, 1.0, 1e-5) << r.b.x;
}

TEST(Maps, SweepPassesNearDiagonalPoint) {
    const auto q = diagonal_point() * kDiagonalScale;
    const double z = scheme_boundary_z(Scheme::twisted, SweepPlane::x_eq_y, q.x, 1e-9);
    EXPECT_LE(z, q.z);
    EXPECT_NEAR(z, q.z, 0.02);
}

TEST(Maps, EmptySweepWindow) {
    SweepOptions o;
    o.x_min = 0.3;
    o.x_max = 0.3;
    EXPECT_TRUE(sweep(o).empty());
    o.resolution = 1e-5;
    o.x_max = 0.4;
    EXPECT_THROW(sweep(o), std::invalid_argument);
}

TEST(Maps, RedCurveEndpoint) {
    const double x = red_curve_endpoint();
    EXPECT_NEAR(x, 0.1956, 5e-4);
    EXPECT_GT(scheme_boundary_z(Scheme::twisted, SweepPlane::x_eq_y, 0.18, 1e-11), known_boundary_z(0.18, 1e-11) - 1e-8);
    EXPECT_LT(scheme_boundary_z(Scheme::twisted, SweepPlane::x_eq_y, 0.22, 1e-11), known_boundary_z(0.22, 1e-11) - 1e-4);
}

TEST(Maps, WalkProbabilities) {
    EXPECT_DOUBLE_EQ(walk_success_probability(1), 0.5);
    EXPECT_DOUBLE_EQ(walk_success_probability(2), 0.5);
    EXPECT_DOUBLE_EQ(walk_success_probability(3), 0.625);
    const int cap = 9, samples = 20000;
    int hits = 0;
    for (int i = 0; i < samples; ++i) hits += phase_injection_walk(std::numbers::pi / 8, cap, 1000 + i).success;
    const double p = walk_success_probability(cap);
    EXPECT_NEAR(double(hits) / samples, p, 4 * std::sqrt(p * (1 - p) / samples));
    EXPECT_TRUE(phase_injection_walk(std::numbers::pi / 4, 5, 7, true).success);
    EXPECT_THROW(phase_injection_walk(std::numbers::pi / 8, 5, 7, true), std::invalid_argument);
}

TEST(Maps, BisectRoot) {
    const auto r = bisect_root([](double x) { return x * x - 2; }, 0, 2, 1e-13);
    EXPECT_NEAR(r.value, std::sqrt(2.0), 1e-12);
    EXPECT_THROW(bisect_root([](double x) { return x * x + 1; }, 0, 2), std::invalid_argument);
}

TEST(Maps, Names) {
    for (auto s : {Scheme::parity, Scheme::twisted}) EXPECT_EQ(parse_scheme(scheme_name(s)), s);
    for (auto p : {SweepPlane::x_eq_y, SweepPlane::y_eq_0}) EXPECT_EQ(parse_plane(plane_name(p)), p);
    EXPECT_FALSE(parse_scheme("x").has_value());
}
