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

#include "magicdistill/density.h"
#include "magicdistill/polytope.h"
#include "magicdistill/stabilizer.h"
#include "magicdistill/tables.h"

using namespace magicdistill;

namespace {

RationalCoefficients centroid(const std::vector<RationalCoefficients>& v) {
    RationalCoefficients c(v.front().num_qubits());
    for (const auto& s : v)
        for (uint32_t i = 0; i < s.size(); ++i) c[i] += s[i] / Rational(v.size());
    return c;
}

}  // namespace

TEST(Polytope, VerticesAreInside) {
    const auto& verts = stabilizer_vertices(2);
    ASSERT_EQ(verts.size(), 60u);
    for (size_t i = 0; i < verts.size(); i += 7) {
        const auto cert = membership(verts[i]);
        EXPECT_TRUE(is_inside(cert));
        EXPECT_TRUE(verify_certificate(verts[i], verts, cert));
    }
    const auto mid = centroid(verts);
    EXPECT_EQ(mid, RationalCoefficients::maximally_mixed(2));
    EXPECT_TRUE(is_inside(membership(mid)));
}

TEST(Polytope, SingleQubitOctahedron) {
    const auto& verts = stabilizer_vertices(1);
    ASSERT_EQ(verts.size(), 6u);
    const auto inside = bloch_coefficients(Rational(1, 3), Rational(1, 3), Rational(1, 3));
    const auto outside = bloch_coefficients(Rational(2, 5), Rational(2, 5), Rational(2, 5));
    EXPECT_TRUE(is_inside(membership(inside)));
    const auto cert = membership(outside);
    ASSERT_FALSE(is_inside(cert));
    EXPECT_GT(std::get<Outside>(cert).value, 0);
    EXPECT_TRUE(verify_certificate(outside, verts, cert));
}

TEST(Polytope, ProductOfMagicStatesIsOutside) {
    const Rational c(1, 2);  // inside the Bloch ball, outside the octahedron
    const auto t = bloch_coefficients(c, c, c);
    const auto tt = tensor(t, t);
    ASSERT_TRUE(is_valid_state(tt));
    const auto cert = membership(tt);
    EXPECT_FALSE(is_inside(cert));
    EXPECT_TRUE(verify_certificate(tt, stabilizer_vertices(2), cert));
}

TEST(Polytope, InvalidStateThrows) {
    const auto bad = bloch_coefficients(Rational(1), Rational(1), Rational(0));
    EXPECT_THROW(membership(tensor(bad, bad)), std::invalid_argument);
}

TEST(Polytope, CandidatesAreUsedWhenValid) {
    const auto& t = embedded_tables();
    const auto cert = membership(t.counterexamples[0].state, t.facets);
    ASSERT_FALSE(is_inside(cert));
    EXPECT_TRUE(std::get<Outside>(cert).from_candidates);
    EXPECT_EQ(std::get<Outside>(cert).value, Rational(1, 6));
}

TEST(Polytope, HalfspaceCliffordInvariance) {
    const auto& t = embedded_tables();
    const auto group = generate_clifford_group(2);
    const auto& s = t.counterexamples[2].state;
    for (size_t k = 0; k < group.size(); k += 811) {
        const auto h = apply_clifford(group[k], t.facets[1]);
        EXPECT_EQ(h.evaluate(apply_clifford(group[k], s)), t.facets[1].evaluate(s));
        const auto check = verify_halfspace(h, stabilizer_vertices(2));
        EXPECT_EQ(check.max_value, 0);
    }
}

TEST(Polytope, OrbitCensusRejectsDuplicates) {
    const auto& t = embedded_tables();
    const auto group = generate_clifford_group(2);
    const auto image = apply_clifford(group[1234], t.facets[0]);
    EXPECT_THROW(facet_orbit_census({t.facets[0], image}, group), std::invalid_argument);
    const auto orbit = facet_orbit(t.facets[0], group);
    EXPECT_EQ(facet_orbit_census({t.facets[0]}, group).front(), orbit.size());
}

TEST(Polytope, HalfspaceFromLabels) {
    const auto h = Halfspace::from_labels(2, {{"II", Rational(-1)}, {"XX", Rational(1)}});
    EXPECT_EQ(h.coeffs[index_from_label("XX")], 1);
    EXPECT_FALSE(h.is_zero());
    EXPECT_THROW(Halfspace::from_labels(2, {{"XQ", Rational(1)}}), std::invalid_argument);
}
