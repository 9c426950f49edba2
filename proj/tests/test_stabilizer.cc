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

#include <set>

#include "magicdistill/stabilizer.h"

using namespace magicdistill;

namespace {

// Number of k-dimensional isotropic subspaces of F_2^{2n}.
uint64_t isotropic_count(int n, int k) {
    uint64_t num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= (uint64_t{1} << (2 * (n - i))) - 1;
        den *= (uint64_t{1} << (i + 1)) - 1;
    }
    return num / den;
}

}  // namespace

TEST(Stabilizer, Counts) {
    const long expected[] = {6, 60, 1080, 36720, 2423520};
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(count_stabilizer_states(n), expected[n - 1]);
    EXPECT_EQ(count_reductions(2), 30);
    EXPECT_EQ(count_reductions(4), 91800);
    EXPECT_EQ(count_reductions(5), 12521520);
}

TEST(Stabilizer, SingleQubitStatesAreOctahedronVertices) {
    std::set<std::tuple<Rational, Rational, Rational>> got;
    for (const auto& s : enumerate_stabilizer_states(1)) got.insert({2 * s.at("X"), 2 * s.at("Y"), 2 * s.at("Z")});
    const std::set<std::tuple<Rational, Rational, Rational>> expected = {
        {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    EXPECT_EQ(got, expected);
}

TEST(Stabilizer, IsotropicSubspaceCounts) {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            if (n == 5 && k == 5) continue;
            EXPECT_EQ(IsotropicSubspaces(n, k).size(), isotropic_count(n, k)) << n << " " << k;
        }
}

TEST(Stabilizer, IsotropicBasesAreValidAndDistinct) {
    const int n = 3, k = 2;
    IsotropicSubspaces subs(n, k);
    std::set<std::vector<uint32_t>> seen;
    for (size_t i = 0; i < subs.size(); ++i) {
        const auto b = subs.basis(i);
        std::vector<uint32_t> rows(b.begin(), b.end());
        EXPECT_EQ(gf2_rank(rows), k);
        for (int a = 0; a < k; ++a)
            for (int c = 0; c < a; ++c) EXPECT_EQ(symplectic_product(n, rows[a], rows[c]), 0);
        EXPECT_TRUE(seen.insert(rows).second);
    }
}

TEST(Stabilizer, ReductionSpaceIndexing) {
    ReductionSpace space(3);
    EXPECT_EQ(space.size(), 1260u);
    for (uint64_t i = 0; i < space.size(); i += 37) {
        const auto g = space.at(i);
        const auto expected = group_from_basis(3, space.subspaces().basis(i >> 2), i & 3);
        EXPECT_EQ(g, expected);
        EXPECT_EQ(g.num_generators(), 2);
    }
    const auto all = enumerate_reductions(3);
    ASSERT_EQ(all.size(), 1260u);
    EXPECT_EQ(all[100], space.at(100));
}

TEST(Stabilizer, ConstructorValidates) {
    EXPECT_THROW(StabilizerGroup::from_strings({"XI", "ZI"}), std::invalid_argument);
    EXPECT_THROW(StabilizerGroup::from_strings({"ZZ", "-ZZ"}), std::invalid_argument);
    EXPECT_THROW(StabilizerGroup::from_strings({"XX", "ZZ", "-YY"}), std::invalid_argument);
    EXPECT_THROW(StabilizerGroup::from_strings({"iZZ"}), std::invalid_argument);
    EXPECT_THROW(StabilizerGroup::from_strings({"ZZ", "ZZZ"}), std::invalid_argument);
    EXPECT_NO_THROW(StabilizerGroup::from_strings({"XX", "ZZ"}));
}

TEST(Stabilizer, MembershipAndSigns) {
    const auto g = StabilizerGroup::from_strings({"+ZZ", "-XX"});
    // ZZ * (-XX) = +YY.
    EXPECT_EQ(g.element(3), PauliOperator::from_string("+YY"));
    EXPECT_EQ(g.contains(index_from_label("YY")), 1);
    EXPECT_EQ(g.contains(index_from_label("XX")), -1);
    EXPECT_EQ(g.contains(index_from_label("II")), 1);
    EXPECT_EQ(g.contains(index_from_label("XY")), 0);
    EXPECT_EQ(g.elements().size(), 4u);
}

TEST(Stabilizer, SymplecticComplement) {
    const int n = 3;
    const std::vector<uint32_t> rows = {index_from_label("XZI"), index_from_label("IZZ")};
    const auto comp = symplectic_complement(n, rows);
    EXPECT_EQ(static_cast<int>(comp.size()), 2 * n - 2);
    EXPECT_EQ(gf2_rank(comp), 2 * n - 2);
    for (auto v : comp)
        for (auto r : rows) EXPECT_EQ(symplectic_product(n, v, r), 0);
}
