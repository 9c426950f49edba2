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

#include <filesystem>
#include <fstream>
#include <random>

#include "magicdistill/clifford.h"
#include "magicdistill/search.h"
#include "test_util.h"

using namespace magicdistill;

namespace {

std::string temp_path(const std::string& name) {
    const auto p = std::filesystem::temp_directory_path() / ("magicdistill_test_" + name);
    std::filesystem::remove(p);
    return p.string();
}

ObjectiveFn as_fn(SearchObjective o) {
    return [o](const ReductionOutput<double>& r) { return objective_value(o, bloch(r)); };
}

}  // namespace

TEST(Search, FastPathMatchesReference) {
    std::mt19937_64 rng(29);
    for (int n : {2, 3, 4}) {
        const auto s = testutil::random_state(rng, n);
        for (auto o : {SearchObjective::sum_xz, SearchObjective::t_fidelity, SearchObjective::escape_o1}) {
            const auto fast = exhaustive_search(s, o);
            const auto ref = exhaustive_search(s, as_fn(o));
            EXPECT_EQ(fast.best_index, ref.best_index) << n << " " << objective_name(o);
            EXPECT_NEAR(fast.best_value, ref.best_value, 1e-12);
            EXPECT_EQ(fast.evaluated, ref.evaluated);
            EXPECT_EQ(fast.evaluated + fast.degenerate, ReductionSpace(n).size());
            EXPECT_TRUE(fast.complete);
        }
    }
}

TEST(Search, SubspaceOutputsMatchApplyReduction) {
    std::mt19937_64 rng(31);
    for (int n : {3, 5}) {
        const auto s = testutil::random_state(rng, n);
        const ReductionSpace space(n);
        const uint64_t signs = uint64_t{1} << (n - 1);
        for (size_t k = 0; k < space.subspaces().size(); k += space.subspaces().size() / 11 + 1) {
            const auto outs = subspace_outputs(s, space.subspaces().basis(k));
            ASSERT_EQ(outs.size(), signs);
            for (uint64_t m = 0; m < signs; ++m) {
                const auto ref = apply_reduction(s, space.at(k * signs + m));
                EXPECT_NEAR(outs[m].c_i, ref.c_i, 1e-13);
                EXPECT_NEAR(outs[m].c_x, ref.c_x, 1e-13);
                EXPECT_NEAR(outs[m].c_y, ref.c_y, 1e-13);
                EXPECT_NEAR(outs[m].c_z, ref.c_z, 1e-13);
            }
        }
    }
}

TEST(Search, WorkerCountDoesNotChangeResult) {
    std::mt19937_64 rng(37);
    const auto s = testutil::random_state(rng, 4);
    SearchOptions one, many;
    many.workers = 5;
    many.checkpoint_every = 4000;
    const auto a = exhaustive_search(s, SearchObjective::t_fidelity, one);
    const auto b = exhaustive_search(s, SearchObjective::t_fidelity, many);
    EXPECT_EQ(a.best_index, b.best_index);
    EXPECT_EQ(a.best_value, b.best_value);
    EXPECT_EQ(a.evaluated, b.evaluated);
}

TEST(Search, TiesGoToFirstIndex) {
    // The maximally mixed input gives every reduction the same value.
    const auto s = RealCoefficients::maximally_mixed(3);
    SearchOptions o;
    o.workers = 3;
    const auto r = exhaustive_search(s, SearchObjective::sum_xz, o);
    EXPECT_EQ(r.best_index, 0);
    EXPECT_EQ(r.best_value, 0);
}

TEST(Search, ResumeGivesIdenticalResult) {
    std::mt19937_64 rng(41);
    const auto s = testutil::random_state(rng, 4);
    const auto path = temp_path("resume.json");
    SearchOptions partial;
    partial.checkpoint_path = path;
    partial.checkpoint_every = 8000;
    partial.max_rounds = 3;
    const auto first = exhaustive_search(s, SearchObjective::sum_xz, partial);
    EXPECT_FALSE(first.complete);
    EXPECT_GT(first.next_index, 0u);
    ASSERT_TRUE(std::filesystem::exists(path));

    SearchOptions rest = partial;
    rest.max_rounds = 0;
    rest.workers = 2;
    const auto resumed = exhaustive_search(s, SearchObjective::sum_xz, rest);
    const auto direct = exhaustive_search(s, SearchObjective::sum_xz);
    EXPECT_TRUE(resumed.complete);
    EXPECT_EQ(resumed.best_index, direct.best_index);
    EXPECT_EQ(resumed.best_value, direct.best_value);
    EXPECT_EQ(resumed.evaluated, direct.evaluated);
    EXPECT_EQ(resumed.degenerate, direct.degenerate);
    std::filesystem::remove(path);
}

TEST(Search, RefusesBadCheckpoints) {
    std::mt19937_64 rng(43);
    const auto s = testutil::random_state(rng, 3);
    const auto path = temp_path("bad.json");
    {
        std::ofstream f(path);
        f << "{\"version\": 1, \"next_index\": ";
    }
    SearchOptions o;
    o.checkpoint_path = path;
    EXPECT_THROW(exhaustive_search(s, SearchObjective::sum_xz, o), std::runtime_error);

    // A valid checkpoint for a different input is refused too.
    std::filesystem::remove(path);
    o.max_rounds = 1;
    o.checkpoint_every = 64;
    exhaustive_search(s, SearchObjective::sum_xz, o);
    EXPECT_THROW(exhaustive_search(s, SearchObjective::t_fidelity, o), std::runtime_error);
    const auto other = testutil::random_state(rng, 3);
    EXPECT_THROW(exhaustive_search(other, SearchObjective::sum_xz, o), std::runtime_error);
    std::filesystem::remove(path);
}

TEST(Search, ObjectivesAreCliffordInvariant) {
    std::mt19937_64 rng(47);
    const auto group = generate_clifford_group(1);
    for (int i = 0; i < 20; ++i) {
        const auto b = testutil::random_bloch(rng);
        for (auto o : {SearchObjective::sum_xz, SearchObjective::t_fidelity, SearchObjective::escape_o1})
            for (const auto& c : group) EXPECT_NEAR(objective_value(o, apply_clifford(c, b)), objective_value(o, b), 1e-15);
    }
    EXPECT_NEAR(objective_value(SearchObjective::t_fidelity, {1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 1 / std::sqrt(3.0)}),
                1.0, 1e-15);
    EXPECT_DOUBLE_EQ(objective_value(SearchObjective::sum_xz, {0.1, -0.5, 0.3}), 0.8);
    EXPECT_DOUBLE_EQ(objective_value(SearchObjective::escape_o1, {0.5, 0, 0.5}), 0.0);
}

TEST(Search, ObjectiveNames) {
    for (auto o : {SearchObjective::sum_xz, SearchObjective::t_fidelity, SearchObjective::escape_o1})
        EXPECT_EQ(parse_objective(objective_name(o)), o);
    EXPECT_FALSE(parse_objective("nope").has_value());
}

TEST(Search, RejectsBadSizes) {
    EXPECT_THROW(exhaustive_search(RealCoefficients::maximally_mixed(1), SearchObjective::sum_xz), std::invalid_argument);
    EXPECT_THROW(exhaustive_search(RealCoefficients::maximally_mixed(6), SearchObjective::sum_xz), std::invalid_argument);
}
