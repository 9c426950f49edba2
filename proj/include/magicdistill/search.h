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


#ifndef MAGICDISTILL_SEARCH_H
#define MAGICDISTILL_SEARCH_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magicdistill/reductions.h"

namespace magicdistill {

/// Objectives are maximized over the single-qubit Clifford orbit of the
/// normalized output, so the logical-operator convention does not matter.
enum class SearchObjective {
    /// x' + z' after aligning: sum of the two largest |coordinates|.
    sum_xz,
    /// Fidelity with the nearest T-type state, (1 + (|x|+|y|+|z|)/sqrt 3) / 2.
    t_fidelity,
    /// |x| + |y| + |z| - 1; positive means the output left the octahedron.
    escape_o1,
};

std::string_view objective_name(SearchObjective o);
std::optional<SearchObjective> parse_objective(std::string_view name);
double objective_value(SearchObjective o, const BlochVector& b);

using ObjectiveFn = std::function<double(const ReductionOutput<double>&)>;

struct SearchOptions {
    int workers = 1;
    /// Empty disables checkpointing.
    std::string checkpoint_path;
    uint64_t checkpoint_every = 1'000'000;
    /// Stop after this many checkpoint rounds (0 = run to completion).
    uint64_t max_rounds = 0;
    /// Outputs with c_I' at or below this are treated as degenerate.
    double degenerate_tol = 1e-12;
};

struct SearchResult {
    int n = 0;
    /// Index into ReductionSpace(n); -1 if nothing evaluated.
    int64_t best_index = -1;
    double best_value = 0;
    ReductionOutput<double> best_output;
    uint64_t evaluated = 0;
    uint64_t degenerate = 0;
    uint64_t next_index = 0;
    bool complete = false;
};

/// Streams every reduction of ReductionSpace(s.num_qubits()) through the
/// objective. Ties go to the smallest index, so the result does not depend on
/// the worker count. Throws std::runtime_error if a checkpoint exists but
/// does not match this input, or if every reduction is degenerate.
SearchResult exhaustive_search(const RealCoefficients& s, SearchObjective objective, const SearchOptions& options = {});

/// Slow reference path through apply_reduction for arbitrary objectives.
/// Runs on the calling thread and ignores the checkpoint settings.
SearchResult exhaustive_search(const RealCoefficients& s, const ObjectiveFn& objective,
                               const SearchOptions& options = {});

/// Outputs of all 2^(n-1) sign choices for one subspace, computed with
/// Walsh-Hadamard transforms over the group. Matches apply_reduction.
std::vector<ReductionOutput<double>> subspace_outputs(const RealCoefficients& s, std::span<const uint32_t> basis);

/// Hex digest identifying a search input (n, objective, coefficient bits).
std::string search_input_hash(const RealCoefficients& s, std::string_view objective);

}  // namespace magicdistill

#endif  // MAGICDISTILL_SEARCH_H
