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


#ifndef MAGICDISTILL_SIMPLEX_H
#define MAGICDISTILL_SIMPLEX_H

#include <vector>

#include "magicdistill/rational.h"

namespace magicdistill {

/// Outcome of deciding {A lambda = b, lambda >= 0}.
struct FeasibilityResult {
    bool feasible = false;
    /// A solution when feasible.
    std::vector<Rational> lambda;
    /// Farkas vector when infeasible: y^T A <= 0 columnwise and y^T b > 0.
    std::vector<Rational> farkas;
    int pivots = 0;
};

/// Phase-one simplex in exact arithmetic with Bland's rule. `columns` holds
/// the columns of A (each of length b.size()).
FeasibilityResult solve_feasibility(const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& b);

}  // namespace magicdistill

#endif  // MAGICDISTILL_SIMPLEX_H
