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

#include "magicdistill/simplex.h"

#include <stdexcept>

namespace magicdistill {

FeasibilityResult solve_feasibility(const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& b) {
    const size_t m = b.size();
    const size_t N = columns.size();
    for (const auto& c : columns)
        if (c.size() != m) throw std::invalid_argument("solve_feasibility: column length mismatch");

    // Tableau over N structural columns followed by m artificials; rows are
    // flipped so that the right-hand side is nonnegative.
    const size_t W = N + m;
    std::vector<int> flip(m, 1);
    std::vector<std::vector<Rational>> T(m, std::vector<Rational>(W));
    std::vector<Rational> rhs(m);
    for (size_t i = 0; i < m; ++i) {
        if (b[i] < 0) flip[i] = -1;
        for (size_t j = 0; j < N; ++j) T[i][j] = flip[i] > 0 ? columns[j][i] : Rational(-columns[j][i]);
        T[i][N + i] = 1;
        rhs[i] = flip[i] > 0 ? b[i] : Rational(-b[i]);
        rhs[i].canonicalize();  // GMP arithmetic assumes canonical operands
        for (size_t j = 0; j < N; ++j) T[i][j].canonicalize();
    }
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = N + i;

    // Reduced costs of the phase-one objective (sum of artificials).
    std::vector<Rational> rc(W);
    Rational obj = 0;
    for (size_t j = 0; j < N; ++j)
        for (size_t i = 0; i < m; ++i) rc[j] -= T[i][j];
    for (size_t i = 0; i < m; ++i) obj += rhs[i];

    FeasibilityResult res;
    while (true) {
        size_t enter = W;
        for (size_t j = 0; j < W; ++j)
            if (rc[j] < 0) {
                enter = j;
                break;
            }
        if (enter == W) break;
        size_t leave = m;
        Rational best;
        for (size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rational ratio = rhs[i] / T[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw std::logic_error("solve_feasibility: unbounded phase-one problem");
        const Rational piv = T[leave][enter];
        for (size_t j = 0; j < W; ++j) T[leave][j] /= piv;
        rhs[leave] /= piv;
        for (size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            const Rational f = T[i][enter];
            for (size_t j = 0; j < W; ++j)
                if (T[leave][j] != 0) T[i][j] -= f * T[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        const Rational f = rc[enter];
        for (size_t j = 0; j < W; ++j)
            if (T[leave][j] != 0) rc[j] -= f * T[leave][j];
        obj += f * rhs[leave];
        basis[leave] = enter;
        ++res.pivots;
    }

    if (obj == 0) {
        res.feasible = true;
        res.lambda.assign(N, 0);
        for (size_t i = 0; i < m; ++i)
            if (basis[i] < N) res.lambda[basis[i]] = rhs[i];
        return res;
    }
    // Duals of the flipped system: y'_i = 1 - rc(artificial i).
    res.farkas.resize(m);
    for (size_t i = 0; i < m; ++i) {
        Rational y = 1 - rc[N + i];
        res.farkas[i] = flip[i] > 0 ? y : Rational(-y);
    }
    return res;
}

}  // namespace magicdistill
