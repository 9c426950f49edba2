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


#ifndef MAGICDISTILL_REDUCTIONS_H
#define MAGICDISTILL_REDUCTIONS_H

#include <array>
#include <cmath>
#include <vector>

#include "magicdistill/polytope.h"
#include "magicdistill/stabilizer.h"

namespace magicdistill {

/// Logical coefficients of the free qubit, summed over the group:
/// c_I' = sum_g c_g and c_Q' = sum_g c_{g Q_L}, both with tracked signs.
/// The success probability is 2 c_I'.
template <typename T>
struct ReductionOutput {
    T c_i{};
    T c_x{};
    T c_y{};
    T c_z{};

    const T& success_weight() const { return c_i; }
    bool degenerate() const { return c_i == 0; }
    friend bool operator==(const ReductionOutput&, const ReductionOutput&) = default;
};

/// Normalized Bloch vector of a non-degenerate output.
BlochVector bloch(const ReductionOutput<double>& o);
BlochVector bloch(const ReductionOutput<Rational>& o);
ReductionOutput<double> to_real(const ReductionOutput<Rational>& o);

/// Canonical logical operators of the free qubit: X_L is the smallest
/// normalizer element outside the group, Z_L the smallest anticommuting with
/// it, Y_L = i X_L Z_L.
struct LogicalOperators {
    PauliOperator x;
    PauliOperator y;
    PauliOperator z;
};
LogicalOperators logical_operators(const StabilizerGroup& r);

ReductionOutput<Rational> apply_reduction(const RationalCoefficients& s, const StabilizerGroup& r);
ReductionOutput<double> apply_reduction(const RealCoefficients& s, const StabilizerGroup& r);

/// |c_X'| + |c_Y'| + |c_Z'| <= c_I'. Degenerate outputs count as inside.
bool in_octahedron(const ReductionOutput<Rational>& o);
bool in_octahedron(const ReductionOutput<double>& o, double tol = 0);

struct ReductionRecord {
    StabilizerGroup group;
    ReductionOutput<Rational> output;
    bool inside = false;
};

struct CounterexampleReport {
    bool valid_state = false;
    MembershipCertificate membership;
    bool outside = false;
    std::vector<ReductionRecord> reductions;
    bool all_inside = false;

    bool passes() const { return valid_state && outside && all_inside; }
};

/// Certificate that s is outside O_2 and the outputs of all 30 reductions.
CounterexampleReport verify_counterexample(const RationalCoefficients& s, std::span<const Halfspace> candidates = {});

struct StructureReport {
    bool no_two_commute = false;
    bool products_anticommute = false;
    bool three_commute_outside = false;
    std::vector<uint32_t> support;

    bool all() const { return no_two_commute && products_anticommute && three_commute_outside; }
};
StructureReport check_structure(const RationalCoefficients& s);

}  // namespace magicdistill

#endif  // MAGICDISTILL_REDUCTIONS_H
