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


#ifndef MAGICDISTILL_ORACLE_H
#define MAGICDISTILL_ORACLE_H

#include <array>
#include <variant>
#include <vector>

#include "magicdistill/density.h"
#include "magicdistill/reductions.h"
#include "magicdistill/stabilizer.h"

namespace magicdistill {

struct ProjectStep {
    StabilizerGroup group;
    bool renormalize = true;
};
struct UnitaryStep {
    ComplexMatrix u;
};
struct PartialTraceStep {
    /// Qubits kept, in output order.
    std::vector<int> kept;
};
/// Projects onto the code and reads the logical Bloch vector from the given
/// logical X and Z (Y = i X Z). Produces a normalized single-qubit state.
struct DecodeStep {
    StabilizerGroup code;
    PauliOperator logical_x;
    PauliOperator logical_z;
};
using ProtocolStep = std::variant<ProjectStep, UnitaryStep, PartialTraceStep, DecodeStep>;

struct ProtocolResult {
    DensityMatrix state;
    double success_probability = 1;
    bool zero_probability = false;
};

/// Tensors the inputs (first input = qubit 0) and runs the steps densely.
ProtocolResult run_protocol(const std::vector<DensityMatrix>& inputs, const std::vector<ProtocolStep>& steps);

/// (1/|G|) sum_{g in G} g.
ComplexMatrix group_projector(const StabilizerGroup& g);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& kept);
BlochVector bloch_of(const DensityMatrix& rho);

/// Dense two-qubit reduction: project, apply a Clifford taking the group
/// generator to +IZ, trace out qubit 1. Output coefficients use the same
/// summed normalization as apply_reduction.
ReductionOutput<double> oracle_reduction(const RealCoefficients& s, const StabilizerGroup& r);

/// Dense T = (1/2)[[-1+i, 1+i], [-1+i, -1-i]], a 120 degree rotation.
ComplexMatrix dense_t_gate();

struct CodeDistillResult {
    BlochVector out;
    double p_success = 0;
};
/// Five copies with T^twists[i] applied to copy i, projected onto the
/// five-qubit code and decoded with X_L = XXXXX, Z_L = ZZZZZ.
CodeDistillResult oracle_code_distill(const std::array<BlochVector, 5>& inputs, const std::array<int, 5>& twists);

/// Twist assignment reproducing twisted_five_qubit_map: T^2 on the last two
/// copies. The closed form equals kTwistRotation applied to the decoded output.
inline constexpr std::array<int, 5> kTwistAssignment = {0, 0, 0, 2, 2};
inline constexpr std::array<std::array<int, 3>, 3> kTwistRotation = {{{0, 0, -1}, {1, 0, 0}, {0, -1, 0}}};

/// Dense oracles for the closed-form maps.
BlochVector oracle_parity(const BlochVector& b);
BlochVector oracle_pair_parity(const BlochVector& b);
/// Four copies; returns the output before x <-> z averaging.
BlochVector oracle_dual_round(double x);
BlochVector oracle_pi8_parity(double eps);

}  // namespace magicdistill

#endif  // MAGICDISTILL_ORACLE_H
