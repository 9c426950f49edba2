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


#ifndef MAGICDISTILL_THRESHOLDS_H
#define MAGICDISTILL_THRESHOLDS_H

#include <functional>
#include <optional>
#include <string_view>

#include "magicdistill/pauli.h"

namespace magicdistill {

enum class NoiseKind { depolarizing, dephasing, worst_case };

/// depolarizing: (1-p) rho + p I/2 tr rho.
/// dephasing:    (1-p) rho + p Z rho Z, with p the flip probability.
/// worst_case:   (1-p) rho + p sigma for an adversarial state sigma.
struct NoiseChannel {
    NoiseKind kind = NoiseKind::depolarizing;
    double p = 0;
};

std::string_view noise_name(NoiseKind k);
std::optional<NoiseKind> parse_noise(std::string_view name);

/// Depolarizing threshold (6 - 2 sqrt 2) / 7.
double depolarizing_threshold();

/// Bloch vector of the noisy exp(i pi Z / 8) gate applied to |+>. For
/// worst_case the adversary minimizes |x| + |y| over pure states.
BlochVector noisy_pi8_on_plus(const NoiseChannel& ch);

/// (1 (x) ch o U)(|Psi><Psi|) with |Psi> = (|00> + |11>)/sqrt 2 and U the
/// pi/8 gate (or the identity when with_gate is false). Throws
/// std::invalid_argument for worst_case, which is not a fixed channel.
RealCoefficients jamiolkowski_state(const NoiseChannel& ch, bool with_gate = true);

/// Even-parity (+ZZ) reduction of the depolarized Jamiolkowski state at rate
/// (6 - 2 sqrt 2)/7 - eps: (x, -x, 0) with
/// x = sqrt 2 (1 + 2 sqrt 2 + 7 eps) / (8 + 2 sqrt 2 + 7 eps).
BlochVector pi8_parity_output(double eps);
/// The same quantity through the generic reduction pipeline.
BlochVector pi8_parity_pipeline(double eps);
/// Printed formula (1/(10 + 6 sqrt 2 + 21 eps)) ((1 + 2 sqrt 2)(2 + 7 eps),
/// -2 sqrt 2 (1 + 2 sqrt 2 + 7 eps), 0), kept for comparison only.
BlochVector pi8_parity_output_published(double eps);

enum class Criterion {
    /// thm2 region after the parity reduction of the Jamiolkowski state.
    jamiolkowski_parity,
    /// thm2 region for the gate applied directly to |+>.
    direct_plus,
};

struct ThresholdResult {
    double value = 0;
    double lo = 0;
    double hi = 0;
    bool monotone = true;
};

/// Largest p in [0, 1] at which the criterion holds, by bisection after a
/// monotonicity scan on a coarse grid.
ThresholdResult threshold_search(NoiseKind kind, Criterion criterion, double tol = 1e-12);
/// Same search for an arbitrary predicate in p.
ThresholdResult threshold_search(const std::function<bool(double)>& holds, double tol = 1e-12);

}  // namespace magicdistill

#endif  // MAGICDISTILL_THRESHOLDS_H
