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

#include "magicdistill/thresholds.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "magicdistill/density.h"
#include "magicdistill/maps.h"
#include "magicdistill/reductions.h"

namespace magicdistill {

namespace {

using cd = std::complex<double>;

BlochVector parity_output_at(const NoiseChannel& ch) {
    const auto s = jamiolkowski_state(ch);
    const auto o = apply_reduction(s, StabilizerGroup::from_strings({"+ZZ"}));
    return bloch(o);
}

}  // namespace

std::string_view noise_name(NoiseKind k) {
    switch (k) {
        case NoiseKind::depolarizing: return "depolarizing";
        case NoiseKind::dephasing: return "dephasing";
        case NoiseKind::worst_case: return "worst_case";
    }
    return "?";
}

std::optional<NoiseKind> parse_noise(std::string_view name) {
    for (auto k : {NoiseKind::depolarizing, NoiseKind::dephasing, NoiseKind::worst_case})
        if (noise_name(k) == name) return k;
    return std::nullopt;
}

double depolarizing_threshold() { return (6 - 2 * std::numbers::sqrt2) / 7; }

BlochVector noisy_pi8_on_plus(const NoiseChannel& ch) {
    if (ch.p < 0 || ch.p > 1) throw std::invalid_argument("noise rate must lie in [0, 1]");
    // exp(i pi Z / 8) takes X to (X - Y)/sqrt 2.
    const BlochVector b{std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2, 0};
    switch (ch.kind) {
        case NoiseKind::depolarizing: return b * (1 - ch.p);
        case NoiseKind::dephasing: return b * (1 - 2 * ch.p);
        case NoiseKind::worst_case: {
            // Pure sigma minimizing |x| + |y| of (1-p) b + p sigma.
            if (ch.p <= 0.5) return b * (1 - 2 * ch.p);
            const double t = (1 - ch.p) / ch.p;
            return {0, 0, ch.p * std::sqrt(1 - t * t)};
        }
    }
    return b;
}

RealCoefficients jamiolkowski_state(const NoiseChannel& ch, bool with_gate) {
    if (ch.kind == NoiseKind::worst_case)
        throw std::invalid_argument("jamiolkowski_state: worst-case noise is not a fixed channel");
    if (ch.p < 0 || ch.p > 1) throw std::invalid_argument("noise rate must lie in [0, 1]");
    ComplexMatrix psi = ComplexMatrix::Zero(4, 1);
    psi(0, 0) = psi(3, 0) = 1 / std::numbers::sqrt2;
    ComplexMatrix rho = psi * psi.adjoint();
    if (with_gate) {
        const cd a = std::polar(1.0, std::numbers::pi / 8);
        ComplexMatrix u = ComplexMatrix::Zero(4, 4);
        u.diagonal() << a, std::conj(a), a, std::conj(a);
        rho = u * rho * u.adjoint();
    }
    ComplexMatrix noisy;
    if (ch.kind == NoiseKind::depolarizing) {
        ComplexMatrix first = ComplexMatrix::Zero(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) first(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
        ComplexMatrix mixed = ComplexMatrix::Zero(4, 4);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) mixed(2 * i, 2 * j) = mixed(2 * i + 1, 2 * j + 1) = first(i, j) / 2.0;
        noisy = (1 - ch.p) * rho + ch.p * mixed;
    } else {
        const ComplexMatrix z2 = dense_pauli(PauliOperator::from_string("IZ"));
        noisy = (1 - ch.p) * rho + ch.p * z2 * rho * z2;
    }
    return coeffs_from_density(DensityMatrix(2, noisy));
}

BlochVector pi8_parity_output(double eps) {
    const double s2 = std::numbers::sqrt2;
    const double x = s2 * (1 + 2 * s2 + 7 * eps) / (8 + 2 * s2 + 7 * eps);
    return {x, -x, 0};
}

BlochVector pi8_parity_pipeline(double eps) {
    return parity_output_at({NoiseKind::depolarizing, depolarizing_threshold() - eps});
}

BlochVector pi8_parity_output_published(double eps) {
    const double s2 = std::numbers::sqrt2;
    const double d = 10 + 6 * s2 + 21 * eps;
    return {(1 + 2 * s2) * (2 + 7 * eps) / d, -2 * s2 * (1 + 2 * s2 + 7 * eps) / d, 0};
}

ThresholdResult threshold_search(const std::function<bool(double)>& holds, double tol) {
    constexpr int kGrid = 1000;
    ThresholdResult res;
    std::vector<bool> v(kGrid + 1);
    for (int i = 0; i <= kGrid; ++i) v[i] = holds(double(i) / kGrid);
    int flips = 0;
    for (int i = 1; i <= kGrid; ++i) flips += v[i] != v[i - 1];
    res.monotone = flips == 0 ? true : (flips == 1 && v[0]);
    if (!v[0]) return res;
    int last = 0;
    while (last < kGrid && v[last + 1]) ++last;
    if (last == kGrid) {
        res.value = res.lo = res.hi = 1;
        return res;
    }
    double lo = double(last) / kGrid, hi = double(last + 1) / kGrid;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (holds(mid) ? lo : hi) = mid;
    }
    res.lo = lo;
    res.hi = hi;
    res.value = 0.5 * (lo + hi);
    return res;
}

ThresholdResult threshold_search(NoiseKind kind, Criterion criterion, double tol) {
    if (criterion == Criterion::jamiolkowski_parity) {
        if (kind == NoiseKind::worst_case)
            throw std::invalid_argument("threshold_search: the Jamiolkowski route needs a fixed channel");
        return threshold_search(
            [kind](double p) { return p < 1 && region_check(parity_output_at({kind, p}), Region::thm2); }, tol);
    }
    return threshold_search([kind](double p) { return region_check(noisy_pi8_on_plus({kind, p}), Region::thm2); },
                            tol);
}

}  // namespace magicdistill
