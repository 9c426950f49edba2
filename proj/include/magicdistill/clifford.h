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


#ifndef MAGICDISTILL_CLIFFORD_H
#define MAGICDISTILL_CLIFFORD_H

#include <cstdint>
#include <vector>

#include "magicdistill/pauli.h"

namespace magicdistill {

/// Conjugation action P -> C P C^dagger stored as a signed permutation of the
/// 4^n unsigned Pauli indices (index 0 is fixed).
class CliffordElement {
   public:
    CliffordElement() = default;
    static CliffordElement identity(int n);
    /// Builds the action from the images of X_q and Z_q for every qubit q.
    /// Throws std::invalid_argument if the images do not form a symplectic basis.
    static CliffordElement from_generator_images(int n, const std::vector<PauliOperator>& x_images,
                                                 const std::vector<PauliOperator>& z_images);

    int num_qubits() const { return n_; }
    uint32_t image(uint32_t index) const { return image_[index]; }
    int sign(uint32_t index) const { return sign_[index]; }
    PauliOperator apply(const PauliOperator& p) const;
    /// First this, then `next`.
    CliffordElement then(const CliffordElement& next) const;
    CliffordElement inverse() const;

    friend bool operator==(const CliffordElement&, const CliffordElement&) = default;
    friend auto operator<=>(const CliffordElement&, const CliffordElement&) = default;

   private:
    int n_ = 0;
    std::vector<uint32_t> image_;
    std::vector<int8_t> sign_;
};

CliffordElement hadamard(int n, int q);
/// Phase gate diag(1, i).
CliffordElement phase_gate(int n, int q);
CliffordElement cnot(int n, int control, int target);
/// 120 degree rotation about (1,1,1): X -> Y -> Z -> X.
CliffordElement t_gate(int n, int q);

/// Closure of {H, S, CNOT} on n <= 2 qubits (24 and 11520 elements),
/// sorted into canonical order.
std::vector<CliffordElement> generate_clifford_group(int n);

/// c'_{C(P)} = sign * c_P. Also maps halfspace coefficients consistently,
/// since h . c is preserved.
template <typename Scalar>
PauliCoefficients<Scalar> apply_clifford(const CliffordElement& c, const PauliCoefficients<Scalar>& s) {
    if (c.num_qubits() != s.num_qubits()) throw std::invalid_argument("apply_clifford: qubit count mismatch");
    PauliCoefficients<Scalar> out(s.num_qubits());
    for (uint32_t i = 0; i < s.size(); ++i) {
        out[c.image(i)] = c.sign(i) > 0 ? s[i] : Scalar(-s[i]);
    }
    return out;
}

/// Same action on a raw coefficient vector of length 4^n.
template <typename Scalar>
std::vector<Scalar> apply_clifford(const CliffordElement& c, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(v.size());
    for (uint32_t i = 0; i < v.size(); ++i) out[c.image(i)] = c.sign(i) > 0 ? v[i] : Scalar(-v[i]);
    return out;
}

BlochVector apply_clifford(const CliffordElement& c, const BlochVector& b);

}  // namespace magicdistill

#endif  // MAGICDISTILL_CLIFFORD_H
