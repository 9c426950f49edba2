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

#ifndef MAGICDISTILL_DENSITY_H
#define MAGICDISTILL_DENSITY_H

#include <Eigen/Dense>

#include "magicdistill/pauli.h"

namespace magicdistill {

using ComplexMatrix = Eigen::MatrixXcd;

/// Dense 2^n x 2^n operator. Holds any Hermitian operator, normalized or not.
class DensityMatrix {
   public:
    DensityMatrix() = default;
    DensityMatrix(int n, ComplexMatrix entries);

    static DensityMatrix maximally_mixed(int n);
    static DensityMatrix from_bloch(const BlochVector& b);

    int num_qubits() const { return n_; }
    const ComplexMatrix& matrix() const { return m_; }
    std::complex<double> trace() const { return m_.trace(); }
    bool is_hermitian(double tol = 1e-10) const;

   private:
    int n_ = 0;
    ComplexMatrix m_;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Dense matrix of a signed Pauli operator.
ComplexMatrix dense_pauli(const PauliOperator& p);

/// c_P = tr(P rho) / 2^n. Throws std::invalid_argument if rho is not Hermitian within tol.
RealCoefficients coeffs_from_density(const DensityMatrix& rho, double tol = 1e-10);
/// sum_P c_P P.
DensityMatrix density_from_coeffs(const RealCoefficients& c);

/// Trace one and positive semidefinite, decided exactly.
bool is_valid_state(const RationalCoefficients& c);
/// Trace one (within tol) and every eigenvalue >= -tol.
bool is_valid_state(const RealCoefficients& c, double tol = 1e-10);

/// Exact PSD test on the Hermitian operator sum_P c_P P (trace is not checked).
bool is_positive_semidefinite(const RationalCoefficients& c);

}  // namespace magicdistill

#endif  // MAGICDISTILL_DENSITY_H
