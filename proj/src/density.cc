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

#include "magicdistill/density.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>

namespace magicdistill {

using cd = std::complex<double>;

namespace {

cd i_pow(int k) {
    static const cd kTable[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kTable[((k % 4) + 4) % 4];
}

// Column j of sigma(x, z) has a single entry at row j ^ x:
// i^{|x&z|} (-1)^{|z&j|}.
cd sigma_entry(uint32_t x, uint32_t z, uint32_t j) {
    int k = __builtin_popcount(x & z) + 2 * (__builtin_popcount(z & j) & 1);
    return i_pow(k);
}

}  // namespace

DensityMatrix::DensityMatrix(int n, ComplexMatrix entries) : n_(n), m_(std::move(entries)) {
    if (n < 0 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
    const Eigen::Index d = Eigen::Index{1} << n;
    if (m_.rows() != d || m_.cols() != d) throw std::invalid_argument("density matrix has wrong dimension");
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
    const Eigen::Index d = Eigen::Index{1} << n;
    return DensityMatrix(n, ComplexMatrix::Identity(d, d) / double(d));
}

DensityMatrix DensityMatrix::from_bloch(const BlochVector& b) {
    ComplexMatrix m(2, 2);
    m << cd(1 + b.z, 0), cd(b.x, -b.y), cd(b.x, b.y), cd(1 - b.z, 0);
    return DensityMatrix(1, m / 2.0);
}

bool DensityMatrix::is_hermitian(double tol) const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    const auto& A = a.matrix();
    const auto& B = b.matrix();
    ComplexMatrix out(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return DensityMatrix(a.num_qubits() + b.num_qubits(), out);
}

ComplexMatrix dense_pauli(const PauliOperator& p) {
    const uint32_t d = uint32_t{1} << p.num_qubits();
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    const cd phase = i_pow(p.phase_exp());
    for (uint32_t j = 0; j < d; ++j) m(j ^ p.x_bits(), j) = phase * sigma_entry(p.x_bits(), p.z_bits(), j);
    return m;
}

RealCoefficients coeffs_from_density(const DensityMatrix& rho, double tol) {
    if (!rho.is_hermitian(tol)) throw std::invalid_argument("coeffs_from_density: operator is not Hermitian");
    const int n = rho.num_qubits();
    const uint32_t d = uint32_t{1} << n;
    const auto& m = rho.matrix();
    RealCoefficients c(n);
    for (uint32_t idx = 0; idx < c.size(); ++idx) {
        const uint32_t x = index_x_bits(n, idx), z = index_z_bits(n, idx);
        // tr(sigma rho) = sum_j sigma(j^x, j) rho(j, j^x)
        cd t = 0;
        for (uint32_t j = 0; j < d; ++j) t += sigma_entry(x, z, j) * m(j, j ^ x);
        c[idx] = t.real() / d;
    }
    return c;
}

DensityMatrix density_from_coeffs(const RealCoefficients& c) {
    const int n = c.num_qubits();
    const uint32_t d = uint32_t{1} << n;
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (uint32_t idx = 0; idx < c.size(); ++idx) {
        if (c[idx] == 0) continue;
        const uint32_t x = index_x_bits(n, idx), z = index_z_bits(n, idx);
        for (uint32_t j = 0; j < d; ++j) m(j ^ x, j) += c[idx] * sigma_entry(x, z, j);
    }
    return DensityMatrix(n, m);
}

namespace {

struct GaussQ {
    Rational re, im;
};

GaussQ mul(const GaussQ& a, const GaussQ& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

// Entries of sum_P c_P P as Gaussian rationals.
std::vector<std::vector<GaussQ>> exact_matrix(const RationalCoefficients& c) {
    const int n = c.num_qubits();
    const uint32_t d = uint32_t{1} << n;
    std::vector<std::vector<GaussQ>> m(d, std::vector<GaussQ>(d));
    for (uint32_t idx = 0; idx < c.size(); ++idx) {
        if (c[idx] == 0) continue;
        const uint32_t x = index_x_bits(n, idx), z = index_z_bits(n, idx);
        for (uint32_t j = 0; j < d; ++j) {
            const int k = (__builtin_popcount(x & z) + 2 * (__builtin_popcount(z & j) & 1)) % 4;
            GaussQ& e = m[j ^ x][j];
            switch (k) {
                case 0: e.re += c[idx]; break;
                case 1: e.im += c[idx]; break;
                case 2: e.re -= c[idx]; break;
                default: e.im -= c[idx]; break;
            }
        }
    }
    return m;
}

}  // namespace

bool is_positive_semidefinite(const RationalCoefficients& c) {
    // Symmetric Gaussian elimination (LDL^*). A zero pivot forces its row to vanish.
    auto m = exact_matrix(c);
    const size_t d = m.size();
    for (size_t k = 0; k < d; ++k) {
        const Rational piv = m[k][k].re;
        if (piv < 0) return false;
        if (piv == 0) {
            for (size_t j = k + 1; j < d; ++j)
                if (m[k][j].re != 0 || m[k][j].im != 0) return false;
            continue;
        }
        for (size_t i = k + 1; i < d; ++i) {
            if (m[i][k].re == 0 && m[i][k].im == 0) continue;
            const GaussQ f{m[i][k].re / piv, m[i][k].im / piv};
            for (size_t j = k; j < d; ++j) {
                const GaussQ t = mul(f, m[k][j]);
                m[i][j].re -= t.re;
                m[i][j].im -= t.im;
            }
        }
    }
    return true;
}

bool is_valid_state(const RationalCoefficients& c) {
    if (c[0] * (uint32_t{1} << c.num_qubits()) != 1) return false;
    return is_positive_semidefinite(c);
}

bool is_valid_state(const RealCoefficients& c, double tol) {
    if (std::abs(c[0] * (uint32_t{1} << c.num_qubits()) - 1) > tol) return false;
    const auto rho = density_from_coeffs(c);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

}  // namespace magicdistill
