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

#ifndef MAGICDISTILL_PAULI_H
#define MAGICDISTILL_PAULI_H

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "magicdistill/rational.h"

namespace magicdistill {

/// Largest register handled anywhere in the library (dense matrices are 2^n x 2^n).
inline constexpr int kMaxQubits = 10;

/// Number of unsigned n-qubit Pauli labels, 4^n.
constexpr uint32_t num_paulis(int n) { return uint32_t{1} << (2 * n); }

/// Unsigned Pauli labels are indexed by (x_bits, z_bits) lexicographically:
/// index = (x_bits << n) | z_bits. Qubit 0 is the leftmost character of a
/// label and occupies bit n-1 of each mask.
constexpr uint32_t pauli_index(int n, uint32_t x_bits, uint32_t z_bits) {
    return (x_bits << n) | z_bits;
}
constexpr uint32_t index_x_bits(int n, uint32_t index) { return index >> n; }
constexpr uint32_t index_z_bits(int n, uint32_t index) { return index & ((uint32_t{1} << n) - 1); }

/// Parses an unsigned label such as "XZZXI" into its index.
uint32_t index_from_label(std::string_view label);
/// Label of an unsigned Pauli index, e.g. "IY".
std::string label_from_index(int n, uint32_t index);

/// Exponent g (mod 4) in sigma(a) sigma(b) = i^g sigma(a XOR b), where sigma
/// is the Hermitian Pauli with the given symplectic bits (Y = iXZ).
int product_phase(int n, uint32_t a_index, uint32_t b_index);

/// Symplectic form: 1 iff the two unsigned Paulis anticommute.
inline int symplectic_product(int n, uint32_t a, uint32_t b) {
    uint32_t t = (index_x_bits(n, a) & index_z_bits(n, b)) ^ (index_z_bits(n, a) & index_x_bits(n, b));
    return __builtin_popcount(t) & 1;
}

/// Signed n-qubit Pauli i^phase_exp * sigma(x_bits, z_bits).
class PauliOperator {
   public:
    PauliOperator() = default;
    PauliOperator(int n, uint32_t x_bits, uint32_t z_bits, int phase_exp = 0);

    static PauliOperator identity(int n) { return PauliOperator(n, 0, 0, 0); }
    static PauliOperator from_index(int n, uint32_t index, int phase_exp = 0);
    /// Accepts an optional sign prefix: "+", "-", "i", "-i", "+i".
    static PauliOperator from_string(std::string_view text);

    int num_qubits() const { return n_; }
    uint32_t x_bits() const { return x_; }
    uint32_t z_bits() const { return z_; }
    int phase_exp() const { return phase_; }
    uint32_t index() const { return pauli_index(n_, x_, z_); }

    bool is_hermitian() const { return (phase_ & 1) == 0; }
    bool is_identity() const { return x_ == 0 && z_ == 0; }
    /// +1 or -1 for Hermitian operators.
    int sign() const;

    std::string label() const { return label_from_index(n_, index()); }
    std::string str() const;

    PauliOperator operator-() const { return PauliOperator(n_, x_, z_, phase_ + 2); }
    PauliOperator times_phase(int k) const { return PauliOperator(n_, x_, z_, phase_ + k); }

    friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

   private:
    int n_ = 0;
    uint32_t x_ = 0;
    uint32_t z_ = 0;
    int phase_ = 0;
};

/// Matrix product P*Q. Throws std::invalid_argument on mismatched qubit counts.
PauliOperator pauli_multiply(const PauliOperator& p, const PauliOperator& q);
inline PauliOperator operator*(const PauliOperator& p, const PauliOperator& q) { return pauli_multiply(p, q); }

/// True iff PQ = QP. Throws std::invalid_argument on mismatched qubit counts.
bool commutes(const PauliOperator& p, const PauliOperator& q);

/// Real coefficient vector c_P = tr(P rho) / 2^n over all 4^n unsigned Paulis.
template <typename Scalar>
class PauliCoefficients {
   public:
    PauliCoefficients() = default;
    explicit PauliCoefficients(int n) : n_(n), c_(num_paulis(check_n(n))) {}
    PauliCoefficients(int n, std::vector<Scalar> values) : n_(n), c_(std::move(values)) {
        check_n(n);
        if (c_.size() != num_paulis(n)) throw std::invalid_argument("coefficient vector has wrong length");
    }

    /// c_I = 1/2^n, everything else zero.
    static PauliCoefficients maximally_mixed(int n) {
        PauliCoefficients out(n);
        out.c_[0] = Scalar(1) / Scalar(uint32_t{1} << n);
        return out;
    }

    int num_qubits() const { return n_; }
    size_t size() const { return c_.size(); }
    Scalar& operator[](uint32_t index) { return c_[index]; }
    const Scalar& operator[](uint32_t index) const { return c_[index]; }
    Scalar& at(std::string_view label) { return c_.at(label_index(label)); }
    const Scalar& at(std::string_view label) const { return c_.at(label_index(label)); }
    std::span<const Scalar> values() const { return c_; }
    std::span<Scalar> values() { return c_; }

    friend bool operator==(const PauliCoefficients&, const PauliCoefficients&) = default;

   private:
    static int check_n(int n) {
        if (n < 1 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
        return n;
    }
    uint32_t label_index(std::string_view label) const {
        if (static_cast<int>(label.size()) != n_) throw std::invalid_argument("label length mismatch");
        return index_from_label(label);
    }

    int n_ = 0;
    std::vector<Scalar> c_;
};

using RationalCoefficients = PauliCoefficients<Rational>;
using RealCoefficients = PauliCoefficients<double>;

/// Explicit conversions between the exact and floating representations.
RealCoefficients to_real(const RationalCoefficients& c);
RationalCoefficients rationalize(const RealCoefficients& c);

/// Tensor product in coefficient space (c_{PQ} = c_P c_Q).
template <typename Scalar>
PauliCoefficients<Scalar> tensor(const PauliCoefficients<Scalar>& a, const PauliCoefficients<Scalar>& b) {
    const int na = a.num_qubits(), nb = b.num_qubits(), n = na + nb;
    PauliCoefficients<Scalar> out(n);
    for (uint32_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const uint32_t ax = index_x_bits(na, i), az = index_z_bits(na, i);
        for (uint32_t j = 0; j < b.size(); ++j) {
            const uint32_t bx = index_x_bits(nb, j), bz = index_z_bits(nb, j);
            out[pauli_index(n, (ax << nb) | bx, (az << nb) | bz)] = a[i] * b[j];
        }
    }
    return out;
}

template <typename Scalar>
PauliCoefficients<Scalar> tensor_power(const PauliCoefficients<Scalar>& a, int copies) {
    PauliCoefficients<Scalar> out = a;
    for (int k = 1; k < copies; ++k) out = tensor(out, a);
    return out;
}

/// Single-qubit state rho(x,y,z) = (I + xX + yY + zZ)/2.
struct BlochVector {
    double x = 0;
    double y = 0;
    double z = 0;

    /// Distance from the z axis.
    double r() const;
    /// Longitudinal angle atan2(y, x).
    double phi() const;
    double norm() const;
    /// |x| + |y| + |z|.
    double l1() const;
    bool is_valid_state(double tol = 1e-12) const { return x * x + y * y + z * z <= 1 + tol; }
    bool is_stabilizer_mixture(double tol = 0) const { return l1() <= 1 + tol; }

    BlochVector operator*(double s) const { return {x * s, y * s, z * s}; }
    BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
    BlochVector operator-(const BlochVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
    friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

RealCoefficients bloch_coefficients(const BlochVector& b);
RationalCoefficients bloch_coefficients(const Rational& x, const Rational& y, const Rational& z);
BlochVector bloch_from_coefficients(const RealCoefficients& c);

}  // namespace magicdistill

#endif  // MAGICDISTILL_PAULI_H
