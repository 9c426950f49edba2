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

#include "magicdistill/pauli.h"

#include <cmath>

namespace magicdistill {

Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("cannot rationalize a non-finite value");
    return Rational(v);
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("bad rational literal: " + text);
    q.canonicalize();
    return q;
}

uint32_t index_from_label(std::string_view label) {
    const int n = static_cast<int>(label.size());
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("bad Pauli label length");
    uint32_t x = 0, z = 0;
    for (int q = 0; q < n; ++q) {
        const uint32_t bit = uint32_t{1} << (n - 1 - q);
        switch (label[q]) {
            case 'I': break;
            case 'X': x |= bit; break;
            case 'Y': x |= bit; z |= bit; break;
            case 'Z': z |= bit; break;
            default: throw std::invalid_argument("bad Pauli label: " + std::string(label));
        }
    }
    return pauli_index(n, x, z);
}

std::string label_from_index(int n, uint32_t index) {
    const uint32_t x = index_x_bits(n, index), z = index_z_bits(n, index);
    std::string out(n, 'I');
    for (int q = 0; q < n; ++q) {
        const uint32_t bit = uint32_t{1} << (n - 1 - q);
        const bool xb = x & bit, zb = z & bit;
        out[q] = xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return out;
}

int product_phase(int n, uint32_t a, uint32_t b) {
    const uint32_t x1 = index_x_bits(n, a), z1 = index_z_bits(n, a);
    const uint32_t x2 = index_x_bits(n, b), z2 = index_z_bits(n, b);
    const uint32_t x3 = x1 ^ x2, z3 = z1 ^ z2;
    // sigma(x,z) = i^{|x&z|} X^x Z^z; moving Z^{z1} past X^{x2} costs (-1)^{|z1&x2|}.
    int g = __builtin_popcount(x1 & z1) + __builtin_popcount(x2 & z2) + 2 * __builtin_popcount(z1 & x2) -
            __builtin_popcount(x3 & z3);
    return ((g % 4) + 4) % 4;
}

PauliOperator::PauliOperator(int n, uint32_t x_bits, uint32_t z_bits, int phase_exp)
    : n_(n), x_(x_bits), z_(z_bits), phase_(((phase_exp % 4) + 4) % 4) {
    if (n < 0 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
    const uint32_t mask = (uint32_t{1} << n) - 1;
    if ((x_bits & ~mask) || (z_bits & ~mask)) throw std::invalid_argument("Pauli bits exceed qubit count");
}

PauliOperator PauliOperator::from_index(int n, uint32_t index, int phase_exp) {
    return PauliOperator(n, index_x_bits(n, index), index_z_bits(n, index), phase_exp);
}

PauliOperator PauliOperator::from_string(std::string_view text) {
    int phase = 0;
    if (text.starts_with("+")) text.remove_prefix(1);
    else if (text.starts_with("-")) {
        phase = 2;
        text.remove_prefix(1);
    }
    if (text.starts_with("i")) {
        phase += 1;
        text.remove_prefix(1);
    }
    const int n = static_cast<int>(text.size());
    return from_index(n, index_from_label(text), phase);
}

int PauliOperator::sign() const {
    if (!is_hermitian()) throw std::logic_error("sign() of a non-Hermitian Pauli");
    return phase_ == 0 ? 1 : -1;
}

std::string PauliOperator::str() const {
    static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
    return kPrefix[phase_] + label();
}

PauliOperator pauli_multiply(const PauliOperator& p, const PauliOperator& q) {
    if (p.num_qubits() != q.num_qubits()) throw std::invalid_argument("pauli_multiply: qubit count mismatch");
    const int n = p.num_qubits();
    const int g = product_phase(n, p.index(), q.index());
    return PauliOperator(n, p.x_bits() ^ q.x_bits(), p.z_bits() ^ q.z_bits(), p.phase_exp() + q.phase_exp() + g);
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
    if (p.num_qubits() != q.num_qubits()) throw std::invalid_argument("commutes: qubit count mismatch");
    return symplectic_product(p.num_qubits(), p.index(), q.index()) == 0;
}

RealCoefficients to_real(const RationalCoefficients& c) {
    RealCoefficients out(c.num_qubits());
    for (uint32_t i = 0; i < c.size(); ++i) out[i] = c[i].get_d();
    return out;
}

RationalCoefficients rationalize(const RealCoefficients& c) {
    RationalCoefficients out(c.num_qubits());
    for (uint32_t i = 0; i < c.size(); ++i) out[i] = rational_from_double(c[i]);
    return out;
}

double BlochVector::r() const { return std::hypot(x, y); }
double BlochVector::phi() const { return std::atan2(y, x); }
double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }
double BlochVector::l1() const { return std::abs(x) + std::abs(y) + std::abs(z); }

// Single-qubit indices: I=0, Z=1, X=2, Y=3.
RealCoefficients bloch_coefficients(const BlochVector& b) {
    return RealCoefficients(1, {0.5, 0.5 * b.z, 0.5 * b.x, 0.5 * b.y});
}

RationalCoefficients bloch_coefficients(const Rational& x, const Rational& y, const Rational& z) {
    const Rational half(1, 2);
    return RationalCoefficients(1, {half, half * z, half * x, half * y});
}

BlochVector bloch_from_coefficients(const RealCoefficients& c) {
    if (c.num_qubits() != 1) throw std::invalid_argument("Bloch vector needs a single-qubit state");
    const double t = c[0];
    if (t == 0) throw std::domain_error("zero-trace operator has no Bloch vector");
    return {c[2] / t, c[3] / t, c[1] / t};
}

}  // namespace magicdistill
