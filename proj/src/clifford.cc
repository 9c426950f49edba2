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

#include "magicdistill/clifford.h"

#include <deque>
#include <set>

namespace magicdistill {

namespace {

PauliOperator on_qubit(int n, int q, char p) {
    std::string label(n, 'I');
    label[q] = p;
    return PauliOperator::from_string(label);
}

CliffordElement single_qubit_action(int n, int q, PauliOperator x_image, PauliOperator z_image) {
    std::vector<PauliOperator> xs, zs;
    for (int k = 0; k < n; ++k) {
        xs.push_back(on_qubit(n, k, 'X'));
        zs.push_back(on_qubit(n, k, 'Z'));
    }
    xs[q] = std::move(x_image);
    zs[q] = std::move(z_image);
    return CliffordElement::from_generator_images(n, xs, zs);
}

}  // namespace

CliffordElement CliffordElement::identity(int n) {
    CliffordElement c;
    c.n_ = n;
    c.image_.resize(num_paulis(n));
    c.sign_.assign(num_paulis(n), 1);
    for (uint32_t i = 0; i < c.image_.size(); ++i) c.image_[i] = i;
    return c;
}

CliffordElement CliffordElement::from_generator_images(int n, const std::vector<PauliOperator>& x_images,
                                                       const std::vector<PauliOperator>& z_images) {
    if (static_cast<int>(x_images.size()) != n || static_cast<int>(z_images.size()) != n)
        throw std::invalid_argument("from_generator_images: need one X and one Z image per qubit");
    for (int a = 0; a < n; ++a) {
        for (const auto* p : {&x_images[a], &z_images[a]})
            if (p->num_qubits() != n || !p->is_hermitian() || p->is_identity())
                throw std::invalid_argument("from_generator_images: bad image " + p->str());
        for (int b = 0; b < n; ++b) {
            const bool want_anti = a == b;
            if (commutes(x_images[a], z_images[b]) == want_anti || (a != b && !commutes(x_images[a], x_images[b])) ||
                (a != b && !commutes(z_images[a], z_images[b])))
                throw std::invalid_argument("from_generator_images: images violate the commutation relations");
        }
    }
    CliffordElement c;
    c.n_ = n;
    c.image_.resize(num_paulis(n));
    c.sign_.resize(num_paulis(n));
    for (uint32_t idx = 0; idx < c.image_.size(); ++idx) {
        const uint32_t x = index_x_bits(n, idx), z = index_z_bits(n, idx);
        // sigma(x, z) = i^{|x&z|} X^x Z^z
        PauliOperator p = PauliOperator::identity(n);
        for (int q = 0; q < n; ++q)
            if (x >> (n - 1 - q) & 1) p = p * x_images[q];
        for (int q = 0; q < n; ++q)
            if (z >> (n - 1 - q) & 1) p = p * z_images[q];
        p = p.times_phase(__builtin_popcount(x & z));
        c.image_[idx] = p.index();
        c.sign_[idx] = static_cast<int8_t>(p.sign());
    }
    return c;
}

PauliOperator CliffordElement::apply(const PauliOperator& p) const {
    if (p.num_qubits() != n_) throw std::invalid_argument("CliffordElement::apply: qubit count mismatch");
    const uint32_t i = p.index();
    return PauliOperator::from_index(n_, image_[i], p.phase_exp() + (sign_[i] < 0 ? 2 : 0));
}

CliffordElement CliffordElement::then(const CliffordElement& next) const {
    if (next.n_ != n_) throw std::invalid_argument("CliffordElement::then: qubit count mismatch");
    CliffordElement c;
    c.n_ = n_;
    c.image_.resize(image_.size());
    c.sign_.resize(image_.size());
    for (uint32_t i = 0; i < image_.size(); ++i) {
        c.image_[i] = next.image_[image_[i]];
        c.sign_[i] = static_cast<int8_t>(sign_[i] * next.sign_[image_[i]]);
    }
    return c;
}

CliffordElement CliffordElement::inverse() const {
    CliffordElement c = *this;
    for (uint32_t i = 0; i < image_.size(); ++i) {
        c.image_[image_[i]] = i;
        c.sign_[image_[i]] = sign_[i];
    }
    return c;
}

CliffordElement hadamard(int n, int q) { return single_qubit_action(n, q, on_qubit(n, q, 'Z'), on_qubit(n, q, 'X')); }

CliffordElement phase_gate(int n, int q) {
    return single_qubit_action(n, q, on_qubit(n, q, 'Y'), on_qubit(n, q, 'Z'));
}

CliffordElement t_gate(int n, int q) { return single_qubit_action(n, q, on_qubit(n, q, 'Y'), on_qubit(n, q, 'X')); }

CliffordElement cnot(int n, int control, int target) {
    if (control == target) throw std::invalid_argument("cnot: control equals target");
    std::vector<PauliOperator> xs, zs;
    for (int k = 0; k < n; ++k) {
        xs.push_back(on_qubit(n, k, 'X'));
        zs.push_back(on_qubit(n, k, 'Z'));
    }
    xs[control] = xs[control] * on_qubit(n, target, 'X');
    zs[target] = zs[target] * on_qubit(n, control, 'Z');
    return CliffordElement::from_generator_images(n, xs, zs);
}

std::vector<CliffordElement> generate_clifford_group(int n) {
    if (n < 1 || n > 2) throw std::invalid_argument("generate_clifford_group: n must be 1 or 2");
    std::vector<CliffordElement> gens;
    for (int q = 0; q < n; ++q) {
        gens.push_back(hadamard(n, q));
        gens.push_back(phase_gate(n, q));
    }
    if (n == 2) {
        gens.push_back(cnot(2, 0, 1));
        gens.push_back(cnot(2, 1, 0));
    }
    std::set<CliffordElement> seen{CliffordElement::identity(n)};
    std::deque<CliffordElement> queue{CliffordElement::identity(n)};
    while (!queue.empty()) {
        const CliffordElement g = std::move(queue.front());
        queue.pop_front();
        for (const auto& h : gens) {
            auto next = g.then(h);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

BlochVector apply_clifford(const CliffordElement& c, const BlochVector& b) {
    if (c.num_qubits() != 1) throw std::invalid_argument("apply_clifford: Bloch vectors need a one-qubit element");
    const auto out = apply_clifford(c, bloch_coefficients(b));
    return bloch_from_coefficients(out);
}

}  // namespace magicdistill
