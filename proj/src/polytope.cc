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

#include "magicdistill/polytope.h"

#include <set>
#include <sstream>
#include <stdexcept>

#include "magicdistill/density.h"
#include "magicdistill/simplex.h"
#include "magicdistill/stabilizer.h"

namespace magicdistill {

Halfspace Halfspace::from_labels(int n, const std::map<std::string, Rational>& entries) {
    Halfspace h{n, std::vector<Rational>(num_paulis(n))};
    for (const auto& [label, v] : entries) {
        if (static_cast<int>(label.size()) != n) throw std::invalid_argument("Halfspace: label length mismatch: " + label);
        h.coeffs[index_from_label(label)] = v;
    }
    return h;
}

Rational Halfspace::evaluate(const RationalCoefficients& s) const {
    if (s.num_qubits() != n) throw std::invalid_argument("Halfspace::evaluate: qubit count mismatch");
    Rational acc = 0;
    for (uint32_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) acc += coeffs[i] * s[i];
    return acc;
}

double Halfspace::evaluate(const RealCoefficients& s) const {
    if (s.num_qubits() != n) throw std::invalid_argument("Halfspace::evaluate: qubit count mismatch");
    double acc = 0;
    for (uint32_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) acc += coeffs[i].get_d() * s[i];
    return acc;
}

bool Halfspace::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

std::string Halfspace::str() const {
    std::ostringstream os;
    bool first = true;
    for (uint32_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        os << (first ? "" : " ") << label_from_index(n, i) << ":" << coeffs[i].get_str();
        first = false;
    }
    return os.str();
}

Halfspace apply_clifford(const CliffordElement& c, const Halfspace& h) {
    if (c.num_qubits() != h.n) throw std::invalid_argument("apply_clifford: qubit count mismatch");
    return Halfspace{h.n, apply_clifford(c, h.coeffs)};
}

const std::vector<RationalCoefficients>& stabilizer_vertices(int n) {
    static const std::vector<RationalCoefficients> v1 = enumerate_stabilizer_states(1);
    static const std::vector<RationalCoefficients> v2 = enumerate_stabilizer_states(2);
    switch (n) {
        case 1: return v1;
        case 2: return v2;
        case 3: {
            static const std::vector<RationalCoefficients> v3 = enumerate_stabilizer_states(3);
            return v3;
        }
        default: throw std::invalid_argument("stabilizer_vertices: n must be in [1, 3]");
    }
}

HalfspaceCheck verify_halfspace(const Halfspace& h, const std::vector<RationalCoefficients>& vertices) {
    HalfspaceCheck out;
    bool first = true;
    for (const auto& v : vertices) {
        const Rational val = h.evaluate(v);
        if (first || val > out.max_value) out.max_value = val;
        first = false;
        if (val == 0) ++out.tight_count;
    }
    return out;
}

bool verify_certificate(const RationalCoefficients& s, const std::vector<RationalCoefficients>& vertices,
                        const MembershipCertificate& cert) {
    if (const auto* in = std::get_if<Inside>(&cert)) {
        RationalCoefficients acc(s.num_qubits());
        Rational total = 0;
        for (const auto& [idx, w] : in->weights) {
            if (w < 0 || idx >= vertices.size()) return false;
            total += w;
            for (uint32_t i = 0; i < acc.size(); ++i) acc[i] += w * vertices[idx][i];
        }
        return total == 1 && acc == s;
    }
    const auto& out = std::get<Outside>(cert);
    if (out.h.evaluate(s) != out.value || out.value <= 0) return false;
    for (const auto& v : vertices)
        if (out.h.evaluate(v) > 0) return false;
    return true;
}

MembershipCertificate membership(const RationalCoefficients& s, const std::vector<RationalCoefficients>& vertices,
                                 std::span<const Halfspace> candidates) {
    if (vertices.empty() || vertices.front().num_qubits() != s.num_qubits())
        throw std::invalid_argument("membership: vertex set does not match the state");
    if (!is_valid_state(s)) throw std::invalid_argument("membership: input is not a valid density matrix");

    MembershipCertificate cert;
    bool decided = false;
    for (const auto& h : candidates) {
        if (h.n != s.num_qubits()) continue;
        const Rational v = h.evaluate(s);
        if (v > 0 && verify_halfspace(h, vertices).max_value <= 0) {
            cert = Outside{h, v, true};
            decided = true;
            break;
        }
    }
    if (!decided) {
        std::vector<std::vector<Rational>> cols;
        cols.reserve(vertices.size());
        for (const auto& v : vertices) cols.emplace_back(v.values().begin(), v.values().end());
        const std::vector<Rational> b(s.values().begin(), s.values().end());
        const auto lp = solve_feasibility(cols, b);
        if (lp.feasible) {
            Inside in;
            for (size_t j = 0; j < lp.lambda.size(); ++j)
                if (lp.lambda[j] != 0) in.weights.emplace_back(j, lp.lambda[j]);
            cert = in;
        } else {
            Halfspace h{s.num_qubits(), lp.farkas};
            cert = Outside{h, h.evaluate(s), false};
        }
    }
    if (!verify_certificate(s, vertices, cert)) throw std::logic_error("membership: certificate failed re-verification");
    return cert;
}

MembershipCertificate membership(const RationalCoefficients& s, std::span<const Halfspace> candidates) {
    return membership(s, stabilizer_vertices(s.num_qubits()), candidates);
}

std::vector<Halfspace> facet_orbit(const Halfspace& h, const std::vector<CliffordElement>& group) {
    std::set<std::vector<Rational>> seen;
    for (const auto& g : group) seen.insert(apply_clifford(g, h.coeffs));
    std::vector<Halfspace> out;
    out.reserve(seen.size());
    for (const auto& c : seen) out.push_back(Halfspace{h.n, c});
    return out;
}

std::vector<size_t> facet_orbit_census(const std::vector<Halfspace>& representatives,
                                       const std::vector<CliffordElement>& group) {
    std::vector<std::set<std::vector<Rational>>> orbits;
    std::vector<size_t> sizes;
    for (size_t r = 0; r < representatives.size(); ++r) {
        const auto& h = representatives[r];
        for (size_t q = 0; q < orbits.size(); ++q)
            if (orbits[q].count(h.coeffs))
                throw std::invalid_argument("facet_orbit_census: representatives " + std::to_string(q + 1) + " and " +
                                            std::to_string(r + 1) + " are equivalent");
        std::set<std::vector<Rational>> orbit;
        for (const auto& g : group) orbit.insert(apply_clifford(g, h.coeffs));
        sizes.push_back(orbit.size());
        orbits.push_back(std::move(orbit));
    }
    return sizes;
}

}  // namespace magicdistill
