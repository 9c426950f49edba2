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

#include "magicdistill/reductions.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "magicdistill/density.h"

namespace magicdistill {

namespace {

template <typename Scalar>
ReductionOutput<Scalar> reduce(const PauliCoefficients<Scalar>& s, const StabilizerGroup& r) {
    const int n = s.num_qubits();
    if (r.num_qubits() != n) throw std::invalid_argument("apply_reduction: qubit count mismatch");
    if (r.num_generators() != n - 1) throw std::invalid_argument("apply_reduction: need n-1 generators");
    const auto els = r.elements();
    const auto L = logical_operators(r);
    auto coset = [&](const PauliOperator* l) {
        Scalar acc = 0;
        for (const auto& g : els) {
            const PauliOperator p = l ? g * *l : g;
            if (p.sign() > 0) acc += s[p.index()];
            else acc -= s[p.index()];
        }
        return acc;
    };
    return {coset(nullptr), coset(&L.x), coset(&L.y), coset(&L.z)};
}

}  // namespace

BlochVector bloch(const ReductionOutput<double>& o) {
    if (o.degenerate()) throw std::domain_error("bloch: degenerate reduction output");
    return {o.c_x / o.c_i, o.c_y / o.c_i, o.c_z / o.c_i};
}

BlochVector bloch(const ReductionOutput<Rational>& o) { return bloch(to_real(o)); }

ReductionOutput<double> to_real(const ReductionOutput<Rational>& o) {
    return {o.c_i.get_d(), o.c_x.get_d(), o.c_y.get_d(), o.c_z.get_d()};
}

LogicalOperators logical_operators(const StabilizerGroup& r) {
    const int n = r.num_qubits();
    std::vector<uint32_t> rows;
    for (const auto& g : r.generators()) rows.push_back(g.index());
    const auto basis = symplectic_complement(n, rows);
    std::vector<uint32_t> logical;
    for (uint64_t m = 0; m < (uint64_t{1} << basis.size()); ++m) {
        uint32_t v = 0;
        for (size_t j = 0; j < basis.size(); ++j)
            if (m >> j & 1) v ^= basis[j];
        if (r.contains(v) == 0) logical.push_back(v);
    }
    if (logical.empty()) throw std::invalid_argument("logical_operators: group leaves no logical qubit");
    std::sort(logical.begin(), logical.end());
    const uint32_t lx = logical.front();
    uint32_t lz = 0;
    bool found = false;
    for (uint32_t v : logical)
        if (symplectic_product(n, v, lx)) {
            lz = v;
            found = true;
            break;
        }
    if (!found) throw std::invalid_argument("logical_operators: no anticommuting logical pair");
    const auto X = PauliOperator::from_index(n, lx), Z = PauliOperator::from_index(n, lz);
    return {X, (X * Z).times_phase(1), Z};
}

ReductionOutput<Rational> apply_reduction(const RationalCoefficients& s, const StabilizerGroup& r) {
    return reduce(s, r);
}

ReductionOutput<double> apply_reduction(const RealCoefficients& s, const StabilizerGroup& r) { return reduce(s, r); }

bool in_octahedron(const ReductionOutput<Rational>& o) {
    if (o.degenerate()) return true;
    return abs(o.c_x) + abs(o.c_y) + abs(o.c_z) <= o.c_i;
}

bool in_octahedron(const ReductionOutput<double>& o, double tol) {
    if (o.degenerate()) return true;
    return std::abs(o.c_x) + std::abs(o.c_y) + std::abs(o.c_z) <= o.c_i + tol;
}

CounterexampleReport verify_counterexample(const RationalCoefficients& s, std::span<const Halfspace> candidates) {
    if (s.num_qubits() != 2) throw std::invalid_argument("verify_counterexample: two-qubit states only");
    CounterexampleReport rep;
    rep.valid_state = is_valid_state(s);
    if (rep.valid_state) {
        rep.membership = membership(s, candidates);
        rep.outside = !is_inside(rep.membership);
    }
    rep.all_inside = true;
    for (const auto& r : enumerate_reductions(2)) {
        ReductionRecord rec{r, apply_reduction(s, r), false};
        rec.inside = in_octahedron(rec.output);
        rep.all_inside = rep.all_inside && rec.inside;
        rep.reductions.push_back(std::move(rec));
    }
    return rep;
}

StructureReport check_structure(const RationalCoefficients& s) {
    const int n = s.num_qubits();
    StructureReport rep;
    for (uint32_t i = 1; i < s.size(); ++i)
        if (s[i] != 0) rep.support.push_back(i);
    const std::set<uint32_t> in_s(rep.support.begin(), rep.support.end());
    rep.no_two_commute = true;
    rep.products_anticommute = true;
    for (size_t a = 0; a < rep.support.size(); ++a)
        for (size_t b = a + 1; b < rep.support.size(); ++b) {
            const uint32_t p = rep.support[a], q = rep.support[b];
            if (!symplectic_product(n, p, q)) rep.no_two_commute = false;
            const uint32_t pq = p ^ q;
            if (!symplectic_product(n, pq, p) || !symplectic_product(n, pq, q)) rep.products_anticommute = false;
        }
    rep.three_commute_outside = true;
    for (uint32_t q = 1; q < s.size(); ++q) {
        if (in_s.count(q)) continue;
        int commuting = 0;
        for (uint32_t p : rep.support) commuting += symplectic_product(n, p, q) == 0;
        if (commuting != 3) rep.three_commute_outside = false;
    }
    return rep;
}

}  // namespace magicdistill
