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

#include "magicdistill/stabilizer.h"

#include <algorithm>
#include <bit>
#include <functional>

namespace magicdistill {

namespace {

int leading_bit(uint32_t v) { return 31 - std::countl_zero(v); }

// Fully reduced echelon form; rows sorted by decreasing leading bit.
template <typename Row, typename Bits>
void reduce_rows(std::vector<Row>& rows, Bits bits) {
    std::vector<Row> out;
    for (auto r : rows) {
        for (const auto& o : out)
            if (bits(r) >> leading_bit(bits(o)) & 1) r ^= o;
        if (bits(r) == 0) continue;
        const int lb = leading_bit(bits(r));
        for (auto& o : out)
            if (bits(o) >> lb & 1) o ^= r;
        out.push_back(r);
    }
    std::sort(out.begin(), out.end(), [&](const Row& a, const Row& b) { return bits(a) > bits(b); });
    rows = std::move(out);
}

struct TaggedRow {
    uint32_t v;
    uint64_t mask;
    TaggedRow& operator^=(const TaggedRow& o) {
        v ^= o.v;
        mask ^= o.mask;
        return *this;
    }
};

}  // namespace

int gf2_rank(std::vector<uint32_t> rows) {
    reduce_rows(rows, [](uint32_t r) { return r; });
    return static_cast<int>(rows.size());
}

std::vector<uint32_t> symplectic_complement(int n, std::span<const uint32_t> rows) {
    // v commutes with g iff <v, swap(g)> = 0 where swap exchanges the x and z halves.
    const uint32_t low = (uint32_t{1} << n) - 1;
    std::vector<uint32_t> h;
    for (uint32_t g : rows) h.push_back(((g & low) << n) | (g >> n));
    reduce_rows(h, [](uint32_t r) { return r; });
    uint32_t pivots = 0;
    for (uint32_t r : h) pivots |= uint32_t{1} << leading_bit(r);
    std::vector<uint32_t> basis;
    for (int f = 2 * n - 1; f >= 0; --f) {
        if (pivots >> f & 1) continue;
        uint32_t v = uint32_t{1} << f;
        for (uint32_t r : h)
            if (r >> f & 1) v |= uint32_t{1} << leading_bit(r);
        basis.push_back(v);
    }
    return basis;
}

StabilizerGroup::StabilizerGroup(int n, std::vector<PauliOperator> generators) : n_(n), gens_(std::move(generators)) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("StabilizerGroup: qubit count out of range");
    if (gens_.size() > static_cast<size_t>(n)) throw std::invalid_argument("StabilizerGroup: too many generators");
    for (size_t i = 0; i < gens_.size(); ++i) {
        const auto& g = gens_[i];
        if (g.num_qubits() != n) throw std::invalid_argument("StabilizerGroup: generator qubit count mismatch");
        if (!g.is_hermitian()) throw std::invalid_argument("StabilizerGroup: generator " + g.str() + " is not Hermitian");
        for (size_t j = 0; j < i; ++j)
            if (!commutes(g, gens_[j]))
                throw std::invalid_argument("StabilizerGroup: " + g.str() + " and " + gens_[j].str() + " anticommute");
        rref_.push_back({g.index(), uint64_t{1} << i});
    }
    std::vector<TaggedRow> rows;
    for (auto [v, m] : rref_) rows.push_back({v, m});
    reduce_rows(rows, [](const TaggedRow& r) { return r.v; });
    if (rows.size() != gens_.size()) throw std::invalid_argument("StabilizerGroup: generators are dependent");
    rref_.clear();
    for (const auto& r : rows) rref_.push_back({r.v, r.mask});
}

StabilizerGroup StabilizerGroup::from_strings(const std::vector<std::string>& generators) {
    if (generators.empty()) throw std::invalid_argument("from_strings: need at least one generator");
    std::vector<PauliOperator> g;
    for (const auto& s : generators) g.push_back(PauliOperator::from_string(s));
    const int n = g.front().num_qubits();
    return StabilizerGroup(n, std::move(g));
}

PauliOperator StabilizerGroup::element(uint64_t mask) const {
    PauliOperator p = PauliOperator::identity(n_);
    for (size_t j = 0; j < gens_.size(); ++j)
        if (mask >> j & 1) p = p * gens_[j];
    return p;
}

std::vector<PauliOperator> StabilizerGroup::elements() const {
    std::vector<PauliOperator> out;
    out.reserve(order());
    for (uint64_t m = 0; m < order(); ++m) out.push_back(element(m));
    return out;
}

int StabilizerGroup::contains(uint32_t unsigned_index) const {
    uint32_t v = unsigned_index;
    uint64_t mask = 0;
    for (auto [r, m] : rref_) {
        if (v >> leading_bit(r) & 1) {
            v ^= r;
            mask ^= m;
        }
    }
    if (v != 0) return 0;
    return element(mask).sign();
}

std::string StabilizerGroup::str() const {
    std::string out = "<";
    for (size_t j = 0; j < gens_.size(); ++j) out += (j ? ", " : "") + gens_[j].str();
    return out + ">";
}

BigInt count_stabilizer_states(int n) {
    if (n < 1) throw std::invalid_argument("count_stabilizer_states: n must be positive");
    BigInt c = BigInt(1) << n;
    for (int k = 1; k <= n; ++k) c *= (BigInt(1) << k) + 1;
    return c;
}

BigInt count_reductions(int n) {
    return ((BigInt(1) << n) - 1) * count_stabilizer_states(n) / 6;
}

IsotropicSubspaces::IsotropicSubspaces(int n, int k) : n_(n), k_(k) {
    if (n < 1 || n > kMaxQubits || k < 0 || k > n) throw std::invalid_argument("IsotropicSubspaces: bad dimensions");
    if (k == 0) return;
    const int bits = 2 * n;
    std::vector<int> piv(k);
    std::vector<uint32_t> row(k);
    // Pivot sets in lexicographic order of (p_0 > p_1 > ... > p_{k-1}).
    std::function<void(int, int)> choose_pivots;
    std::function<void(int, const std::vector<std::vector<int>>&)> fill;
    fill = [&](int j, const std::vector<std::vector<int>>& free) {
        if (j == k) {
            rows_.insert(rows_.end(), row.begin(), row.end());
            return;
        }
        const auto& f = free[j];
        for (uint32_t t = 0; t < (uint32_t{1} << f.size()); ++t) {
            uint32_t r = uint32_t{1} << piv[j];
            for (size_t b = 0; b < f.size(); ++b)
                if (t >> b & 1) r |= uint32_t{1} << f[b];
            bool ok = true;
            for (int i = 0; i < j && ok; ++i) ok = symplectic_product(n, r, row[i]) == 0;
            if (!ok) continue;
            row[j] = r;
            fill(j + 1, free);
        }
    };
    choose_pivots = [&](int j, int below) {
        if (j == k) {
            uint32_t pivmask = 0;
            for (int p : piv) pivmask |= uint32_t{1} << p;
            std::vector<std::vector<int>> free(k);
            for (int i = 0; i < k; ++i)
                for (int b = 0; b < piv[i]; ++b)
                    if (!(pivmask >> b & 1)) free[i].push_back(b);
            fill(0, free);
            return;
        }
        for (int p = below - 1; p >= k - 1 - j; --p) {
            piv[j] = p;
            choose_pivots(j + 1, p);
        }
    };
    choose_pivots(0, bits);
}

ReductionSpace::ReductionSpace(int n) : n_(n), subspaces_(n, n - 1) {
    if (n < 2) throw std::invalid_argument("ReductionSpace: need at least two qubits");
}

StabilizerGroup group_from_basis(int n, std::span<const uint32_t> basis, uint64_t sign_mask) {
    std::vector<PauliOperator> g;
    for (size_t j = 0; j < basis.size(); ++j) g.push_back(PauliOperator::from_index(n, basis[j], (sign_mask >> j & 1) ? 2 : 0));
    return StabilizerGroup(n, std::move(g));
}

StabilizerGroup ReductionSpace::at(uint64_t index) const {
    if (index >= size()) throw std::out_of_range("ReductionSpace::at");
    const uint64_t signs = uint64_t{1} << (n_ - 1);
    return group_from_basis(n_, subspaces_.basis(index / signs), index % signs);
}

std::vector<RationalCoefficients> enumerate_stabilizer_states(int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("enumerate_stabilizer_states: n must be in [1, 3]");
    IsotropicSubspaces subs(n, n);
    const Rational w(1, 1 << n);
    std::vector<RationalCoefficients> out;
    for (size_t i = 0; i < subs.size(); ++i) {
        for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
            const auto g = group_from_basis(n, subs.basis(i), s);
            RationalCoefficients c(n);
            for (const auto& e : g.elements()) c[e.index()] = e.sign() > 0 ? w : Rational(-w);
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<StabilizerGroup> enumerate_reductions(int n) {
    if (n < 2 || n > 4) throw std::invalid_argument("enumerate_reductions: n must be in [2, 4]");
    ReductionSpace space(n);
    std::vector<StabilizerGroup> out;
    out.reserve(space.size());
    for (uint64_t i = 0; i < space.size(); ++i) out.push_back(space.at(i));
    return out;
}

}  // namespace magicdistill
