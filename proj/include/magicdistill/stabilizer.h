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


#ifndef MAGICDISTILL_STABILIZER_H
#define MAGICDISTILL_STABILIZER_H

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "magicdistill/pauli.h"

namespace magicdistill {

/// Group generated by independent, pairwise commuting, Hermitian Paulis.
/// With n-1 generators it describes a postselected n-to-1 reduction.
class StabilizerGroup {
   public:
    StabilizerGroup() = default;
    /// Throws std::invalid_argument unless the generators are Hermitian,
    /// pairwise commuting and independent (so -I is not generated).
    StabilizerGroup(int n, std::vector<PauliOperator> generators);
    static StabilizerGroup from_strings(const std::vector<std::string>& generators);

    int num_qubits() const { return n_; }
    int num_generators() const { return static_cast<int>(gens_.size()); }
    const std::vector<PauliOperator>& generators() const { return gens_; }
    uint64_t order() const { return uint64_t{1} << gens_.size(); }

    /// Element for subset mask m of the generators (bit j selects generator j).
    PauliOperator element(uint64_t mask) const;
    std::vector<PauliOperator> elements() const;
    /// +1 or -1 if the signed operator's unsigned part lies in the group
    /// (sign relative to the group element), 0 otherwise.
    int contains(uint32_t unsigned_index) const;
    int sign_of(uint32_t unsigned_index) const { return contains(unsigned_index); }

    std::string str() const;
    friend bool operator==(const StabilizerGroup&, const StabilizerGroup&) = default;

   private:
    int n_ = 0;
    std::vector<PauliOperator> gens_;
    // Reduced rows of the unsigned generators with the generator subset producing each.
    std::vector<std::pair<uint32_t, uint64_t>> rref_;
};

/// 2^n * prod_{k=1..n} (2^k + 1).
BigInt count_stabilizer_states(int n);
/// (2^n - 1) * count_stabilizer_states(n) / 6.
BigInt count_reductions(int n);

/// Flat list of k-dimensional isotropic subspaces of F_2^{2n}, each stored as
/// k rows in reduced row-echelon form (leading bit = highest set bit of the
/// Pauli index). Ordered by pivot set, then rows lexicographically.
class IsotropicSubspaces {
   public:
    IsotropicSubspaces(int n, int k);

    int num_qubits() const { return n_; }
    int dim() const { return k_; }
    size_t size() const { return k_ == 0 ? 1 : rows_.size() / k_; }
    std::span<const uint32_t> basis(size_t i) const { return {rows_.data() + i * k_, static_cast<size_t>(k_)}; }

   private:
    int n_;
    int k_;
    std::vector<uint32_t> rows_;
};

/// Reductions indexed as subspace * 2^(n-1) + sign_mask, where sign_mask bit
/// j flips generator j of the subspace basis. The order is canonical.
class ReductionSpace {
   public:
    explicit ReductionSpace(int n);

    int num_qubits() const { return n_; }
    uint64_t size() const { return static_cast<uint64_t>(subspaces_.size()) << (n_ - 1); }
    const IsotropicSubspaces& subspaces() const { return subspaces_; }
    StabilizerGroup at(uint64_t index) const;

   private:
    int n_;
    IsotropicSubspaces subspaces_;
};

/// Group with the given unsigned basis and sign mask.
StabilizerGroup group_from_basis(int n, std::span<const uint32_t> basis, uint64_t sign_mask);

/// All stabilizer states for n <= 3 as exact coefficient vectors.
std::vector<RationalCoefficients> enumerate_stabilizer_states(int n);
/// All n-to-1 reductions, materialized (n in [2, 4]; use ReductionSpace for 5).
std::vector<StabilizerGroup> enumerate_reductions(int n);

/// Rank of a set of symplectic vectors over F_2.
int gf2_rank(std::vector<uint32_t> rows);
/// Basis of {v in F_2^{2n} : v commutes with every row}.
std::vector<uint32_t> symplectic_complement(int n, std::span<const uint32_t> rows);

}  // namespace magicdistill

#endif  // MAGICDISTILL_STABILIZER_H
