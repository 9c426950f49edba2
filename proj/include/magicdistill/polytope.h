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


#ifndef MAGICDISTILL_POLYTOPE_H
#define MAGICDISTILL_POLYTOPE_H

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "magicdistill/clifford.h"
#include "magicdistill/pauli.h"

namespace magicdistill {

/// sum_P coeffs_P c_P(s) <= 0, over all 4^n labels including the identity.
struct Halfspace {
    int n = 0;
    std::vector<Rational> coeffs;

    static Halfspace from_labels(int n, const std::map<std::string, Rational>& entries);
    Rational evaluate(const RationalCoefficients& s) const;
    double evaluate(const RealCoefficients& s) const;
    bool is_zero() const;
    std::string str() const;
    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

Halfspace apply_clifford(const CliffordElement& c, const Halfspace& h);

struct Inside {
    /// (vertex index, weight) pairs with positive weight.
    std::vector<std::pair<size_t, Rational>> weights;
};
struct Outside {
    Halfspace h;
    /// h evaluated at the query; strictly positive.
    Rational value;
    /// True when h came from the caller's candidate list.
    bool from_candidates = false;
};
using MembershipCertificate = std::variant<Inside, Outside>;

inline bool is_inside(const MembershipCertificate& c) { return std::holds_alternative<Inside>(c); }

/// Vertices of O_n (cached; n <= 3).
const std::vector<RationalCoefficients>& stabilizer_vertices(int n);

/// Exact certificate for s against the stabilizer polytope. Candidate facets
/// are tried first; the first one violated by s and valid on every vertex is
/// returned. Otherwise the LP decides. The certificate is re-verified before
/// return. Throws std::invalid_argument if s is not a valid state.
MembershipCertificate membership(const RationalCoefficients& s, std::span<const Halfspace> candidates = {});
MembershipCertificate membership(const RationalCoefficients& s, const std::vector<RationalCoefficients>& vertices,
                                 std::span<const Halfspace> candidates = {});

/// Exact re-check of a certificate.
bool verify_certificate(const RationalCoefficients& s, const std::vector<RationalCoefficients>& vertices,
                        const MembershipCertificate& cert);

struct HalfspaceCheck {
    Rational max_value;
    int tight_count = 0;
};
HalfspaceCheck verify_halfspace(const Halfspace& h, const std::vector<RationalCoefficients>& vertices);

/// All distinct images of h under the group.
std::vector<Halfspace> facet_orbit(const Halfspace& h, const std::vector<CliffordElement>& group);

/// Orbit sizes of the representatives. Throws std::invalid_argument if two
/// representatives lie in the same orbit.
std::vector<size_t> facet_orbit_census(const std::vector<Halfspace>& representatives,
                                       const std::vector<CliffordElement>& group);

}  // namespace magicdistill

#endif  // MAGICDISTILL_POLYTOPE_H
