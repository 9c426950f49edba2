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


#ifndef MAGICDISTILL_TABLES_H
#define MAGICDISTILL_TABLES_H

#include <string>
#include <string_view>
#include <vector>

#include "magicdistill/polytope.h"
#include "magicdistill/stabilizer.h"

namespace magicdistill {

struct Counterexample {
    Rational f;
    RationalCoefficients state;
};

/// Reference data: the seven counterexample states, the eight facet
/// representatives, the five-qubit code and the scaled diagonal point.
struct Tables {
    std::vector<Counterexample> counterexamples;
    std::vector<Halfspace> facets;
    StabilizerGroup five_qubit_code;
    PauliOperator logical_x;
    PauliOperator logical_z;
    Rational diagonal_scale;
    std::string diagonal_x_prefix;
    std::string diagonal_z_prefix;
    /// Closed-form numerators and denominator of the diagonal point.
    int x_sqrt7 = 0, x_const = 0, z_sqrt14 = 0, z_const = 0, d_const = 0, d_sqrt2 = 0;
    /// Canonical JSON text the tables were parsed from.
    std::string canonical_json;
};

/// Parses the JSON document. Throws std::invalid_argument on malformed data.
Tables parse_tables(const std::string& json_text);
Tables load_tables(const std::string& path);
/// Tables compiled into the library.
const Tables& embedded_tables();
const std::string& embedded_tables_json();

/// Git-style blob hash (sha1 of "blob <len>\0" + canonical JSON).
std::string data_hash(const Tables& t);
/// Expected hash of the unmodified embedded data.
extern const char* const kExpectedDataHash;

/// Lowercase hex SHA-1 digest.
std::string sha1_hex(std::string_view data);

/// Counterexample state coefficients as a 2-qubit vector.
RationalCoefficients counterexample_state(const Tables& t, size_t i);

}  // namespace magicdistill

#endif  // MAGICDISTILL_TABLES_H
