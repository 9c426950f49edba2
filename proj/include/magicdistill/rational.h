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

#ifndef MAGICDISTILL_RATIONAL_H
#define MAGICDISTILL_RATIONAL_H

#include <gmpxx.h>

#include <string>

namespace magicdistill {

/// Exact rational scalar used for polytope and certificate work.
using Rational = mpq_class;
/// Arbitrary-precision integer used for combinatorial counts.
using BigInt = mpz_class;

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational rational_from_double(double v);

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace magicdistill

#endif  // MAGICDISTILL_RATIONAL_H
