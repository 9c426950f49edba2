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


#ifndef MAGICDISTILL_MAPS_H
#define MAGICDISTILL_MAPS_H

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "magicdistill/pauli.h"

namespace magicdistill {

/// One postselected parity check on two copies:
/// (x, y, z) -> (x^2 - y^2, 2xy, 2z) / (1 + z^2).
BlochVector parity_map(const BlochVector& b);

/// Parity check, dual-basis parity check on two outputs, then averaging over
/// x <-> z: x -> x^2 (3 + x^2) / (1 + 2x^2 + 2x^4).
double dual_round_map(double x);

/// Parity check on rho(x,y,z) (x) rho(x,-y,z): y is removed,
/// (x, y, z) -> (x^2 + y^2, 0, 2z) / (1 + z^2).
BlochVector pair_parity_map(const BlochVector& b);

struct AngleMix {
    double p = 0;
    BlochVector mixed;
    /// mixed has longitude k * pi / 2^l.
    int64_t k = 0;
};
/// Mixes b with |+> so that its longitude becomes a dyadic multiple of pi
/// while r + z > 1 survives. Throws std::domain_error if r + z <= 1 or if the
/// nearest dyadic angle at this l costs too much.
AngleMix angle_align_mix(const BlochVector& b, int l);

enum class Region {
    /// max pairwise |a| + |b| > 1.015
    thm1_codes,
    /// |x| + |y| + |z| > 3/sqrt 7
    thm1_T,
    /// max pairwise |a| + |b| > 1
    thm2,
    /// max{|x| + sqrt(y^2 + z^2), ...} > 1
    thm3_cone,
};
inline constexpr std::array<Region, 4> kAllRegions = {Region::thm1_codes, Region::thm1_T, Region::thm2,
                                                      Region::thm3_cone};
std::string_view region_name(Region r);
std::optional<Region> parse_region(std::string_view name);
bool region_check(const BlochVector& b, Region r);

/// Average over {I, T, T^2}: ((x + y + z) / 3) (1, 1, 1).
BlochVector symmetrize_t(const BlochVector& b);

/// Fidelity parameters f_i of the five inputs rho(f_i (1,1,1)/sqrt 3).
struct FidelityTuple {
    std::array<double, 5> f{};

    static FidelityTuple uniform(double f);
    /// Elementary symmetric sum [f]^s.
    double sym(int s) const;
};

struct SymmetricStep {
    double p_success = 0;
    double f_out = 0;
};
/// Five-qubit code projection: p = (3 + [f]^4) / 48,
/// f_out = ([f]^3 - 2 [f]^5) / (3 + [f]^4) after rotating back to the
/// positive octant.
SymmetricStep five_qubit_symmetric_step(const FidelityTuple& t);

/// Numerator of d f_out / d f_i written as the sum over pairs {a, b} of the
/// other four inputs (c, d the remaining two) of
/// f_a f_b (3 - f_a f_b f_c f_d - f_c f_d - f_a f_b f_c^2 f_d^2 / 3 - f_a f_b (f_c^2 + f_d^2) / 3).
double monotonicity_numerator(const FidelityTuple& t, int i);
/// Quotient-rule numerator b da/df_i - a db/df_i of f_out = a / b.
double quotient_rule_numerator(const FidelityTuple& t, int i);

/// Five-qubit code with T applied to two copies, closed form.
BlochVector twisted_five_qubit_map(const BlochVector& b);

/// Unscaled point on the x = y diagonal where 2x + z = 3/sqrt 7 and
/// x sqrt 2 + z = 1.
BlochVector diagonal_point();
inline constexpr double kDiagonalScale = 0.9895;

using BlochMap = std::function<BlochVector(const BlochVector&)>;

/// Map decorators applied after each step.
/// Coordinate absolute values (a Clifford rotation into the positive octant).
BlochMap positive_octant(BlochMap m);
/// Hadamard with probability 1/2: x and z averaged.
BlochMap hadamard_average(BlochMap m);
/// I, T or T^2 with probability 1/3 each.
BlochMap t_average(BlochMap m);

struct Trajectory {
    std::vector<BlochVector> points;
    int iterations = 0;
    /// First stop region satisfied by the final point, if any.
    std::optional<Region> terminal;
};

/// Applies m until one of the stop regions holds or max_iters steps ran.
Trajectory iterate(const BlochMap& m, const BlochVector& start, std::span<const Region> stop, int max_iters = 200);

enum class Scheme {
    /// Hadamard-averaged dual-round parity scheme, stops in thm1_codes.
    parity,
    /// Twisted five-qubit map into the positive octant, stops in thm1_T or thm3_cone.
    twisted,
};
enum class SweepPlane { x_eq_y, y_eq_0 };

std::string_view scheme_name(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);
std::string_view plane_name(SweepPlane p);
std::optional<SweepPlane> parse_plane(std::string_view name);

BlochMap scheme_map(Scheme s);
std::vector<Region> scheme_stop(Scheme s);

struct SweepOptions {
    SweepPlane plane = SweepPlane::x_eq_y;
    Scheme scheme = Scheme::twisted;
    double x_min = 0.0;
    double x_max = 0.5;
    double resolution = 0.01;
    double tol = 1e-4;
    int max_iters = 200;
    int workers = 1;
};

/// One boundary point per grid value of x: the smallest z (to tol) from which
/// the scheme reaches its stop region.
struct SweepRow {
    BlochVector b;
    int iterations = 0;
    std::string terminal;
};
std::vector<SweepRow> sweep(const SweepOptions& o);

/// Smallest z in the plane at abscissa x from which the scheme converges.
double scheme_boundary_z(Scheme s, SweepPlane p, double x, double tol, int max_iters = 200);
/// Smallest z on the x = y diagonal in thm1_T or thm3_cone.
double known_boundary_z(double x, double tol);

/// Smallest x on the x = y diagonal where the twisted scheme beats the known
/// regions by more than gap_tol, bracketed in [lo, hi].
double red_curve_endpoint(double lo = 0.15, double hi = 0.25, double tol = 1e-7, double z_tol = 1e-11,
                          double gap_tol = 1e-8);

struct WalkResult {
    bool success = false;
    int steps = 0;
    /// Final accumulated phase in units of theta.
    int64_t position = 0;
};
/// Random walk on multiples of theta: each attempt adds +1 (even parity) or
/// -1 (odd parity) with probability 1/2, ending at +1 or after cap attempts.
/// For theta = pi/4 with correction the odd branch is repaired by Y^(1/2).
WalkResult phase_injection_walk(double theta, int cap, uint64_t seed, bool correction = false);
/// Exact probability that the walk reaches +1 within cap attempts.
double walk_success_probability(int cap);

/// Bisection for a root of g on [lo, hi] with g(lo), g(hi) of opposite sign.
struct Root {
    double value = 0;
    double lo = 0;
    double hi = 0;
};
Root bisect_root(const std::function<double(double)>& g, double lo, double hi, double tol = 1e-12);

}  // namespace magicdistill

#endif  // MAGICDISTILL_MAPS_H
