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

#include "magicdistill/maps.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace magicdistill {

namespace {

constexpr double kPi = std::numbers::pi;

double elementary(std::span<const double> f, int s) {
    // e[j] = sum over j-subsets, built one variable at a time.
    std::array<double, 6> e{1, 0, 0, 0, 0, 0};
    for (double v : f)
        for (int j = static_cast<int>(f.size()); j >= 1; --j) e[j] += e[j - 1] * v;
    return (s < 0 || s > static_cast<int>(f.size())) ? 0 : e[s];
}

std::array<double, 4> others(const FidelityTuple& t, int i) {
    if (i < 0 || i > 4) throw std::out_of_range("FidelityTuple index");
    std::array<double, 4> o{};
    for (int j = 0, k = 0; j < 5; ++j)
        if (j != i) o[k++] = t.f[j];
    return o;
}

}  // namespace

BlochVector parity_map(const BlochVector& b) {
    const double d = 1 + b.z * b.z;
    return {(b.x * b.x - b.y * b.y) / d, 2 * b.x * b.y / d, 2 * b.z / d};
}

double dual_round_map(double x) {
    const double x2 = x * x;
    return x2 * (3 + x2) / (1 + 2 * x2 + 2 * x2 * x2);
}

BlochVector pair_parity_map(const BlochVector& b) {
    const double d = 1 + b.z * b.z;
    return {(b.x * b.x + b.y * b.y) / d, 0, 2 * b.z / d};
}

AngleMix angle_align_mix(const BlochVector& b, int l) {
    if (l < 0 || l > 60) throw std::invalid_argument("angle_align_mix: l out of range");
    const double r = b.r();
    if (!(r + b.z > 1)) throw std::domain_error("angle_align_mix: r + z must exceed 1");
    const double phi = b.phi();
    const double unit = kPi / std::ldexp(1.0, l);
    // Mixing with (1,0,0) only pulls the longitude toward 0, so aim at the
    // nearest dyadic angle between 0 and phi.
    const double q = phi / unit;
    const int64_t k = static_cast<int64_t>(phi >= 0 ? std::floor(q + 1e-12) : std::ceil(q - 1e-12));
    const double theta = k * unit;
    AngleMix out;
    out.k = k;
    if (std::abs(phi - theta) <= 1e-15) {
        out.p = 0;
        out.mixed = b;
        return out;
    }
    const double a = r * std::sin(phi - theta);
    out.p = a / (a + std::sin(theta));
    if (k == 0) out.p = 1;
    out.mixed = b * (1 - out.p) + BlochVector{out.p, 0, 0};
    if (!(out.mixed.r() + out.mixed.z > 1))
        throw std::domain_error("angle_align_mix: no dyadic angle at this l keeps r + z > 1");
    return out;
}

std::string_view region_name(Region r) {
    switch (r) {
        case Region::thm1_codes: return "thm1_codes";
        case Region::thm1_T: return "thm1_T";
        case Region::thm2: return "thm2";
        case Region::thm3_cone: return "thm3_cone";
    }
    return "?";
}

std::optional<Region> parse_region(std::string_view name) {
    for (auto r : kAllRegions)
        if (region_name(r) == name) return r;
    return std::nullopt;
}

bool region_check(const BlochVector& b, Region r) {
    const double x = std::abs(b.x), y = std::abs(b.y), z = std::abs(b.z);
    const double pair = std::max({x + z, x + y, y + z});
    switch (r) {
        case Region::thm1_codes: return pair > 1.015;
        case Region::thm1_T: return x + y + z > 3 / std::sqrt(7.0);
        case Region::thm2: return pair > 1;
        case Region::thm3_cone:
            return std::max({x + std::hypot(y, z), y + std::hypot(x, z), z + std::hypot(x, y)}) > 1;
    }
    return false;
}

BlochVector symmetrize_t(const BlochVector& b) {
    const double m = (b.x + b.y + b.z) / 3;
    return {m, m, m};
}

FidelityTuple FidelityTuple::uniform(double f) { return FidelityTuple{{f, f, f, f, f}}; }

double FidelityTuple::sym(int s) const { return elementary(f, s); }

SymmetricStep five_qubit_symmetric_step(const FidelityTuple& t) {
    const double e3 = t.sym(3), e4 = t.sym(4), e5 = t.sym(5);
    return {(3 + e4) / 48, (e3 - 2 * e5) / (3 + e4)};
}

double monotonicity_numerator(const FidelityTuple& t, int i) {
    const auto o = others(t, i);
    double total = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            int c = -1, d = -1;
            for (int j = 0; j < 4; ++j)
                if (j != a && j != b) (c < 0 ? c : d) = j;
            const double fa = o[a], fb = o[b], fc = o[c], fd = o[d];
            total += fa * fb *
                     (3 - fa * fb * fc * fd - fc * fd - fa * fb * fc * fc * fd * fd / 3 -
                      fa * fb * (fc * fc + fd * fd) / 3);
        }
    return total;
}

double quotient_rule_numerator(const FidelityTuple& t, int i) {
    const auto o = others(t, i);
    const double a = t.sym(3) - 2 * t.sym(5), b = 3 + t.sym(4);
    const double da = elementary(o, 2) - 2 * elementary(o, 4), db = elementary(o, 3);
    return b * da - a * db;
}

BlochVector twisted_five_qubit_map(const BlochVector& v) {
    const double x = v.x, y = v.y, z = v.z;
    const double x2 = x * x, y2 = y * y, z2 = z * z;
    const double x3 = x2 * x, y3 = y2 * y, z3 = z2 * z;
    const double xyz = x * y * z;
    const double d = 1 + x2 * x2 + y2 * y2 + z2 * z2 + 4 * xyz * (x + y + z);
    return BlochVector{x3 - x2 * (y3 + z3) + y * z * (y + z + 2 * x - xyz),
                       -y3 + y2 * (x3 + z3) - x * z * (x + z + 2 * y - xyz),
                       z3 - z2 * (x3 + y3) + x * y * (x + y + 2 * z - xyz)} *
           (2 / d);
}

BlochVector diagonal_point() {
    const double s2 = std::sqrt(2.0), s7 = std::sqrt(7.0), s14 = std::sqrt(14.0);
    const double d = 7 * (2 - s2);
    const double x = (3 * s7 - 7) / d;
    return {x, x, (14 - 3 * s14) / d};
}

BlochMap positive_octant(BlochMap m) {
    return [m = std::move(m)](const BlochVector& b) {
        const auto o = m(b);
        return BlochVector{std::abs(o.x), std::abs(o.y), std::abs(o.z)};
    };
}

BlochMap hadamard_average(BlochMap m) {
    return [m = std::move(m)](const BlochVector& b) {
        const auto o = m(b);
        const double a = (o.x + o.z) / 2;
        return BlochVector{a, 0, a};
    };
}

BlochMap t_average(BlochMap m) {
    return [m = std::move(m)](const BlochVector& b) { return symmetrize_t(m(b)); };
}

Trajectory iterate(const BlochMap& m, const BlochVector& start, std::span<const Region> stop, int max_iters) {
    Trajectory t;
    t.points.push_back(start);
    auto check = [&](const BlochVector& b) -> std::optional<Region> {
        for (auto r : stop)
            if (region_check(b, r)) return r;
        return std::nullopt;
    };
    t.terminal = check(start);
    while (!t.terminal && t.iterations < max_iters) {
        t.points.push_back(m(t.points.back()));
        ++t.iterations;
        t.terminal = check(t.points.back());
    }
    return t;
}

std::string_view scheme_name(Scheme s) { return s == Scheme::parity ? "parity" : "twisted"; }

std::optional<Scheme> parse_scheme(std::string_view name) {
    if (name == "parity") return Scheme::parity;
    if (name == "twisted") return Scheme::twisted;
    return std::nullopt;
}

std::string_view plane_name(SweepPlane p) { return p == SweepPlane::x_eq_y ? "x_eq_y" : "y_eq_0"; }

std::optional<SweepPlane> parse_plane(std::string_view name) {
    if (name == "x_eq_y") return SweepPlane::x_eq_y;
    if (name == "y_eq_0") return SweepPlane::y_eq_0;
    return std::nullopt;
}

BlochMap scheme_map(Scheme s) {
    if (s == Scheme::twisted) return positive_octant(twisted_five_qubit_map);
    // Resymmetrize about x = z first, then one dual round.
    return [](const BlochVector& b) {
        const double a = (std::abs(b.x) + std::abs(b.z)) / 2;
        const double g = dual_round_map(a);
        return BlochVector{g, 0, g};
    };
}

std::vector<Region> scheme_stop(Scheme s) {
    if (s == Scheme::twisted) return {Region::thm1_T, Region::thm3_cone};
    return {Region::thm1_codes};
}

namespace {

BlochVector plane_point(SweepPlane p, double x, double z) {
    return p == SweepPlane::x_eq_y ? BlochVector{x, x, z} : BlochVector{x, 0, z};
}

double plane_z_max(SweepPlane p, double x) {
    const double r2 = p == SweepPlane::x_eq_y ? 2 * x * x : x * x;
    return r2 >= 1 ? 0 : std::sqrt(1 - r2);
}

double bisect_predicate(const std::function<bool(double)>& pred, double lo, double hi, double tol) {
    if (pred(lo)) return lo;
    if (!pred(hi)) return std::nan("");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (pred(mid) ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace

double scheme_boundary_z(Scheme s, SweepPlane p, double x, double tol, int max_iters) {
    const auto m = scheme_map(s);
    const auto stop = scheme_stop(s);
    return bisect_predicate(
        [&](double z) { return iterate(m, plane_point(p, x, z), stop, max_iters).terminal.has_value(); }, 0,
        plane_z_max(p, x), tol);
}

double known_boundary_z(double x, double tol) {
    return bisect_predicate(
        [&](double z) {
            const BlochVector b{x, x, z};
            return region_check(b, Region::thm1_T) || region_check(b, Region::thm3_cone);
        },
        0, plane_z_max(SweepPlane::x_eq_y, x), tol);
}

double red_curve_endpoint(double lo, double hi, double tol, double z_tol, double gap_tol) {
    auto improves = [&](double x) {
        return known_boundary_z(x, z_tol) - scheme_boundary_z(Scheme::twisted, SweepPlane::x_eq_y, x, z_tol) > gap_tol;
    };
    if (improves(lo) || !improves(hi)) throw std::domain_error("red_curve_endpoint: bracket does not straddle the endpoint");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (improves(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<SweepRow> sweep(const SweepOptions& o) {
    if (!(o.resolution >= 1e-4)) throw std::invalid_argument("sweep: resolution must be at least 1e-4");
    std::vector<SweepRow> rows;
    if (!(o.x_max > o.x_min)) return rows;
    const int count = static_cast<int>(std::floor((o.x_max - o.x_min) / o.resolution + 1e-9)) + 1;
    std::vector<std::optional<SweepRow>> slots(count);
    const auto m = scheme_map(o.scheme);
    const auto stop = scheme_stop(o.scheme);
    auto work = [&](int begin, int step) {
        for (int i = begin; i < count; i += step) {
            const double x = o.x_min + i * o.resolution;
            const double z = scheme_boundary_z(o.scheme, o.plane, x, o.tol, o.max_iters);
            if (std::isnan(z)) continue;
            const auto b = plane_point(o.plane, x, z);
            const auto t = iterate(m, b, stop, o.max_iters);
            slots[i] = SweepRow{b, t.iterations, t.terminal ? std::string(region_name(*t.terminal)) : "none"};
        }
    };
    const int w = std::max(1, std::min(o.workers, count));
    std::vector<std::thread> threads;
    for (int t = 1; t < w; ++t) threads.emplace_back(work, t, w);
    work(0, w);
    for (auto& th : threads) th.join();
    for (auto& s : slots)
        if (s) rows.push_back(*s);
    return rows;
}

WalkResult phase_injection_walk(double theta, int cap, uint64_t seed, bool correction) {
    if (cap < 1) throw std::invalid_argument("phase_injection_walk: cap must be at least 1");
    if (correction && std::abs(theta - kPi / 4) > 1e-12)
        throw std::invalid_argument("phase_injection_walk: the Y^(1/2) correction needs theta = pi/4");
    std::mt19937_64 rng(seed);
    WalkResult w;
    while (w.steps < cap) {
        const bool even = (rng() >> 63) == 0;
        ++w.steps;
        if (correction) {
            w.position = 1;
        } else {
            w.position += even ? 1 : -1;
        }
        if (w.position == 1) {
            w.success = true;
            break;
        }
    }
    return w;
}

double walk_success_probability(int cap) {
    if (cap < 1) throw std::invalid_argument("walk_success_probability: cap must be at least 1");
    // p[d] = probability of sitting d steps below +1 without having reached it.
    std::vector<double> p(cap + 2, 0.0);
    p[1] = 1;
    double hit = 0;
    for (int step = 0; step < cap; ++step) {
        std::vector<double> q(cap + 2, 0.0);
        for (int d = 1; d <= cap; ++d) {
            if (p[d] == 0) continue;
            if (d == 1) hit += 0.5 * p[d];
            else q[d - 1] += 0.5 * p[d];
            q[d + 1] += 0.5 * p[d];
        }
        p.swap(q);
    }
    return hit;
}

Root bisect_root(const std::function<double(double)>& g, double lo, double hi, double tol) {
    double glo = g(lo);
    const double ghi = g(hi);
    if (glo == 0) return {lo, lo, lo};
    if (ghi == 0) return {hi, hi, hi};
    if ((glo > 0) == (ghi > 0)) throw std::invalid_argument("bisect_root: no sign change on the bracket");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (gm == 0) return {mid, mid, mid};
        if ((gm > 0) == (glo > 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return {0.5 * (lo + hi), lo, hi};
}

}  // namespace magicdistill
