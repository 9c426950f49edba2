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

#include "magicdistill/acceptance.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "magicdistill/clifford.h"
#include "magicdistill/density.h"
#include "magicdistill/maps.h"
#include "magicdistill/oracle.h"
#include "magicdistill/polytope.h"
#include "magicdistill/reductions.h"
#include "magicdistill/search.h"
#include "magicdistill/stabilizer.h"
#include "magicdistill/thresholds.h"

namespace magicdistill {

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v, int digits = 15) {
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

std::array<double, 3> sorted_abs(const BlochVector& b) {
    std::array<double, 3> a = {std::abs(b.x), std::abs(b.y), std::abs(b.z)};
    std::sort(a.begin(), a.end());
    return a;
}

double top_two(const BlochVector& b) {
    const auto a = sorted_abs(b);
    return a[1] + a[2];
}

double abs_distance(const BlochVector& a, const BlochVector& b) {
    const auto p = sorted_abs(a), q = sorted_abs(b);
    double d = 0;
    for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(p[i] - q[i]));
    return d;
}

double distance(const BlochVector& a, const BlochVector& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

class Runner {
   public:
    Runner(const Tables& t, const AcceptanceOptions& o) : tables(t), options(o), rng(o.seed) {}

    void check(int criterion, const std::string& group, const std::string& name, const std::function<Outcome()>& fn) {
        CheckResult r;
        r.criterion = criterion;
        r.group = group;
        r.name = name;
        const auto start = std::chrono::steady_clock::now();
        try {
            const Outcome o = fn();
            r.pass = o.pass;
            r.detail = o.detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (options.on_result) options.on_result(r);
        results.push_back(std::move(r));
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

    BlochVector random_bloch() {
        while (true) {
            BlochVector b{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
            if (b.norm() <= 1) return b;
        }
    }

    RealCoefficients random_two_qubit_state() {
        std::normal_distribution<double> g;
        ComplexMatrix a(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a(i, j) = {g(rng), g(rng)};
        ComplexMatrix rho = a * a.adjoint();
        rho /= rho.trace();
        rho = (rho + rho.adjoint()) / 2.0;
        return coeffs_from_density(DensityMatrix(2, rho));
    }

    const Tables& tables;
    const AcceptanceOptions& options;
    std::mt19937_64 rng;
    std::vector<CheckResult> results;
};

// Criterion 1.
void group_counting(Runner& r) {
    const std::string g = "counting";
    r.check(1, g, "stabilizer_state_counts", [] {
        const std::vector<long> expected = {6, 60, 1080, 36720, 2423520};
        std::string d;
        bool ok = true;
        for (int n = 1; n <= 5; ++n) {
            const BigInt c = count_stabilizer_states(n);
            ok = ok && c == expected[n - 1];
            d += (n > 1 ? " " : "") + c.get_str();
        }
        return Outcome{ok, "counts " + d};
    });
    r.check(1, g, "stabilizer_state_enumeration", [] {
        bool ok = true;
        std::string d;
        for (int n = 1; n <= 3; ++n) {
            const auto states = enumerate_stabilizer_states(n);
            std::set<std::vector<Rational>> distinct;
            for (const auto& s : states) distinct.emplace(s.values().begin(), s.values().end());
            ok = ok && BigInt(states.size()) == count_stabilizer_states(n) && distinct.size() == states.size();
            if (n <= 2)
                for (const auto& s : states) ok = ok && is_valid_state(s);
            d += (n > 1 ? " " : "") + std::to_string(distinct.size());
        }
        return Outcome{ok, "distinct states " + d};
    });
    r.check(1, g, "reduction_counts", [] {
        bool ok = count_reductions(2) == 30;
        std::string d;
        for (int n = 2; n <= 4; ++n) {
            const auto reds = enumerate_reductions(n);
            std::set<std::string> distinct;
            for (const auto& red : reds) {
                std::vector<std::string> els;
                for (const auto& e : red.elements()) els.push_back(e.str());
                std::sort(els.begin(), els.end());
                std::string key;
                for (const auto& s : els) key += s + ",";
                distinct.insert(key);
            }
            ok = ok && BigInt(reds.size()) == count_reductions(n) && distinct.size() == reds.size();
            d += " n=" + std::to_string(n) + ":" + std::to_string(distinct.size());
        }
        const uint64_t five = ReductionSpace(5).size();
        ok = ok && BigInt(std::to_string(five)) == count_reductions(5) && five == 12'521'520;
        return Outcome{ok, "reductions" + d + " n=5:" + std::to_string(five)};
    });
}

// Criterion 2.
void group_polytope(Runner& r) {
    const std::string g = "polytope";
    const auto& t = r.tables;
    r.check(2, g, "vertex_count", [] {
        const auto n = stabilizer_vertices(2).size();
        return Outcome{n == 60, std::to_string(n) + " vertices"};
    });
    for (size_t i = 0; i < t.facets.size(); ++i) {
        r.check(2, g, "facet_" + std::to_string(i + 1), [&t, i] {
            const auto c = verify_halfspace(t.facets[i], stabilizer_vertices(2));
            return Outcome{c.max_value == 0 && c.tight_count >= 15,
                           "max " + to_string(c.max_value) + ", tight " + std::to_string(c.tight_count)};
        });
    }
    r.check(2, g, "facet_count", [&t] {
        return Outcome{t.facets.size() == 8, std::to_string(t.facets.size()) + " facets"};
    });
    r.check(2, g, "row1_on_state1", [&t] {
        const Rational v = t.facets.at(0).evaluate(t.counterexamples.at(0).state);
        return Outcome{v == Rational(1, 6), "value " + to_string(v)};
    });
    r.check(2, g, "row_j_violated_by_state_j", [&t] {
        bool ok = t.counterexamples.size() == 7 && t.facets.size() >= 7;
        std::string d;
        for (size_t j = 0; ok && j < 7; ++j) {
            const Rational v = t.facets[j].evaluate(t.counterexamples[j].state);
            ok = ok && v > 0;
            d += (j ? " " : "") + to_string(v);
        }
        return Outcome{ok, "values " + d};
    });
}

// Criterion 3.
void group_counterexamples(Runner& r) {
    const std::string g = "counterexamples";
    const auto& t = r.tables;
    r.check(3, g, "state_count", [&t] {
        return Outcome{t.counterexamples.size() == 7, std::to_string(t.counterexamples.size()) + " states"};
    });
    for (size_t i = 0; i < t.counterexamples.size(); ++i) {
        r.check(3, g, "state_" + std::to_string(i + 1), [&t, i] {
            const auto& s = t.counterexamples[i].state;
            // No candidates: the outside certificate comes from the LP.
            const auto rep = verify_counterexample(s);
            const bool recheck = verify_certificate(s, stabilizer_vertices(2), rep.membership);
            int inside = 0;
            for (const auto& red : rep.reductions) inside += red.inside;
            std::string d = std::string(rep.valid_state ? "valid" : "invalid") + ", " +
                            (rep.outside ? "outside" : "inside") + ", " + std::to_string(inside) + "/" +
                            std::to_string(rep.reductions.size()) + " reductions in O1";
            if (rep.outside) d += ", violation " + to_string(std::get<Outside>(rep.membership).h.evaluate(s));
            return Outcome{rep.passes() && recheck && rep.reductions.size() == 30, d};
        });
    }
    r.check(3, g, "state1_zz_reduction", [&t] {
        const auto& s = t.counterexamples.at(0).state;
        const auto o = apply_reduction(s, StabilizerGroup::from_strings({"+ZZ"}));
        const Rational third(1, 3);
        bool ok = o.c_i != 0;
        if (ok) {
            std::vector<Rational> mags = {abs(o.c_x / o.c_i), abs(o.c_y / o.c_i), abs(o.c_z / o.c_i)};
            for (const auto& m : mags) ok = ok && m == third;
        }
        const Rational lhs = s.at("II") + s.at("ZZ");
        const Rational rhs = abs(s.at("IZ") + s.at("ZI")) + abs(s.at("XX") - s.at("YY")) + abs(s.at("XY") + s.at("YX"));
        ok = ok && lhs == Rational(1, 4) && rhs == Rational(1, 4);
        return Outcome{ok, "c_I' " + to_string(o.c_i) + ", coords " + to_string(o.c_x) + " " + to_string(o.c_y) +
                               " " + to_string(o.c_z) + ", comparison " + to_string(lhs) + " vs " + to_string(rhs)};
    });
}

// Criterion 4.
void group_structure(Runner& r) {
    const std::string g = "structure";
    const auto& t = r.tables;
    r.check(4, g, "state1_properties", [&t] {
        const auto rep = check_structure(t.counterexamples.at(0).state);
        return Outcome{rep.all(), std::string("no_two_commute=") + (rep.no_two_commute ? "1" : "0") +
                                      " products_anticommute=" + (rep.products_anticommute ? "1" : "0") +
                                      " three_commute_outside=" + (rep.three_commute_outside ? "1" : "0") +
                                      " support=" + std::to_string(rep.support.size())};
    });
    r.check(4, g, "state2_not_all", [&t] {
        const auto rep = check_structure(t.counterexamples.at(1).state);
        return Outcome{!rep.all(), std::string("all properties hold: ") + (rep.all() ? "yes" : "no")};
    });
}

// Criterion 5.
void group_facet_census(Runner& r) {
    const std::string g = "facet_census";
    const auto& t = r.tables;
    r.check(5, g, "clifford_group_size", [] {
        const auto n1 = generate_clifford_group(1).size(), n2 = generate_clifford_group(2).size();
        return Outcome{n1 == 24 && n2 == 11520, std::to_string(n1) + " and " + std::to_string(n2)};
    });
    r.check(5, g, "orbit_sizes", [&t] {
        const auto sizes = facet_orbit_census(t.facets, generate_clifford_group(2));
        size_t total = 0;
        std::string d;
        for (auto s : sizes) {
            total += s;
            d += (d.empty() ? "" : "+") + std::to_string(s);
        }
        return Outcome{total == 22320 && sizes.size() == 8, d + " = " + std::to_string(total)};
    });
}

// Criterion 6.
void group_fixed_points(Runner& r) {
    const std::string g = "fixed_points";
    r.check(6, g, "symmetric_step_fixed_point", [] {
        const double target = std::sqrt(3.0 / 7.0);
        const auto step = [](double f) { return five_qubit_symmetric_step(FidelityTuple::uniform(f)).f_out - f; };
        const Root root = bisect_root(step, 0.5, 0.9, 1e-15);
        const double residual = std::abs(step(target));
        const double err = std::abs(root.value - target);
        return Outcome{err <= 1e-12 && residual <= 1e-12,
                       "root " + fmt(root.value) + ", |root - sqrt(3/7)| " + fmt(err, 3) + ", residual " + fmt(residual, 3)};
    });
    r.check(6, g, "dual_round_lower_endpoint", [] {
        // Exact evaluation at 1/2 and strict sign change around it.
        const Rational x(1, 2), x2 = x * x;
        const Rational mapped = x2 * (3 + x2) / (1 + 2 * x2 + 2 * x2 * x2);
        const bool exact = mapped == x && dual_round_map(0.5) == 0.5;
        const bool below = dual_round_map(0.5 - 1e-6) < 0.5 - 1e-6, above = dual_round_map(0.5 + 1e-6) > 0.5 + 1e-6;
        return Outcome{exact && below && above, "map(1/2) = " + to_string(mapped)};
    });
    r.check(6, g, "dual_round_upper_root", [] {
        const Root root = bisect_root([](double x) { return dual_round_map(x) - x; }, 0.55, 0.9, 1e-10);
        return Outcome{root.value > 0.67 && root.value < 0.69 && root.hi - root.lo <= 1e-10, "root " + fmt(root.value, 12)};
    });
}

// Criterion 7.
void group_oracle(Runner& r) {
    const std::string g = "oracle";
    constexpr int kSamples = 100;
    constexpr double kTol = 1e-10;
    r.check(7, g, "parity_map", [&r] {
        double worst = 0;
        for (int i = 0; i < kSamples; ++i) {
            const auto b = r.random_bloch();
            worst = std::max(worst, distance(parity_map(b), oracle_parity(b)));
        }
        return Outcome{worst <= kTol, "max deviation " + fmt(worst, 3)};
    });
    r.check(7, g, "dual_round_map", [&r] {
        double worst = 0;
        for (int i = 0; i < kSamples; ++i) {
            const double x = r.uniform(0, 1);
            const auto o = oracle_dual_round(x);
            worst = std::max({worst, std::abs((o.x + o.z) / 2 - dual_round_map(x)), std::abs(o.y)});
        }
        return Outcome{worst <= kTol, "max deviation " + fmt(worst, 3)};
    });
    r.check(7, g, "pair_parity_map", [&r] {
        double worst = 0;
        for (int i = 0; i < kSamples; ++i) {
            const auto b = r.random_bloch();
            worst = std::max(worst, distance(pair_parity_map(b), oracle_pair_parity(b)));
        }
        return Outcome{worst <= kTol, "max deviation " + fmt(worst, 3)};
    });
    r.check(7, g, "five_qubit_symmetric_step", [&r] {
        double worst = 0, worst_p = 0;
        for (int i = 0; i < kSamples; ++i) {
            FidelityTuple t;
            std::array<BlochVector, 5> in;
            for (int k = 0; k < 5; ++k) {
                t.f[k] = r.uniform(0, 1);
                const double c = t.f[k] / std::sqrt(3.0);
                in[k] = {c, c, c};
            }
            const auto closed = five_qubit_symmetric_step(t);
            const auto dense = oracle_code_distill(in, {0, 0, 0, 0, 0});
            const double c = closed.f_out / std::sqrt(3.0);
            worst = std::max(worst, abs_distance(dense.out, {c, c, c}));
            worst_p = std::max(worst_p, std::abs(dense.p_success - closed.p_success));
        }
        return Outcome{worst <= kTol && worst_p <= kTol,
                       "max deviation " + fmt(worst, 3) + ", p_success deviation " + fmt(worst_p, 3)};
    });
    r.check(7, g, "twisted_five_qubit_map", [&r] {
        double worst = 0;
        for (int i = 0; i < kSamples; ++i) {
            const auto b = r.random_bloch();
            const auto dense = oracle_code_distill({b, b, b, b, b}, kTwistAssignment).out;
            const std::array<double, 3> v = {dense.x, dense.y, dense.z};
            double rot[3] = {0, 0, 0};
            for (int a = 0; a < 3; ++a)
                for (int c = 0; c < 3; ++c) rot[a] += kTwistRotation[a][c] * v[c];
            worst = std::max(worst, distance(twisted_five_qubit_map(b), {rot[0], rot[1], rot[2]}));
        }
        return Outcome{worst <= kTol, "max deviation " + fmt(worst, 3)};
    });
    r.check(7, g, "pi8_parity_output", [&r] {
        double worst = 0, worst_pipe = 0;
        const double thr = depolarizing_threshold();
        for (int i = 0; i < kSamples; ++i) {
            const double eps = r.uniform(thr - 1, thr);
            worst = std::max(worst, distance(pi8_parity_output(eps), oracle_pi8_parity(eps)));
            worst_pipe = std::max(worst_pipe, abs_distance(pi8_parity_output(eps), pi8_parity_pipeline(eps)));
        }
        return Outcome{worst <= kTol && worst_pipe <= kTol,
                       "max deviation " + fmt(worst, 3) + ", reduction pipeline " + fmt(worst_pipe, 3)};
    });
    r.check(7, g, "two_qubit_reductions", [&r] {
        const auto reds = enumerate_reductions(2);
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
            const auto s = r.random_two_qubit_state();
            for (const auto& red : reds) {
                const auto fast = apply_reduction(s, red);
                const auto dense = oracle_reduction(s, red);
                worst = std::max(worst, std::abs(fast.c_i - dense.c_i));
                worst = std::max(worst, abs_distance({fast.c_x, fast.c_y, fast.c_z}, {dense.c_x, dense.c_y, dense.c_z}));
            }
        }
        return Outcome{worst <= 1e-12, "max deviation " + fmt(worst, 3)};
    });
}

// Criterion 7, data half: the tabulated code reproduces the symmetric step.
void group_code_table(Runner& r) {
    const std::string g = "code_table";
    const auto& t = r.tables;
    r.check(7, g, "tabulated_five_qubit_code", [&r, &t] {
        double worst = 0, worst_p = 0;
        for (int i = 0; i < 20; ++i) {
            FidelityTuple ft;
            std::vector<DensityMatrix> in;
            for (int k = 0; k < 5; ++k) {
                ft.f[k] = r.uniform(0, 1);
                const double c = ft.f[k] / std::sqrt(3.0);
                in.push_back(DensityMatrix::from_bloch({c, c, c}));
            }
            const auto res = run_protocol(in, {DecodeStep{t.five_qubit_code, t.logical_x, t.logical_z}});
            const auto closed = five_qubit_symmetric_step(ft);
            const double c = closed.f_out / std::sqrt(3.0);
            worst = std::max(worst, abs_distance(bloch_of(res.state), {c, c, c}));
            worst_p = std::max(worst_p, std::abs(res.success_probability - closed.p_success));
        }
        return Outcome{worst <= 1e-10 && worst_p <= 1e-10,
                       "max deviation " + fmt(worst, 3) + ", p_success deviation " + fmt(worst_p, 3)};
    });
}

// Criterion 8.
void group_monotonicity(Runner& r) {
    const std::string g = "monotonicity";
    constexpr int kSamples = 10000;
    std::vector<FidelityTuple> samples(kSamples);
    for (auto& t : samples)
        for (auto& f : t.f) f = r.uniform(0, 1);
    r.check(8, g, "finite_difference", [&samples] {
        constexpr double h = 1e-6;
        double worst = 1e300;
        for (const auto& t : samples)
            for (int i = 0; i < 5; ++i) {
                FidelityTuple up = t, down = t;
                up.f[i] += h;
                down.f[i] -= h;
                const double d =
                    (five_qubit_symmetric_step(up).f_out - five_qubit_symmetric_step(down).f_out) / (2 * h);
                worst = std::min(worst, d);
            }
        return Outcome{worst >= -1e-9, "min derivative " + fmt(worst, 6)};
    });
    r.check(8, g, "numerator_nonnegative", [&samples] {
        double worst = 1e300, mismatch = 0;
        for (const auto& t : samples)
            for (int i = 0; i < 5; ++i) {
                const double n = monotonicity_numerator(t, i);
                worst = std::min(worst, n);
                mismatch = std::max(mismatch, std::abs(n - quotient_rule_numerator(t, i)));
            }
        return Outcome{worst >= 0 && mismatch <= 1e-12,
                       "min numerator " + fmt(worst, 6) + ", max mismatch with quotient rule " + fmt(mismatch, 3)};
    });
}

// Criterion 9.
void group_thresholds(Runner& r) {
    const std::string g = "thresholds";
    r.check(9, g, "depolarizing_threshold", [] {
        const auto res = threshold_search(NoiseKind::depolarizing, Criterion::jamiolkowski_parity);
        const double err = std::abs(res.value - depolarizing_threshold());
        return Outcome{err <= 1e-9 && res.monotone,
                       "found " + fmt(res.value) + ", expected " + fmt(depolarizing_threshold()) + ", error " + fmt(err, 3)};
    });
    r.check(9, g, "boundary_at_eps_0", [] {
        // The pipeline's logical frame differs by a single-qubit Clifford.
        const auto b = pi8_parity_output(0), pub = pi8_parity_output_published(0);
        const double e1 = std::abs(std::abs(b.x) + std::abs(b.y) - 1);
        const double e2 = std::abs(top_two(pi8_parity_pipeline(0)) - 1);
        return Outcome{e1 <= 1e-13 && e2 <= 1e-13,
                       "closed form |x|+|y|-1 = " + fmt(e1, 3) + ", pipeline " + fmt(e2, 3) +
                           "; printed formula gives |x|+|y| = " + fmt(std::abs(pub.x) + std::abs(pub.y), 10)};
    });
    r.check(9, g, "outside_at_eps_1e-3", [] {
        const auto b = pi8_parity_output(1e-3), p = pi8_parity_pipeline(1e-3);
        const double s1 = std::abs(b.x) + std::abs(b.y), s2 = top_two(p);
        return Outcome{s1 > 1 && s2 > 1, "|x|+|y| = " + fmt(s1) + " (pipeline " + fmt(s2) + ")"};
    });
    r.check(9, g, "worst_case_constant", [] {
        const double a = (std::numbers::sqrt2 - 1) / (2 * std::numbers::sqrt2);
        const double b = (1 - 1 / std::numbers::sqrt2) / std::numbers::sqrt2;
        const auto wc = threshold_search(NoiseKind::worst_case, Criterion::direct_plus);
        const auto dp = threshold_search(NoiseKind::dephasing, Criterion::direct_plus);
        const bool match_a = std::abs(wc.value - a) <= 1e-9, match_b = std::abs(wc.value - b) <= 1e-9;
        std::string d = "worst case " + fmt(wc.value, 12) + " matches " +
                        (match_a ? "(sqrt2-1)/(2 sqrt2)" : match_b ? "(1/sqrt2)(1-1/sqrt2)" : "neither constant") +
                        "; dephasing flip probability " + fmt(dp.value, 12) + " (full-dephasing rate " +
                        fmt(2 * dp.value, 12) + "); other constant " + fmt(match_a ? b : a, 12) + " not reproduced";
        return Outcome{(match_a || match_b) && std::abs(dp.value - wc.value) <= 1e-9, d};
    });
}

// Criterion 10.
void group_trajectory(Runner& r) {
    const std::string g = "trajectory";
    r.check(10, g, "diagonal_point_equalities", [] {
        const auto p = diagonal_point();
        const double e1 = std::abs(2 * p.x + p.z - 3 / std::sqrt(7.0));
        const double e2 = std::abs(std::numbers::sqrt2 * p.x + p.z - 1);
        return Outcome{e1 <= 1e-12 && e2 <= 1e-12 && p.x == p.y,
                       "x " + fmt(p.x) + ", z " + fmt(p.z) + ", residuals " + fmt(e1, 3) + " " + fmt(e2, 3)};
    });
    r.check(10, g, "scaled_point_converges", [] {
        const auto start = diagonal_point() * kDiagonalScale;
        const auto stop = scheme_stop(Scheme::twisted);
        const auto t = iterate(scheme_map(Scheme::twisted), start, stop, 200);
        return Outcome{t.terminal.has_value(),
                       "iterations " + std::to_string(t.iterations) + ", region " +
                           (t.terminal ? std::string(region_name(*t.terminal)) : "none")};
    });
    r.check(10, g, "red_curve_endpoint", [] {
        const double x = red_curve_endpoint();
        return Outcome{std::abs(x - 0.1956) <= 5e-4, "endpoint " + fmt(x, 8)};
    });
}

// Criterion 10, data half.
void group_diagonal_table(Runner& r) {
    const std::string g = "diagonal_table";
    const auto& t = r.tables;
    r.check(10, g, "tabulated_point", [&t] {
        const double den = t.d_const + t.d_sqrt2 * std::sqrt(2.0);
        const double x = (t.x_sqrt7 * std::sqrt(7.0) + t.x_const) / den;
        const double z = (t.z_sqrt14 * std::sqrt(14.0) + t.z_const) / den;
        const auto p = diagonal_point();
        // The quoted decimals are rounded, not truncated.
        auto prefix = [](double v) {
            std::ostringstream os;
            os << std::fixed << std::setprecision(4) << v;
            return os.str();
        };
        const bool ok = std::abs(x - p.x) <= 1e-12 && std::abs(z - p.z) <= 1e-12 && prefix(x) == t.diagonal_x_prefix &&
                        prefix(z) == t.diagonal_z_prefix && std::abs(t.diagonal_scale.get_d() - kDiagonalScale) <= 1e-15;
        return Outcome{ok, "x " + fmt(x) + ", z " + fmt(z) + ", scale " + to_string(t.diagonal_scale)};
    });
}

// Best x' + z' over trees of parity checks on copies of rho(x, 0, x).
double parity_tree_optimum(double x, int copies) {
    using XZ = std::pair<double, double>;
    auto variants = [](XZ v) {
        std::vector<XZ> out;
        for (int sx : {1, -1})
            for (int sz : {1, -1}) {
                out.push_back({sx * v.first, sz * v.second});
                out.push_back({sz * v.second, sx * v.first});
            }
        return out;
    };
    auto canon = [](XZ v) {
        const double a = std::abs(v.first), b = std::abs(v.second);
        return XZ{std::max(a, b), std::min(a, b)};
    };
    std::vector<std::set<XZ>> level(copies + 1);
    level[1].insert({x, x});
    for (int k = 2; k <= copies; ++k)
        for (int i = 1; i + i <= k; ++i)
            for (const auto& a : level[i])
                for (const auto& b : level[k - i])
                    for (const auto& va : variants(a))
                        for (const auto& vb : variants(b)) {
                            const double d = 1 + va.second * vb.second;
                            if (d <= 1e-15) continue;
                            level[k].insert(canon({va.first * vb.first / d, (va.second + vb.second) / d}));
                        }
    double best = 0;
    for (int k = 1; k <= copies; ++k)
        for (const auto& v : level[k]) best = std::max(best, v.first + v.second);
    return best;
}

std::string checkpoint_file(const AcceptanceOptions& o, const std::string& name) {
    return o.checkpoint_dir.empty() ? "" : o.checkpoint_dir + "/" + name + ".json";
}

// Criterion 11.
void group_search(Runner& r) {
    const std::string g = "search";
    const int workers = r.options.workers;
    for (int k : {3, 4}) {
        r.check(11, g, "parity_optimum_" + std::to_string(k) + "_to_1", [k, workers] {
            const double x = 0.501;
            const auto s = tensor_power(bloch_coefficients({x, 0, x}), k);
            SearchOptions so;
            so.workers = workers;
            const auto res = exhaustive_search(s, SearchObjective::sum_xz, so);
            const double tree = parity_tree_optimum(x, k);
            return Outcome{std::abs(res.best_value - tree) <= 1e-12,
                           "search " + fmt(res.best_value) + " at index " + std::to_string(res.best_index) +
                               ", parity schemes " + fmt(tree) + ", evaluated " + std::to_string(res.evaluated)};
        });
    }
    const auto& t = r.tables;
    r.check(11, g, "two_copy_no_escape", [&t, workers] {
        bool ok = true;
        double worst = -1e300;
        std::string d;
        for (size_t i = 0; i < t.counterexamples.size(); ++i) {
            const auto one = to_real(t.counterexamples[i].state);
            SearchOptions so;
            so.workers = workers;
            const auto res = exhaustive_search(tensor(one, one), SearchObjective::escape_o1, so);
            ok = ok && res.best_value <= 1e-12 && res.evaluated + res.degenerate == 91800;
            worst = std::max(worst, res.best_value);
        }
        return Outcome{ok, "largest |x|+|y|+|z|-1 " + fmt(worst, 6) + " over 7 x 91800 reductions"};
    });
    r.check(11, g, "five_to_one_code_optimum", [&r, workers] {
        const double f = 0.8, c = f / std::sqrt(3.0);
        const auto s = tensor_power(bloch_coefficients({c, c, c}), 5);
        SearchOptions so;
        so.workers = workers;
        so.checkpoint_path = checkpoint_file(r.options, "search_5_to_1");
        const auto res = exhaustive_search(s, SearchObjective::t_fidelity, so);
        const double code = 0.5 * (1 + std::abs(five_qubit_symmetric_step(FidelityTuple::uniform(f)).f_out));
        const bool ok = res.complete && res.evaluated + res.degenerate == 12'521'520 &&
                        std::abs(res.best_value - code) <= 1e-10;
        return Outcome{ok, "best fidelity " + fmt(res.best_value) + " at index " + std::to_string(res.best_index) +
                               ", five-qubit code " + fmt(code) + ", input fidelity " +
                               fmt(0.5 * (1 + f)) + ", evaluated " + std::to_string(res.evaluated)};
    });
}

// Criterion 12.
void group_data(Runner& r) {
    const auto& t = r.tables;
    r.check(12, "data", "data_checksum", [&t] {
        const auto h = data_hash(t);
        return Outcome{h == kExpectedDataHash, "hash " + h + ", expected " + kExpectedDataHash};
    });
}

void group_negative_controls(Runner& r) {
    const auto& t = r.tables;
    const int workers = r.options.workers;
    r.check(12, "negative_controls", "sign_corruptions_detected", [&t, workers] {
        const auto outcomes = negative_controls(t, workers);
        size_t named = 0, math = 0;
        for (const auto& o : outcomes) {
            const bool checksum =
                std::any_of(o.failed_checks.begin(), o.failed_checks.end(), [](const std::string& c) {
                    return c == "data/data_checksum" || c.starts_with("parse:");
                });
            named += checksum;
            math += o.failed_checks.size() > (checksum ? 1u : 0u);
        }
        return Outcome{!outcomes.empty() && named == outcomes.size(),
                       std::to_string(outcomes.size()) + " corruptions, " + std::to_string(named) +
                           " named by the checksum, " + std::to_string(math) + " also caught by mathematical checks"};
    });
}

using GroupFn = void (*)(Runner&);
const std::vector<std::pair<std::string, GroupFn>>& registry() {
    static const std::vector<std::pair<std::string, GroupFn>> r = {
        {"counting", group_counting},       {"polytope", group_polytope},
        {"counterexamples", group_counterexamples}, {"structure", group_structure},
        {"facet_census", group_facet_census}, {"fixed_points", group_fixed_points},
        {"oracle", group_oracle},           {"code_table", group_code_table},
        {"monotonicity", group_monotonicity}, {"thresholds", group_thresholds},
        {"trajectory", group_trajectory},   {"diagonal_table", group_diagonal_table},
        {"search", group_search},           {"data", group_data},
        {"negative_controls", group_negative_controls},
    };
    return r;
}

// Negates one nonzero entry (or sign prefix) of the JSON document per call.
std::vector<std::pair<std::string, std::string>> corrupted_documents(const std::string& text) {
    using nlohmann::json;
    const json doc = json::parse(text);
    std::vector<std::pair<std::string, std::string>> out;
    auto flip_number = [](json& v) {
        if (v.is_number_integer() && v.get<long>() != 0) {
            v = -v.get<long>();
            return true;
        }
        return false;
    };
    auto flip_prefix = [](json& v) {
        auto s = v.get<std::string>();
        if (!s.empty() && s[0] == '+') s[0] = '-';
        else if (!s.empty() && s[0] == '-') s[0] = '+';
        else s = "-" + s;
        v = s;
    };
    for (size_t i = 0; i < doc.at("counterexamples").size(); ++i)
        for (const auto& [label, v] : doc["counterexamples"][i]["coords"].items()) {
            json c = doc;
            if (flip_number(c["counterexamples"][i]["coords"][label]))
                out.emplace_back("counterexamples[" + std::to_string(i + 1) + "]." + label, c.dump());
        }
    for (size_t i = 0; i < doc.at("facets").size(); ++i)
        for (const auto& [label, v] : doc["facets"][i].items()) {
            json c = doc;
            if (flip_number(c["facets"][i][label]))
                out.emplace_back("facets[" + std::to_string(i + 1) + "]." + label, c.dump());
        }
    for (size_t i = 0; i < doc.at("five_qubit_code").at("generators").size(); ++i) {
        json c = doc;
        flip_prefix(c["five_qubit_code"]["generators"][i]);
        out.emplace_back("five_qubit_code.generators[" + std::to_string(i + 1) + "]", c.dump());
    }
    for (const char* key : {"logical_x", "logical_z"}) {
        json c = doc;
        flip_prefix(c["five_qubit_code"][key]);
        out.emplace_back(std::string("five_qubit_code.") + key, c.dump());
    }
    for (const char* part : {"x_numerator", "z_numerator", "denominator"})
        for (const auto& [key, v] : doc["diagonal_point"][part].items()) {
            json c = doc;
            if (flip_number(c["diagonal_point"][part][key]))
                out.emplace_back(std::string("diagonal_point.") + part + "." + key, c.dump());
        }
    return out;
}

}  // namespace

const std::vector<std::string>& check_groups() {
    static const std::vector<std::string> g = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) v.push_back(name);
        return v;
    }();
    return g;
}

int group_criterion(const std::string& group) {
    static const std::map<std::string, int> m = {
        {"counting", 1},     {"polytope", 2},   {"counterexamples", 3}, {"structure", 4},
        {"facet_census", 5}, {"fixed_points", 6}, {"oracle", 7},        {"code_table", 7},
        {"monotonicity", 8}, {"thresholds", 9}, {"trajectory", 10},     {"diagonal_table", 10},
        {"search", 11},      {"data", 12},      {"negative_controls", 12},
    };
    const auto it = m.find(group);
    return it == m.end() ? 0 : it->second;
}

const std::vector<std::string>& table_groups() {
    static const std::vector<std::string> g = {"data",      "polytope",   "counterexamples",
                                               "structure", "code_table", "diagonal_table"};
    return g;
}

std::vector<CheckResult> run_acceptance(const Tables& tables, const AcceptanceOptions& options) {
    for (const auto& name : options.only)
        if (group_criterion(name) == 0) throw std::invalid_argument("unknown check group: " + name);
    Runner r(tables, options);
    for (const auto& [name, fn] : registry()) {
        if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), name) == options.only.end())
            continue;
        fn(r);
    }
    return std::move(r.results);
}

std::vector<CorruptionOutcome> negative_controls(const Tables& tables, int workers) {
    std::vector<CorruptionOutcome> out;
    for (const auto& [where, text] : corrupted_documents(tables.canonical_json)) {
        CorruptionOutcome o;
        o.location = where;
        try {
            const Tables bad = parse_tables(text);
            AcceptanceOptions opts;
            opts.only = table_groups();
            opts.workers = workers;
            for (const auto& res : run_acceptance(bad, opts))
                if (!res.pass) o.failed_checks.push_back(res.group + "/" + res.name);
        } catch (const std::exception& e) {
            o.failed_checks.push_back(std::string("parse: ") + e.what());
        }
        out.push_back(std::move(o));
    }
    return out;
}

void print_result(std::ostream& os, const CheckResult& r) {
    os << (r.pass ? "PASS" : "FAIL") << "  [" << r.criterion << "] " << r.group << "/" << r.name;
    if (!r.detail.empty()) os << ": " << r.detail;
    os << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)" << std::defaultfloat << "\n";
}

}  // namespace magicdistill
