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

// Command-line front end: reports, sweeps and searches.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "magicdistill/acceptance.h"
#include "magicdistill/clifford.h"
#include "magicdistill/maps.h"
#include "magicdistill/polytope.h"
#include "magicdistill/reductions.h"
#include "magicdistill/search.h"
#include "magicdistill/stabilizer.h"
#include "magicdistill/tables.h"
#include "magicdistill/thresholds.h"

#ifndef MAGICDISTILL_VERSION
#define MAGICDISTILL_VERSION "unknown"
#endif

using namespace magicdistill;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Configuration errors map to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string subcommand;
    double tol = 1e-10;
    int workers = 1;
    uint64_t seed = 20260101;
    std::string out;
    std::string checkpoint;
    std::vector<std::string> only;
    std::string tables;
    json extra = json::object();

    json to_json() const {
        json j = {{"subcommand", subcommand}, {"tol", tol},     {"workers", workers},
                  {"seed", seed},             {"out", out},     {"checkpoint", checkpoint},
                  {"only", only},             {"tables", tables.empty() ? "embedded" : tables}};
        for (const auto& [k, v] : extra.items()) j[k] = v;
        return j;
    }
};

const Tables& active_tables(const RunConfig& cfg) {
    static Tables loaded;
    if (cfg.tables.empty()) return embedded_tables();
    try {
        loaded = load_tables(cfg.tables);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    return loaded;
}

json report_header(const RunConfig& cfg, const Tables& t) {
    return {{"tool", "magicdistill"}, {"version", MAGICDISTILL_VERSION}, {"data_hash", data_hash(t)},
            {"config", cfg.to_json()}};
}

void emit(const RunConfig& cfg, const json& report) {
    if (cfg.out.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << report.dump(2) << "\n";
}

json bloch_json(const BlochVector& b) { return json::array({b.x, b.y, b.z}); }

json output_json(const ReductionOutput<Rational>& o) {
    return {{"c_i", to_string(o.c_i)}, {"c_x", to_string(o.c_x)}, {"c_y", to_string(o.c_y)}, {"c_z", to_string(o.c_z)}};
}

json output_json(const ReductionOutput<double>& o) {
    return {{"c_i", o.c_i}, {"c_x", o.c_x}, {"c_y", o.c_y}, {"c_z", o.c_z}};
}

json certificate_json(const MembershipCertificate& c) {
    if (const auto* out = std::get_if<Outside>(&c))
        return {{"kind", "outside"},
                {"halfspace", out->h.str()},
                {"value", to_string(out->value)},
                {"from_candidates", out->from_candidates}};
    json w = json::array();
    for (const auto& [v, weight] : std::get<Inside>(c).weights) w.push_back({{"vertex", v}, {"weight", to_string(weight)}});
    return {{"kind", "inside"}, {"weights", w}};
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const RunConfig& cfg) {
    const Tables& t = active_tables(cfg);
    AcceptanceOptions opts;
    opts.only = cfg.only;
    opts.workers = cfg.workers;
    opts.seed = cfg.seed;
    if (!cfg.checkpoint.empty()) {
        std::filesystem::create_directories(cfg.checkpoint);
        opts.checkpoint_dir = cfg.checkpoint;
    }
    opts.on_result = [](const CheckResult& r) {
        print_result(std::cout, r);
        std::cout.flush();
    };
    for (const auto& g : cfg.only)
        if (group_criterion(g) == 0) throw UsageError("unknown check group '" + g + "'");
    const auto results = run_acceptance(t, opts);
    bool all = true;
    json checks = json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        checks.push_back({{"criterion", r.criterion},
                          {"group", r.group},
                          {"name", r.name},
                          {"pass", r.pass},
                          {"detail", r.detail},
                          {"seconds", r.seconds}});
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << " (" << results.size() << " checks)\n";
    if (!cfg.out.empty()) {
        json report = report_header(cfg, t);
        report["checks"] = checks;
        report["pass"] = all;
        emit(cfg, report);
    }
    return all ? kExitOk : kExitCheckFailed;
}

// --- enumerate ------------------------------------------------------------

int cmd_enumerate(const RunConfig& cfg, int n, bool list) {
    if (n < 1 || n > 5) throw UsageError("--qubits must lie in [1, 5]");
    const Tables& t = active_tables(cfg);
    json report = report_header(cfg, t);
    report["qubits"] = n;
    report["stabilizer_states"] = count_stabilizer_states(n).get_str();
    if (n >= 2) report["reductions"] = count_reductions(n).get_str();
    if (list) {
        if (n <= 3) {
            json states = json::array();
            for (const auto& s : enumerate_stabilizer_states(n)) {
                json c = json::object();
                for (uint32_t i = 1; i < s.size(); ++i)
                    if (s[i] != 0) c[label_from_index(n, i)] = to_string(s[i]);
                states.push_back(c);
            }
            report["states"] = states;
        }
        if (n >= 2 && n <= 4) {
            json reds = json::array();
            for (const auto& r : enumerate_reductions(n)) reds.push_back(r.str());
            report["reduction_list"] = reds;
        }
    }
    emit(cfg, report);
    return kExitOk;
}

// --- polytope -------------------------------------------------------------

int cmd_polytope(const RunConfig& cfg) {
    const Tables& t = active_tables(cfg);
    json report = report_header(cfg, t);
    const auto& verts = stabilizer_vertices(2);
    bool ok = verts.size() == 60;
    json facets = json::array();
    for (const auto& h : t.facets) {
        const auto c = verify_halfspace(h, verts);
        ok = ok && c.max_value == 0 && c.tight_count >= 15;
        facets.push_back({{"halfspace", h.str()}, {"max_value", to_string(c.max_value)}, {"tight", c.tight_count}});
    }
    report["vertices"] = verts.size();
    report["facets"] = facets;
    try {
        const auto sizes = facet_orbit_census(t.facets, generate_clifford_group(2));
        size_t total = 0;
        for (auto s : sizes) total += s;
        report["orbit_sizes"] = sizes;
        report["orbit_total"] = total;
        ok = ok && total == 22320;
    } catch (const std::invalid_argument& e) {
        report["orbit_error"] = e.what();
        ok = false;
    }
    json members = json::array();
    for (const auto& ce : t.counterexamples) members.push_back(certificate_json(membership(ce.state, t.facets)));
    report["table_state_membership"] = members;
    report["pass"] = ok;
    emit(cfg, report);
    return ok ? kExitOk : kExitCheckFailed;
}

// --- counterexamples ------------------------------------------------------

std::pair<size_t, size_t> parse_pair(const std::string& text, size_t count) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--pair expects i,j");
    size_t i = 0, j = 0;
    try {
        i = std::stoul(text.substr(0, comma));
        j = std::stoul(text.substr(comma + 1));
    } catch (const std::exception&) {
        throw UsageError("--pair expects two integers, got '" + text + "'");
    }
    if (i < 1 || j < 1 || i > count || j > count) throw UsageError("--pair index out of range");
    return {i - 1, j - 1};
}

int cmd_counterexamples(const RunConfig& cfg, const std::vector<std::string>& pairs) {
    const Tables& t = active_tables(cfg);
    json report = report_header(cfg, t);
    json states = json::array();
    bool ok = true;
    for (size_t i = 0; i < t.counterexamples.size(); ++i) {
        const auto& s = t.counterexamples[i].state;
        json entry = {{"index", i + 1}, {"f", to_string(t.counterexamples[i].f)}};
        try {
            const auto rep = verify_counterexample(s);
            json reds = json::array();
            for (const auto& r : rep.reductions)
                reds.push_back({{"group", r.group.str()}, {"output", output_json(r.output)}, {"inside_o1", r.inside}});
            const auto st = check_structure(s);
            entry["valid_state"] = rep.valid_state;
            entry["certificate"] = certificate_json(rep.membership);
            entry["reductions"] = reds;
            entry["all_inside_o1"] = rep.all_inside;
            entry["structure"] = {{"no_two_commute", st.no_two_commute},
                                  {"products_anticommute", st.products_anticommute},
                                  {"three_commute_outside", st.three_commute_outside}};
            entry["pass"] = rep.passes();
            ok = ok && rep.passes();
        } catch (const std::exception& e) {
            entry["error"] = e.what();
            entry["pass"] = false;
            ok = false;
        }
        states.push_back(entry);
    }
    report["states"] = states;

    // Two different table states side by side: any 4-to-1 escape from O1?
    json pair_reports = json::array();
    for (const auto& p : pairs) {
        const auto [i, j] = parse_pair(p, t.counterexamples.size());
        SearchOptions so;
        so.workers = cfg.workers;
        const auto res = exhaustive_search(tensor(to_real(t.counterexamples[i].state), to_real(t.counterexamples[j].state)),
                                           SearchObjective::escape_o1, so);
        const bool escapes = res.best_value > cfg.tol;
        pair_reports.push_back({{"pair", {i + 1, j + 1}},
                                {"best_escape", res.best_value},
                                {"best_index", res.best_index},
                                {"best_group", ReductionSpace(4).at(res.best_index).str()},
                                {"evaluated", res.evaluated},
                                {"degenerate", res.degenerate},
                                {"escapes_o1", escapes}});
    }
    if (!pairs.empty()) report["pairs"] = pair_reports;
    report["pass"] = ok;
    emit(cfg, report);
    return ok ? kExitOk : kExitCheckFailed;
}

// --- sweep ----------------------------------------------------------------

int cmd_sweep(const RunConfig& cfg, const std::string& plane, const std::string& scheme, double resolution,
              double x_min, double x_max) {
    SweepOptions o;
    const auto p = parse_plane(plane);
    const auto s = parse_scheme(scheme);
    if (!p) throw UsageError("unknown plane '" + plane + "'");
    if (!s) throw UsageError("unknown scheme '" + scheme + "'");
    if (resolution < 1e-4) throw UsageError("--resolution must be at least 1e-4");
    o.plane = *p;
    o.scheme = *s;
    o.resolution = resolution;
    o.x_min = x_min;
    o.x_max = x_max;
    o.tol = std::max(cfg.tol, 1e-12);
    o.workers = cfg.workers;
    const auto rows = sweep(o);

    std::ostringstream csv;
    csv << "x,y,z,iterations,terminal\n" << std::setprecision(12);
    for (const auto& r : rows) csv << r.b.x << "," << r.b.y << "," << r.b.z << "," << r.iterations << "," << r.terminal << "\n";
    if (cfg.out.empty()) {
        std::cout << csv.str();
        return kExitOk;
    }
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << csv.str();
    json meta = report_header(cfg, active_tables(cfg));
    meta["rows"] = rows.size();
    std::ofstream m(cfg.out + ".meta.json");
    if (!m) throw UsageError("cannot write " + cfg.out + ".meta.json");
    m << meta.dump(2) << "\n";
    return kExitOk;
}

// --- search ---------------------------------------------------------------

// Single-copy base states: t:<f>, xz:<x>, bloch:<x>,<y>,<z>, table:<i>.
RealCoefficients parse_base_state(const std::string& spec, const Tables& t) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw UsageError("--state expects kind:value, got '" + spec + "'");
    const std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
    std::vector<double> v;
    try {
        std::stringstream ss(arg);
        std::string item;
        while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
    } catch (const std::exception&) {
        throw UsageError("cannot parse --state value '" + arg + "'");
    }
    if (kind == "t" && v.size() == 1) {
        const double c = v[0] / std::sqrt(3.0);
        return bloch_coefficients({c, c, c});
    }
    if (kind == "xz" && v.size() == 1) return bloch_coefficients({v[0], 0, v[0]});
    if (kind == "bloch" && v.size() == 3) return bloch_coefficients({v[0], v[1], v[2]});
    if (kind == "table" && v.size() == 1) {
        const auto i = static_cast<size_t>(v[0]);
        if (i < 1 || i > t.counterexamples.size()) throw UsageError("table index out of range");
        return to_real(t.counterexamples[i - 1].state);
    }
    throw UsageError("unknown --state '" + spec + "'");
}

int cmd_search(const RunConfig& cfg, int copies, const std::string& state, const std::string& objective,
               uint64_t max_rounds, uint64_t checkpoint_every) {
    const Tables& t = active_tables(cfg);
    const auto obj = parse_objective(objective);
    if (!obj) throw UsageError("unknown objective '" + objective + "'");
    const auto base = parse_base_state(state, t);
    if (copies < 1 || copies * base.num_qubits() > 5 || copies * base.num_qubits() < 2)
        throw UsageError("copies x qubits per state must lie in [2, 5]");
    const auto s = tensor_power(base, copies);
    SearchOptions so;
    so.workers = cfg.workers;
    so.checkpoint_path = cfg.checkpoint;
    so.max_rounds = max_rounds;
    so.checkpoint_every = checkpoint_every;
    SearchResult res;
    try {
        res = exhaustive_search(s, *obj, so);
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
    json report = report_header(cfg, t);
    report["input_hash"] = search_input_hash(s, objective_name(*obj));
    report["qubits"] = res.n;
    report["objective"] = objective_name(*obj);
    report["complete"] = res.complete;
    report["next_index"] = res.next_index;
    report["evaluated"] = res.evaluated;
    report["degenerate"] = res.degenerate;
    report["total"] = ReductionSpace(res.n).size();
    if (res.best_index >= 0) {
        report["best_index"] = res.best_index;
        report["best_value"] = res.best_value;
        report["best_group"] = ReductionSpace(res.n).at(res.best_index).str();
        report["best_output"] = output_json(res.best_output);
        report["best_bloch"] = bloch_json(bloch(res.best_output));
    }
    emit(cfg, report);
    return kExitOk;
}

// --- thresholds -----------------------------------------------------------

int cmd_thresholds(const RunConfig& cfg, const std::vector<double>& eps_values) {
    const Tables& t = active_tables(cfg);
    json report = report_header(cfg, t);
    const double tol = std::max(cfg.tol, 1e-14);
    const auto dep = threshold_search(NoiseKind::depolarizing, Criterion::jamiolkowski_parity, tol);
    report["depolarizing"] = {{"found", dep.value},
                              {"expected", depolarizing_threshold()},
                              {"error", std::abs(dep.value - depolarizing_threshold())},
                              {"monotone", dep.monotone}};
    json outs = json::array();
    for (double eps : eps_values) {
        const auto c = pi8_parity_output(eps), p = pi8_parity_pipeline(eps), pub = pi8_parity_output_published(eps);
        outs.push_back({{"eps", eps},
                        {"closed_form", bloch_json(c)},
                        {"pipeline", bloch_json(p)},
                        {"printed_formula", bloch_json(pub)},
                        {"closed_form_abs_x_plus_abs_y", std::abs(c.x) + std::abs(c.y)}});
    }
    report["parity_outputs"] = outs;
    json direct = json::object();
    for (auto k : {NoiseKind::depolarizing, NoiseKind::dephasing, NoiseKind::worst_case}) {
        const auto r = threshold_search(k, Criterion::direct_plus, tol);
        direct[std::string(noise_name(k))] = {{"threshold", r.value}, {"monotone", r.monotone}};
    }
    report["direct_plus"] = direct;
    report["reference_constants"] = {{"sqrt2_minus_1_over_2sqrt2", (std::numbers::sqrt2 - 1) / (2 * std::numbers::sqrt2)},
                                 {"one_over_sqrt2_times_one_minus_one_over_sqrt2",
                                  (1 - 1 / std::numbers::sqrt2) / std::numbers::sqrt2}};
    emit(cfg, report);
    return kExitOk;
}

// --- fixedpoint -----------------------------------------------------------

int cmd_fixedpoint(const RunConfig& cfg, int walk_samples, int walk_cap) {
    const Tables& t = active_tables(cfg);
    json report = report_header(cfg, t);
    const double tol = std::max(cfg.tol, 1e-15);
    const Root sym = bisect_root(
        [](double f) { return five_qubit_symmetric_step(FidelityTuple::uniform(f)).f_out - f; }, 0.5, 0.9, tol);
    report["symmetric_step_fixed_point"] = {{"found", sym.value}, {"expected", std::sqrt(3.0 / 7.0)}};
    const Root dual = bisect_root([](double x) { return dual_round_map(x) - x; }, 0.55, 0.9, tol);
    report["dual_round_gain_region"] = {{"lower", 0.5}, {"upper", dual.value}};

    const auto start = diagonal_point() * kDiagonalScale;
    const auto stop = scheme_stop(Scheme::twisted);
    const auto traj = iterate(scheme_map(Scheme::twisted), start, stop, 200);
    json pts = json::array();
    for (const auto& p : traj.points) pts.push_back(bloch_json(p));
    report["diagonal_trajectory"] = {{"start", bloch_json(start)},
                                     {"points", pts},
                                     {"iterations", traj.iterations},
                                     {"terminal", traj.terminal ? std::string(region_name(*traj.terminal)) : ""}};
    report["red_curve_endpoint"] = red_curve_endpoint();

    if (walk_samples > 0) {
        int hits = 0;
        for (int i = 0; i < walk_samples; ++i) hits += phase_injection_walk(std::numbers::pi / 8, walk_cap, cfg.seed + i).success;
        report["walk"] = {{"cap", walk_cap},
                          {"samples", walk_samples},
                          {"empirical_success", double(hits) / walk_samples},
                          {"exact_success", walk_success_probability(walk_cap)}};
    }
    emit(cfg, report);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stabilizer reduction and magic-state distillation toolkit"};
    app.set_version_flag("--version", MAGICDISTILL_VERSION);
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--tol", cfg.tol, "Numerical tolerance")->check(CLI::PositiveNumber);
    app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1, 256));
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--out", cfg.out, "Output path (stdout if omitted)");
    app.add_option("--checkpoint", cfg.checkpoint, "Checkpoint file (search) or directory (verify)");
    app.add_option("--only", cfg.only, "Check groups to run (verify)")->delimiter(',');
    app.add_option("--tables", cfg.tables, "Alternative tables file");

    auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
    int qubits = 2;
    bool list = false;
    auto* enumerate = app.add_subcommand("enumerate", "Count stabilizer states and reductions");
    enumerate->add_option("--qubits", qubits, "Number of qubits")->required();
    enumerate->add_flag("--list", list, "Also list states (n <= 3) and reductions (n <= 4)");
    auto* polytope = app.add_subcommand("polytope", "Facet checks and orbit census of the two-qubit polytope");
    std::vector<std::string> pairs;
    auto* counter = app.add_subcommand("counterexamples", "Certificates and reductions for the tabulated states");
    counter->add_option("--pair", pairs, "Search two different tabulated states i,j (1-based)");

    std::string plane = "x_eq_y", scheme = "twisted";
    double resolution = 0.01, x_min = 0.0, x_max = 0.5;
    auto* sw = app.add_subcommand("sweep", "Boundary of the distillable region in a plane");
    sw->add_option("--plane", plane, "x_eq_y or y_eq_0");
    sw->add_option("--scheme", scheme, "twisted or parity");
    sw->add_option("--resolution", resolution, "Grid spacing in x");
    sw->add_option("--x-min", x_min);
    sw->add_option("--x-max", x_max);

    int copies = 5;
    std::string state = "t:0.8", objective = "t_fidelity";
    uint64_t max_rounds = 0, checkpoint_every = 1'000'000;
    auto* search = app.add_subcommand("search", "Exhaustive n-to-1 reduction search");
    search->add_option("--copies", copies, "Copies of the base state");
    search->add_option("--state", state, "t:<f>, xz:<x>, bloch:<x>,<y>,<z> or table:<i>");
    search->add_option("--objective", objective, "sum_xz, t_fidelity or escape_o1");
    search->add_option("--max-rounds", max_rounds, "Stop after this many checkpoint rounds");
    search->add_option("--checkpoint-every", checkpoint_every, "Reductions per checkpoint round")
        ->check(CLI::PositiveNumber);

    std::vector<double> eps_values = {0.0, 1e-3};
    auto* thr = app.add_subcommand("thresholds", "Noise thresholds for the pi/8 gate");
    thr->add_option("--eps", eps_values, "Offsets below the depolarizing threshold");

    int walk_samples = 0, walk_cap = 20;
    auto* fp = app.add_subcommand("fixedpoint", "Fixed points, the diagonal trajectory and the red-curve endpoint");
    fp->add_option("--walk-samples", walk_samples, "Monte Carlo samples of the phase walk");
    fp->add_option("--walk-cap", walk_cap, "Attempt cap of the phase walk")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        cfg.subcommand = app.get_subcommands().front()->get_name();
        if (verify->parsed()) return cmd_verify(cfg);
        if (enumerate->parsed()) {
            cfg.extra = {{"qubits", qubits}, {"list", list}};
            return cmd_enumerate(cfg, qubits, list);
        }
        if (polytope->parsed()) return cmd_polytope(cfg);
        if (counter->parsed()) {
            cfg.extra = {{"pairs", pairs}};
            return cmd_counterexamples(cfg, pairs);
        }
        if (sw->parsed()) {
            cfg.extra = {{"plane", plane}, {"scheme", scheme}, {"resolution", resolution}, {"x_min", x_min},
                         {"x_max", x_max}};
            return cmd_sweep(cfg, plane, scheme, resolution, x_min, x_max);
        }
        if (search->parsed()) {
            cfg.extra = {{"copies", copies}, {"state", state}, {"objective", objective}, {"max_rounds", max_rounds},
                         {"checkpoint_every", checkpoint_every}};
            return cmd_search(cfg, copies, state, objective, max_rounds, checkpoint_every);
        }
        if (thr->parsed()) {
            cfg.extra = {{"eps", eps_values}};
            return cmd_thresholds(cfg, eps_values);
        }
        if (fp->parsed()) {
            cfg.extra = {{"walk_samples", walk_samples}, {"walk_cap", walk_cap}};
            return cmd_fixedpoint(cfg, walk_samples, walk_cap);
        }
    } catch (const UsageError& e) {
        std::cerr << "magicdistill: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "magicdistill: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "magicdistill: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
