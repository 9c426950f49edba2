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

#include "magicdistill/search.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <thread>

#include "magicdistill/tables.h"

namespace magicdistill {

namespace {

constexpr int kMaxSearchQubits = 5;
constexpr int kMaxSigns = 1 << (kMaxSearchQubits - 1);

int leading_bit(uint32_t v) { return 31 - __builtin_clz(v); }

// In-place Walsh-Hadamard transform: a[t] <- sum_m (-1)^{|m & t|} a[m].
void wht(double* a, int len) {
    for (int h = 1; h < len; h <<= 1)
        for (int i = 0; i < len; i += h << 1)
            for (int j = i; j < i + h; ++j) {
                const double u = a[j], v = a[j + h];
                a[j] = u + v;
                a[j + h] = u - v;
            }
}

double pm(int phase) { return (phase & 3) == 0 ? 1.0 : -1.0; }

// Outputs of one subspace for every sign mask, written to out[0..2^k).
void kernel(const RealCoefficients& s, std::span<const uint32_t> basis, ReductionOutput<double>* out) {
    const int n = s.num_qubits();
    const int k = static_cast<int>(basis.size());
    const int len = 1 << k;
    std::array<uint32_t, kMaxSigns> u{};
    std::array<int, kMaxSigns> e{};
    for (int m = 1; m < len; ++m) {
        const int j = __builtin_ctz(m);
        const int prev = m & (m - 1);
        u[m] = u[prev] ^ basis[j];
        e[m] = (e[prev] + product_phase(n, u[prev], basis[j])) & 3;
    }
    // Canonical logicals: smallest normalizer elements outside the span.
    const auto comp = symplectic_complement(n, basis);
    auto in_span = [&](uint32_t v) {
        for (uint32_t r : basis)
            if (v >> leading_bit(r) & 1) v ^= r;
        return v == 0;
    };
    uint32_t lx = UINT32_MAX;
    std::array<uint32_t, 1 << (kMaxSearchQubits + 1)> logical{};
    int nl = 0;
    for (uint32_t m = 0; m < (uint32_t{1} << comp.size()); ++m) {
        uint32_t v = 0;
        for (size_t j = 0; j < comp.size(); ++j)
            if (m >> j & 1) v ^= comp[j];
        if (in_span(v)) continue;
        logical[nl++] = v;
        lx = std::min(lx, v);
    }
    uint32_t lz = UINT32_MAX;
    for (int i = 0; i < nl; ++i)
        if (symplectic_product(n, logical[i], lx)) lz = std::min(lz, logical[i]);
    const uint32_t ly = lx ^ lz;
    const int eta_y = 1 + product_phase(n, lx, lz);

    std::array<double, kMaxSigns> ai{}, ax{}, ay{}, az{};
    for (int m = 0; m < len; ++m) {
        ai[m] = pm(e[m]) * s[u[m]];
        ax[m] = pm(e[m] + product_phase(n, u[m], lx)) * s[u[m] ^ lx];
        ay[m] = pm(e[m] + eta_y + product_phase(n, u[m], ly)) * s[u[m] ^ ly];
        az[m] = pm(e[m] + product_phase(n, u[m], lz)) * s[u[m] ^ lz];
    }
    wht(ai.data(), len);
    wht(ax.data(), len);
    wht(ay.data(), len);
    wht(az.data(), len);
    for (int t = 0; t < len; ++t) out[t] = {ai[t], ax[t], ay[t], az[t]};
}

struct Best {
    int64_t index = -1;
    double value = 0;
    ReductionOutput<double> output;

    void offer(int64_t idx, double v, const ReductionOutput<double>& o) {
        if (index < 0 || v > value || (v == value && idx < index)) {
            index = idx;
            value = v;
            output = o;
        }
    }
};

struct Partial {
    Best best;
    uint64_t evaluated = 0;
    uint64_t degenerate = 0;
};

Partial scan(const RealCoefficients& s, const IsotropicSubspaces& subs, size_t lo, size_t hi, SearchObjective obj,
             double degenerate_tol) {
    Partial p;
    const int len = 1 << subs.dim();
    std::array<ReductionOutput<double>, kMaxSigns> outs;
    for (size_t i = lo; i < hi; ++i) {
        kernel(s, subs.basis(i), outs.data());
        for (int t = 0; t < len; ++t) {
            const auto& o = outs[t];
            if (o.c_i <= degenerate_tol) {
                ++p.degenerate;
                continue;
            }
            ++p.evaluated;
            const double v = objective_value(obj, bloch(o));
            p.best.offer(static_cast<int64_t>(i) * len + t, v, o);
        }
    }
    return p;
}

using nlohmann::json;

json to_json(const SearchResult& r, const std::string& hash, SearchObjective obj) {
    return json{{"version", 1},
                {"input_hash", hash},
                {"n", r.n},
                {"objective", objective_name(obj)},
                {"next_index", r.next_index},
                {"evaluated", r.evaluated},
                {"degenerate", r.degenerate},
                {"best_so_far",
                 {{"index", r.best_index},
                  {"value", r.best_value},
                  {"c", {r.best_output.c_i, r.best_output.c_x, r.best_output.c_y, r.best_output.c_z}}}}};
}

void write_checkpoint(const std::string& path, const json& j) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp);
        if (!f) throw std::runtime_error("cannot write checkpoint " + tmp);
        f << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

SearchResult read_checkpoint(const std::string& path, const std::string& hash, SearchObjective obj, int n,
                             uint64_t signs) {
    std::ifstream f(path);
    json j;
    try {
        f >> j;
        SearchResult r;
        if (j.at("version").get<int>() != 1) throw std::runtime_error("unknown version");
        if (j.at("input_hash").get<std::string>() != hash) throw std::runtime_error("input hash mismatch");
        if (j.at("objective").get<std::string>() != objective_name(obj)) throw std::runtime_error("objective mismatch");
        r.n = j.at("n").get<int>();
        if (r.n != n) throw std::runtime_error("qubit count mismatch");
        r.next_index = j.at("next_index").get<uint64_t>();
        if (r.next_index % signs != 0) throw std::runtime_error("next_index not on a subspace boundary");
        r.evaluated = j.at("evaluated").get<uint64_t>();
        r.degenerate = j.at("degenerate").get<uint64_t>();
        if (r.evaluated + r.degenerate != r.next_index) throw std::runtime_error("inconsistent counters");
        const auto& b = j.at("best_so_far");
        r.best_index = b.at("index").get<int64_t>();
        r.best_value = b.at("value").get<double>();
        const auto c = b.at("c").get<std::vector<double>>();
        if (c.size() != 4) throw std::runtime_error("bad best output");
        r.best_output = {c[0], c[1], c[2], c[3]};
        if (r.best_index >= static_cast<int64_t>(r.next_index)) throw std::runtime_error("best index beyond progress");
        return r;
    } catch (const std::exception& e) {
        throw std::runtime_error("refusing to resume from corrupt checkpoint " + path + ": " + e.what());
    }
}

}  // namespace

std::string_view objective_name(SearchObjective o) {
    switch (o) {
        case SearchObjective::sum_xz: return "sum_xz";
        case SearchObjective::t_fidelity: return "t_fidelity";
        case SearchObjective::escape_o1: return "escape_o1";
    }
    return "?";
}

std::optional<SearchObjective> parse_objective(std::string_view name) {
    for (auto o : {SearchObjective::sum_xz, SearchObjective::t_fidelity, SearchObjective::escape_o1})
        if (objective_name(o) == name) return o;
    return std::nullopt;
}

double objective_value(SearchObjective o, const BlochVector& b) {
    std::array<double, 3> a = {std::abs(b.x), std::abs(b.y), std::abs(b.z)};
    std::sort(a.begin(), a.end());
    switch (o) {
        case SearchObjective::sum_xz: return a[2] + a[1];
        case SearchObjective::t_fidelity: return 0.5 * (1 + (a[0] + a[1] + a[2]) / std::sqrt(3.0));
        case SearchObjective::escape_o1: return a[0] + a[1] + a[2] - 1;
    }
    return 0;
}

std::vector<ReductionOutput<double>> subspace_outputs(const RealCoefficients& s, std::span<const uint32_t> basis) {
    const int n = s.num_qubits();
    if (n < 2 || n > kMaxSearchQubits || static_cast<int>(basis.size()) != n - 1)
        throw std::invalid_argument("subspace_outputs: need n in [2, 5] and n-1 basis rows");
    std::vector<ReductionOutput<double>> out(size_t{1} << basis.size());
    kernel(s, basis, out.data());
    return out;
}

std::string search_input_hash(const RealCoefficients& s, std::string_view objective) {
    std::string buf = "n=" + std::to_string(s.num_qubits()) + ";objective=" + std::string(objective) + ";";
    for (double v : s.values()) {
        char b[sizeof(double)];
        std::memcpy(b, &v, sizeof b);
        buf.append(b, sizeof b);
    }
    return sha1_hex(buf);
}

SearchResult exhaustive_search(const RealCoefficients& s, SearchObjective objective, const SearchOptions& options) {
    const int n = s.num_qubits();
    if (n < 2 || n > kMaxSearchQubits) throw std::invalid_argument("exhaustive_search: n must be in [2, 5]");
    if (options.workers < 1) throw std::invalid_argument("exhaustive_search: workers must be positive");
    const ReductionSpace space(n);
    const auto& subs = space.subspaces();
    const uint64_t signs = uint64_t{1} << (n - 1);
    const std::string hash = search_input_hash(s, objective_name(objective));

    SearchResult res;
    res.n = n;
    if (!options.checkpoint_path.empty() && std::filesystem::exists(options.checkpoint_path))
        res = read_checkpoint(options.checkpoint_path, hash, objective, n, signs);

    Best best{res.best_index, res.best_value, res.best_output};
    const size_t per_round = std::max<uint64_t>(1, options.checkpoint_every / signs);
    uint64_t rounds = 0;
    size_t next = res.next_index / signs;
    while (next < subs.size()) {
        const size_t end = std::min(subs.size(), next + per_round);
        const size_t w = std::min<size_t>(options.workers, end - next);
        std::vector<Partial> parts(w);
        std::vector<std::thread> threads;
        const size_t chunk = (end - next + w - 1) / w;
        for (size_t t = 0; t < w; ++t) {
            const size_t lo = next + t * chunk, hi = std::min(end, lo + chunk);
            auto job = [&, t, lo, hi] { parts[t] = scan(s, subs, lo, hi, objective, options.degenerate_tol); };
            if (w == 1) job();
            else threads.emplace_back(job);
        }
        for (auto& th : threads) th.join();
        for (const auto& p : parts) {
            if (p.best.index >= 0) best.offer(p.best.index, p.best.value, p.best.output);
            res.evaluated += p.evaluated;
            res.degenerate += p.degenerate;
        }
        next = end;
        res.next_index = next * signs;
        res.best_index = best.index;
        res.best_value = best.value;
        res.best_output = best.output;
        if (!options.checkpoint_path.empty()) write_checkpoint(options.checkpoint_path, to_json(res, hash, objective));
        if (options.max_rounds && ++rounds >= options.max_rounds) break;
    }
    res.complete = next >= subs.size();
    if (res.complete && res.best_index < 0) throw std::runtime_error("exhaustive_search: every reduction is degenerate");
    return res;
}

SearchResult exhaustive_search(const RealCoefficients& s, const ObjectiveFn& objective, const SearchOptions& options) {
    const int n = s.num_qubits();
    if (n < 2 || n > kMaxSearchQubits) throw std::invalid_argument("exhaustive_search: n must be in [2, 5]");
    const ReductionSpace space(n);
    SearchResult res;
    res.n = n;
    Best best;
    for (uint64_t i = 0; i < space.size(); ++i) {
        const auto o = apply_reduction(s, space.at(i));
        if (o.c_i <= options.degenerate_tol) {
            ++res.degenerate;
            continue;
        }
        ++res.evaluated;
        best.offer(static_cast<int64_t>(i), objective(o), o);
    }
    if (best.index < 0) throw std::runtime_error("exhaustive_search: every reduction is degenerate");
    res.best_index = best.index;
    res.best_value = best.value;
    res.best_output = best.output;
    res.next_index = space.size();
    res.complete = true;
    return res;
}

}  // namespace magicdistill
