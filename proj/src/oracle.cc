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

#include "magicdistill/oracle.h"

#include <cmath>
#include <complex>
#include <deque>
#include <map>
#include <numbers>
#include <stdexcept>

#include "magicdistill/clifford.h"
#include "magicdistill/thresholds.h"

namespace magicdistill {

namespace {

using cd = std::complex<double>;

constexpr double kZeroProbability = 1e-14;

double expectation(const ComplexMatrix& rho, const PauliOperator& p) {
    return (dense_pauli(p) * rho).trace().real();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Two-copy parity check decoded with X_L = XX, Z_L = ZI.
BlochVector parity_decode(const DensityMatrix& a, const DensityMatrix& b, const char* check = "+ZZ",
                          const char* lx = "XX", const char* lz = "ZI") {
    const auto res = run_protocol({a, b}, {DecodeStep{StabilizerGroup::from_strings({check}),
                                                      PauliOperator::from_string(lx),
                                                      PauliOperator::from_string(lz)}});
    if (res.zero_probability) throw std::domain_error("parity check has zero success probability");
    return bloch_of(res.state);
}

}  // namespace

ComplexMatrix group_projector(const StabilizerGroup& g) {
    const Eigen::Index d = Eigen::Index{1} << g.num_qubits();
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    for (const auto& e : g.elements()) p += dense_pauli(e);
    return p / double(g.order());
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& kept) {
    const int n = rho.num_qubits();
    std::vector<int> traced;
    std::vector<bool> used(n, false);
    for (int q : kept) {
        if (q < 0 || q >= n || used[q]) throw std::invalid_argument("partial_trace: bad qubit list");
        used[q] = true;
    }
    for (int q = 0; q < n; ++q)
        if (!used[q]) traced.push_back(q);
    const int k = static_cast<int>(kept.size());
    const Eigen::Index dk = Eigen::Index{1} << k;
    auto place = [n](const std::vector<int>& qubits, uint32_t bits) {
        uint32_t full = 0;
        const int m = static_cast<int>(qubits.size());
        for (int i = 0; i < m; ++i)
            if ((bits >> (m - 1 - i)) & 1) full |= uint32_t{1} << (n - 1 - qubits[i]);
        return full;
    };
    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    const uint32_t dt = uint32_t{1} << traced.size();
    for (uint32_t i = 0; i < dk; ++i)
        for (uint32_t j = 0; j < dk; ++j) {
            const uint32_t fi = place(kept, i), fj = place(kept, j);
            cd sum = 0;
            for (uint32_t t = 0; t < dt; ++t) {
                const uint32_t ft = place(traced, t);
                sum += rho.matrix()(fi | ft, fj | ft);
            }
            out(i, j) = sum;
        }
    return DensityMatrix(k, out);
}

BlochVector bloch_of(const DensityMatrix& rho) {
    if (rho.num_qubits() != 1) throw std::invalid_argument("bloch_of: expected one qubit");
    const double tr = rho.trace().real();
    if (std::abs(tr) < kZeroProbability) throw std::domain_error("bloch_of: zero trace");
    const auto& m = rho.matrix();
    return {2 * m(1, 0).real() / tr, 2 * m(1, 0).imag() / tr, (m(0, 0) - m(1, 1)).real() / tr};
}

ProtocolResult run_protocol(const std::vector<DensityMatrix>& inputs, const std::vector<ProtocolStep>& steps) {
    if (inputs.empty()) throw std::invalid_argument("run_protocol: no inputs");
    DensityMatrix rho = inputs[0];
    for (size_t i = 1; i < inputs.size(); ++i) rho = tensor(rho, inputs[i]);
    ProtocolResult res;
    for (const auto& step : steps) {
        if (const auto* s = std::get_if<ProjectStep>(&step)) {
            if (s->group.num_qubits() != rho.num_qubits()) throw std::invalid_argument("project: qubit count");
            const ComplexMatrix p = group_projector(s->group);
            ComplexMatrix m = p * rho.matrix() * p;
            const double prob = m.trace().real();
            if (s->renormalize) {
                if (prob < kZeroProbability) {
                    res.zero_probability = true;
                    res.success_probability = 0;
                    res.state = DensityMatrix(rho.num_qubits(), m);
                    return res;
                }
                m /= prob;
                res.success_probability *= prob;
            }
            rho = DensityMatrix(rho.num_qubits(), m);
        } else if (const auto* u = std::get_if<UnitaryStep>(&step)) {
            rho = DensityMatrix(rho.num_qubits(), u->u * rho.matrix() * u->u.adjoint());
        } else if (const auto* t = std::get_if<PartialTraceStep>(&step)) {
            rho = partial_trace(rho, t->kept);
        } else {
            const auto& d = std::get<DecodeStep>(step);
            if (commutes(d.logical_x, d.logical_z)) throw std::invalid_argument("decode: logicals must anticommute");
            const ComplexMatrix p = group_projector(d.code);
            const ComplexMatrix m = p * rho.matrix() * p;
            const double prob = m.trace().real();
            res.success_probability *= prob;
            if (prob < kZeroProbability) {
                res.zero_probability = true;
                res.state = DensityMatrix::maximally_mixed(1);
                return res;
            }
            const PauliOperator ly = (d.logical_x * d.logical_z).times_phase(1);
            rho = DensityMatrix::from_bloch(
                {expectation(m, d.logical_x) / prob, expectation(m, ly) / prob, expectation(m, d.logical_z) / prob});
        }
    }
    res.state = rho;
    return res;
}

ReductionOutput<double> oracle_reduction(const RealCoefficients& s, const StabilizerGroup& r) {
    if (s.num_qubits() != 2 || r.num_qubits() != 2 || r.num_generators() != 1)
        throw std::invalid_argument("oracle_reduction: expects a two-qubit state and one generator");
    struct Gate {
        CliffordElement c;
        ComplexMatrix u;
    };
    const double h = 1 / std::numbers::sqrt2;
    ComplexMatrix hm(2, 2), sm(2, 2), id = ComplexMatrix::Identity(2, 2);
    hm << h, h, h, -h;
    sm << 1, 0, 0, cd(0, 1);
    ComplexMatrix cx01 = ComplexMatrix::Zero(4, 4), cx10 = ComplexMatrix::Zero(4, 4);
    cx01(0, 0) = cx01(1, 1) = cx01(2, 3) = cx01(3, 2) = 1;
    cx10(0, 0) = cx10(2, 2) = cx10(1, 3) = cx10(3, 1) = 1;
    const std::vector<Gate> gates = {{hadamard(2, 0), kron(hm, id)},   {hadamard(2, 1), kron(id, hm)},
                                     {phase_gate(2, 0), kron(sm, id)}, {phase_gate(2, 1), kron(id, sm)},
                                     {cnot(2, 0, 1), cx01},            {cnot(2, 1, 0), cx10}};

    // Breadth-first search over the orbit of the generator for +IZ.
    const PauliOperator target = PauliOperator::from_string("+IZ");
    using Key = std::pair<uint32_t, int>;
    auto key = [](const PauliOperator& p) { return Key{p.index(), ((p.phase_exp() % 4) + 4) % 4}; };
    std::map<Key, ComplexMatrix> seen;
    std::deque<PauliOperator> queue;
    const PauliOperator g = r.generators()[0];
    seen.emplace(key(g), ComplexMatrix::Identity(4, 4));
    queue.push_back(g);
    ComplexMatrix u;
    while (!queue.empty()) {
        const PauliOperator p = queue.front();
        queue.pop_front();
        const ComplexMatrix cur = seen.at(key(p));
        if (key(p) == key(target)) {
            u = cur;
            break;
        }
        for (const auto& gate : gates) {
            const PauliOperator q = gate.c.apply(p);
            if (seen.contains(key(q))) continue;
            seen.emplace(key(q), gate.u * cur);
            queue.push_back(q);
        }
    }
    if (u.size() == 0) throw std::logic_error("oracle_reduction: generator not mapped to +IZ");

    const ComplexMatrix rho = density_from_coeffs(s).matrix();
    const ComplexMatrix p = group_projector(r);
    const ComplexMatrix m = u * p * rho * p * u.adjoint();
    const ComplexMatrix out = partial_trace(DensityMatrix(2, m), {0}).matrix();
    ReductionOutput<double> o;
    o.c_i = out.trace().real() / 2;
    o.c_x = out(1, 0).real();
    o.c_y = out(1, 0).imag();
    o.c_z = (out(0, 0) - out(1, 1)).real() / 2;
    return o;
}

ComplexMatrix dense_t_gate() {
    ComplexMatrix t(2, 2);
    t << cd(-1, 1), cd(1, 1), cd(-1, 1), cd(-1, -1);
    return t / 2.0;
}

CodeDistillResult oracle_code_distill(const std::array<BlochVector, 5>& inputs, const std::array<int, 5>& twists) {
    const ComplexMatrix t = dense_t_gate();
    std::vector<DensityMatrix> rhos;
    for (int i = 0; i < 5; ++i) {
        ComplexMatrix m = DensityMatrix::from_bloch(inputs[i]).matrix();
        for (int k = 0; k < ((twists[i] % 3) + 3) % 3; ++k) m = t * m * t.adjoint();
        rhos.emplace_back(1, m);
    }
    const auto code = StabilizerGroup::from_strings({"+XZZXI", "+IXZZX", "+XIXZZ", "+ZXIXZ"});
    const auto res = run_protocol(
        rhos, {DecodeStep{code, PauliOperator::from_string("XXXXX"), PauliOperator::from_string("ZZZZZ")}});
    if (res.zero_probability) return {{}, 0};
    return {bloch_of(res.state), res.success_probability};
}

BlochVector oracle_parity(const BlochVector& b) {
    const auto rho = DensityMatrix::from_bloch(b);
    return parity_decode(rho, rho);
}

BlochVector oracle_pair_parity(const BlochVector& b) {
    return parity_decode(DensityMatrix::from_bloch(b), DensityMatrix::from_bloch({b.x, -b.y, b.z}));
}

BlochVector oracle_dual_round(double x) {
    const auto rho = DensityMatrix::from_bloch({x, 0, x});
    const auto first = DensityMatrix::from_bloch(parity_decode(rho, rho));
    return parity_decode(first, first, "+XX", "XI", "ZZ");
}

BlochVector oracle_pi8_parity(double eps) {
    const auto s = jamiolkowski_state({NoiseKind::depolarizing, depolarizing_threshold() - eps});
    const auto res = run_protocol({density_from_coeffs(s)},
                                  {DecodeStep{StabilizerGroup::from_strings({"+ZZ"}), PauliOperator::from_string("XX"),
                                              PauliOperator::from_string("ZI")}});
    return bloch_of(res.state);
}

}  // namespace magicdistill
