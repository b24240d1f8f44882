// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qtele/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "qtele/random.hpp"

namespace qtele {

namespace {

using nlohmann::json;

const Matrix& h_matrix() {
    static const Matrix m = [] {
        const double r = 1.0 / std::sqrt(2.0);
        Matrix h(2, 2);
        h << r, r, r, -r;
        return h;
    }();
    return m;
}

const Matrix& cnot_matrix() {
    static const Matrix m = [] {
        Matrix c = Matrix::Zero(4, 4);
        c(0, 0) = 1; c(1, 1) = 1; c(2, 3) = 1; c(3, 2) = 1;
        return c;
    }();
    return m;
}

}  // namespace

Gate Gate::h(int q) { return {Kind::H, {q}, {}, {}}; }
Gate Gate::x(int q) { return {Kind::X, {q}, {}, {}}; }
Gate Gate::y(int q) { return {Kind::Y, {q}, {}, {}}; }
Gate Gate::z(int q) { return {Kind::Z, {q}, {}, {}}; }
Gate Gate::cnot(int control, int target) {
    return {Kind::Cnot, {control, target}, {}, {}};
}

Gate Gate::custom1(std::string label, Matrix m, int q) {
    if (m.rows() != 2 || m.cols() != 2 || !is_unitary(m))
        throw std::invalid_argument("custom1: need a unitary 2x2 matrix");
    return {Kind::Custom1, {q}, std::move(m), std::move(label)};
}

Gate Gate::custom2(std::string label, Matrix m, int q1, int q2) {
    if (m.rows() != 4 || m.cols() != 4 || !is_unitary(m))
        throw std::invalid_argument("custom2: need a unitary 4x4 matrix");
    return {Kind::Custom2, {q1, q2}, std::move(m), std::move(label)};
}

const Matrix& Gate::unitary() const {
    switch (kind) {
        case Kind::H: return h_matrix();
        case Kind::X: return pauli_matrix(Pauli::X);
        case Kind::Y: return pauli_matrix(Pauli::Y);
        case Kind::Z: return pauli_matrix(Pauli::Z);
        case Kind::Cnot: return cnot_matrix();
        case Kind::Custom1:
        case Kind::Custom2: return matrix;
    }
    throw std::logic_error("Gate::unitary: bad kind");
}

std::string Gate::name() const {
    switch (kind) {
        case Kind::H: return "h";
        case Kind::X: return "x";
        case Kind::Y: return "y";
        case Kind::Z: return "z";
        case Kind::Cnot: return "cnot";
        case Kind::Custom1:
        case Kind::Custom2: return label.empty() ? "custom" : label;
    }
    return "?";
}

void Circuit::validate() const {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw std::invalid_argument("Circuit: bad qubit count");
    for (const auto& g : gates) {
        const std::size_t arity =
            (g.kind == Gate::Kind::Cnot || g.kind == Gate::Kind::Custom2) ? 2 : 1;
        if (g.targets.size() != arity)
            throw std::invalid_argument("Circuit: gate arity mismatch");
        std::set<int> seen;
        for (int q : g.targets) {
            if (q < 1 || q > n_qubits)
                throw std::invalid_argument("Circuit: target out of range");
            if (!seen.insert(q).second)
                throw std::invalid_argument("Circuit: repeated gate target");
        }
    }
    std::set<int> seen;
    for (int q : measured) {
        if (q < 1 || q > n_qubits)
            throw std::invalid_argument("Circuit: measured qubit out of range");
        if (!seen.insert(q).second)
            throw std::invalid_argument("Circuit: repeated measured qubit");
    }
}

StateVector run_circuit(const Circuit& circuit, const StateVector& input) {
    circuit.validate();
    if (input.n_qubits() != circuit.n_qubits)
        throw std::invalid_argument("run_circuit: input dimension mismatch");
    StateVector state = input;
    for (const auto& g : circuit.gates)
        state = apply_unitary(state, g.unitary(), g.targets);
    return state;
}

std::vector<MeasOutcome> measure_outcomes(const Circuit& circuit,
                                          const StateVector& input,
                                          const std::vector<int>& qubits) {
    if (qubits.empty())
        throw std::invalid_argument("measure_outcomes: no qubits listed");
    const StateVector state = run_circuit(circuit, input);
    const int n = state.n_qubits();
    const int nm = static_cast<int>(qubits.size());

    std::set<int> measured(qubits.begin(), qubits.end());
    std::vector<int> rest;
    for (int q = 1; q <= n; ++q)
        if (!measured.count(q)) rest.push_back(q);
    const int nr = static_cast<int>(rest.size());

    std::vector<int> m_shift, r_shift;
    for (int q : qubits) m_shift.push_back(n - q);
    for (int q : rest) r_shift.push_back(n - q);
    auto scatter = [](std::size_t packed, const std::vector<int>& shifts) {
        std::size_t out = 0;
        const auto k = shifts.size();
        for (std::size_t j = 0; j < k; ++j)
            if ((packed >> (k - 1 - j)) & 1u)
                out |= std::size_t{1} << shifts[j];
        return out;
    };

    const auto amps = state.amplitudes();
    std::vector<MeasOutcome> outcomes;
    const std::size_t dm = std::size_t{1} << nm;
    const std::size_t dr = std::size_t{1} << nr;
    for (std::size_t xm = 0; xm < dm; ++xm) {
        MeasOutcome o;
        o.bits.resize(static_cast<std::size_t>(nm));
        for (int j = 0; j < nm; ++j)
            o.bits[static_cast<std::size_t>(j)] =
                ((xm >> (nm - 1 - j)) & 1u) ? '1' : '0';
        const std::size_t m_part = scatter(xm, m_shift);
        std::vector<Complex> cond(dr);
        double p = 0;
        for (std::size_t xr = 0; xr < dr; ++xr) {
            const Complex a = amps[m_part | scatter(xr, r_shift)];
            cond[xr] = a;
            p += std::norm(a);
        }
        o.probability = p;
        if (nr > 0 && p >= kNullProbability) {
            StateVector c(nr, std::move(cond));
            c.normalize();
            o.conditional = std::move(c);
        }
        outcomes.push_back(std::move(o));
    }
    return outcomes;
}

std::map<std::string, std::int64_t> sample(const Circuit& circuit,
                                           const StateVector& input,
                                           std::uint64_t seed,
                                           std::int64_t shots) {
    if (shots < 1) throw std::invalid_argument("sample: shots >= 1");
    const std::vector<int> qubits = circuit.measured.empty()
                                        ? [&] {
                                              std::vector<int> all;
                                              for (int q = 1; q <= circuit.n_qubits; ++q)
                                                  all.push_back(q);
                                              return all;
                                          }()
                                        : circuit.measured;
    const auto outcomes = measure_outcomes(circuit, input, qubits);

    std::vector<double> cdf;
    cdf.reserve(outcomes.size());
    double acc = 0;
    for (const auto& o : outcomes) {
        acc += o.probability;
        cdf.push_back(acc);
    }

    std::map<std::string, std::int64_t> counts;
    Rng rng(seed);
    for (std::int64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform01() * acc;
        // first bin with u < cdf[k]; zero-probability bins have zero width
        // and are never selected
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto k = static_cast<std::size_t>(
            std::min<std::ptrdiff_t>(it - cdf.begin(),
                                     static_cast<std::ptrdiff_t>(cdf.size()) - 1));
        ++counts[outcomes[k].bits];
    }
    return counts;
}

Circuit prepare(std::string_view label) {
    Circuit c;
    if (label == "ghz") {
        c.n_qubits = 3;
        c.gates = {Gate::h(1), Gate::cnot(1, 2), Gate::cnot(1, 3)};
    } else if (label == "varphi.1") {
        c.n_qubits = 3;
        c.gates = {Gate::h(1), Gate::cnot(1, 2), Gate::cnot(1, 3), Gate::h(1)};
    } else if (label == "phi4.1") {
        c.n_qubits = 4;
        c.gates = {Gate::h(1), Gate::cnot(1, 4), Gate::cnot(1, 2), Gate::h(2),
                   Gate::cnot(2, 3)};
    } else if (label == "varphi4.1") {
        c.n_qubits = 4;
        c.gates = {Gate::h(1), Gate::cnot(1, 4), Gate::cnot(1, 3), Gate::h(2),
                   Gate::cnot(2, 4)};
    } else {
        throw std::invalid_argument("prepare: unknown state label: " +
                                    std::string(label));
    }
    return c;
}

std::vector<std::string> prepare_labels() {
    return {"ghz", "varphi.1", "phi4.1", "varphi4.1"};
}

Circuit teleport_network(std::string_view name) {
    Circuit c;
    if (name == "single_ghz") {
        c.n_qubits = 4;
        c.gates = {Gate::cnot(1, 3), Gate::h(1), Gate::h(2)};
        c.measured = {1, 2, 3};
    } else if (name == "epr_ghz") {
        c.n_qubits = 5;
        c.gates = {Gate::cnot(1, 3), Gate::h(1), Gate::h(2)};
        c.measured = {1, 2, 3};
    } else if (name == "single_varphi") {
        c.n_qubits = 4;
        c.gates = {Gate::cnot(1, 3), Gate::h(1)};
        c.measured = {1, 2, 3};
    } else if (name == "two_qubit_phi4") {
        c.n_qubits = 6;
        c.gates = {Gate::cnot(2, 3), Gate::h(2), Gate::cnot(1, 2),
                   Gate::cnot(1, 4), Gate::h(1)};
        c.measured = {1, 2, 3, 4};
    } else if (name == "two_qubit_varphi4") {
        c.n_qubits = 6;
        c.gates = {Gate::cnot(2, 4), Gate::h(2), Gate::cnot(1, 3),
                   Gate::cnot(1, 4), Gate::h(1)};
        c.measured = {1, 2, 3, 4};
    } else {
        throw std::invalid_argument("teleport_network: unknown name: " +
                                    std::string(name));
    }
    return c;
}

std::vector<std::string> teleport_network_names() {
    return {"single_ghz", "epr_ghz", "single_varphi", "two_qubit_phi4",
            "two_qubit_varphi4"};
}

Circuit circuit_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("circuit JSON: ") + e.what());
    }
    Circuit c;
    c.n_qubits = j.at("n_qubits").get<int>();
    for (const auto& g : j.at("gates")) {
        const std::string kind = g.at("gate").get<std::string>();
        const auto targets = g.at("targets").get<std::vector<int>>();
        if (kind == "h") c.gates.push_back(Gate::h(targets.at(0)));
        else if (kind == "x") c.gates.push_back(Gate::x(targets.at(0)));
        else if (kind == "y") c.gates.push_back(Gate::y(targets.at(0)));
        else if (kind == "z") c.gates.push_back(Gate::z(targets.at(0)));
        else if (kind == "cnot")
            c.gates.push_back(Gate::cnot(targets.at(0), targets.at(1)));
        else {
            const auto rows = g.at("matrix");
            const auto d = rows.size();
            Matrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t col = 0; col < d; ++col) {
                    const auto& cell = rows.at(r).at(col);
                    m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) =
                        Complex{cell.at(0).get<double>(), cell.at(1).get<double>()};
                }
            if (targets.size() == 1)
                c.gates.push_back(Gate::custom1(kind, std::move(m), targets.at(0)));
            else
                c.gates.push_back(
                    Gate::custom2(kind, std::move(m), targets.at(0), targets.at(1)));
        }
    }
    if (j.contains("measure"))
        c.measured = j.at("measure").get<std::vector<int>>();
    c.validate();
    return c;
}

std::string circuit_to_json_text(const Circuit& circuit) {
    json j;
    j["n_qubits"] = circuit.n_qubits;
    json gates = json::array();
    for (const auto& g : circuit.gates) {
        json gj;
        gj["gate"] = g.name();
        gj["targets"] = g.targets;
        if (g.kind == Gate::Kind::Custom1 || g.kind == Gate::Kind::Custom2) {
            json rows = json::array();
            for (Eigen::Index r = 0; r < g.matrix.rows(); ++r) {
                json row = json::array();
                for (Eigen::Index c = 0; c < g.matrix.cols(); ++c)
                    row.push_back({g.matrix(r, c).real(), g.matrix(r, c).imag()});
                rows.push_back(std::move(row));
            }
            gj["matrix"] = std::move(rows);
        }
        gates.push_back(std::move(gj));
    }
    j["gates"] = std::move(gates);
    if (!circuit.measured.empty()) j["measure"] = circuit.measured;
    return j.dump(2) + "\n";
}

}  // namespace qtele
