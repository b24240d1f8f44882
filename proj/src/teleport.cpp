// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qtele/teleport.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qtele/format.hpp"

namespace qtele {

namespace {

using nlohmann::json;

Matrix cnot_matrix() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1; m(1, 1) = 1; m(2, 3) = 1; m(3, 2) = 1;
    return m;
}

Matrix named_gate_matrix(const std::string& gate) {
    if (gate == "cnot") return cnot_matrix();
    if (gate == "h") {
        Matrix m(2, 2);
        const double r = 1.0 / std::sqrt(2.0);
        m << r, r, r, -r;
        return m;
    }
    if (gate == "x") return pauli_matrix(Pauli::X);
    if (gate == "y") return pauli_matrix(Pauli::Y);
    if (gate == "z") return pauli_matrix(Pauli::Z);
    throw std::invalid_argument("unknown pre-op gate: " + gate);
}

}  // namespace

std::string CorrectionOp::word() const {
    std::string out;
    for (Pauli p : factors) out += pauli_char(p);
    return out;
}

bool CorrectionOp::same_word(const CorrectionOp& other) const {
    return factors == other.factors;
}

StateVector apply_pauli_word(const StateVector& s, const PauliWord& w) {
    if (w.max_qubit() > s.n_qubits())
        throw std::invalid_argument("apply_pauli_word: label out of range");
    std::uint64_t flip = 0, sign = 0;
    int y_count = 0;
    for (const auto& [q, p] : w.factors()) {
        const std::uint64_t bit = std::uint64_t{1} << (s.n_qubits() - q);
        if (p == Pauli::X || p == Pauli::Y) flip |= bit;
        if (p == Pauli::Z || p == Pauli::Y) sign |= bit;
        if (p == Pauli::Y) ++y_count;
    }
    static const Complex iphase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex global = iphase[y_count & 3];
    const auto in = s.amplitudes();
    std::vector<Complex> out(in.size());
    for (std::size_t x = 0; x < in.size(); ++x) {
        const double sgn = (std::popcount(x & sign) & 1) ? -1.0 : 1.0;
        out[x ^ flip] = global * sgn * in[x];
    }
    return {s.n_qubits(), std::move(out)};
}

void Protocol::validate() const {
    wiring.validate();
    if (unknown_arity != 1 && unknown_arity != 2)
        throw std::invalid_argument("Protocol: unknown_arity must be 1 or 2");
    if (static_cast<int>(wiring.alice_unknown.size()) != unknown_arity)
        throw std::invalid_argument("Protocol: wiring must list the unknown qubits");
    for (int k = 0; k < unknown_arity; ++k)
        if (wiring.alice_unknown[static_cast<std::size_t>(k)] != k + 1)
            throw std::invalid_argument(
                "Protocol: unknown qubits must be labels 1..arity");
    const int carrier_qubits = carrier.n_qubits();
    if (wiring.total() != unknown_arity + carrier_qubits)
        throw std::invalid_argument("Protocol: wiring size != unknown + carrier");
    const auto alice = wiring.alice();
    if ((std::size_t{1} << alice.size()) != measurement_basis.size() ||
        measurement_basis.n_qubits != static_cast<int>(alice.size()))
        throw std::invalid_argument(
            "Protocol: measurement basis does not cover the sender's qubits");
    for (const auto& ket : input_subspace)
        if (static_cast<int>(ket.size()) != unknown_arity)
            throw std::invalid_argument("Protocol: input_subspace ket arity");
    for (const auto& op : pre_ops) {
        if (!is_unitary(op.matrix))
            throw std::invalid_argument("Protocol: pre-op is not unitary");
        if ((std::size_t{1} << op.targets.size()) !=
            static_cast<std::size_t>(op.matrix.rows()))
            throw std::invalid_argument("Protocol: pre-op target count");
    }
}

StateVector Protocol::random_unknown(Rng& rng) const {
    if (input_subspace.empty()) return haar_state(unknown_arity, rng);
    return haar_state_in_span(input_subspace, rng);
}

StateVector compose(const StateVector& unknown, const Protocol& protocol) {
    if (unknown.n_qubits() != protocol.unknown_arity)
        throw std::invalid_argument("compose: unknown arity mismatch");
    StateVector joint = tensor(unknown, protocol.carrier);
    for (const auto& op : protocol.pre_ops)
        joint = apply_unitary(joint, op.matrix, op.targets);
    return joint;
}

std::vector<OutcomeRecord> decompose(const StateVector& joint,
                                     const BasisSet& basis,
                                     const std::vector<int>& alice_qubits) {
    if (!basis.is_complete())
        throw std::invalid_argument("decompose: basis is incomplete");
    const int n = joint.n_qubits();
    const int na = static_cast<int>(alice_qubits.size());
    if (basis.n_qubits != na)
        throw std::invalid_argument("decompose: basis arity != sender qubits");

    std::set<int> alice_set(alice_qubits.begin(), alice_qubits.end());
    if (static_cast<int>(alice_set.size()) != na)
        throw std::invalid_argument("decompose: repeated sender qubit");
    std::vector<int> bob_qubits;
    for (int q = 1; q <= n; ++q)
        if (!alice_set.count(q)) bob_qubits.push_back(q);
    const int nb = static_cast<int>(bob_qubits.size());

    // joint index = scatter(alice bits) | scatter(bob bits)
    std::vector<int> alice_shift, bob_shift;
    for (int q : alice_qubits) alice_shift.push_back(n - q);
    for (int q : bob_qubits) bob_shift.push_back(n - q);
    auto scatter = [](std::size_t packed, const std::vector<int>& shifts) {
        std::size_t out = 0;
        const auto k = shifts.size();
        for (std::size_t j = 0; j < k; ++j)
            if ((packed >> (k - 1 - j)) & 1u)
                out |= std::size_t{1} << shifts[j];
        return out;
    };

    const auto amps = joint.amplitudes();
    const std::size_t da = std::size_t{1} << na;
    const std::size_t db = std::size_t{1} << nb;

    std::vector<OutcomeRecord> records;
    records.reserve(basis.size());
    double total = 0;
    for (const auto& [label, member] : basis.members) {
        const auto ms = member.amplitudes();
        std::vector<Complex> bob(db, Complex{0, 0});
        for (std::size_t xb = 0; xb < db; ++xb) {
            const std::size_t bob_part = scatter(xb, bob_shift);
            Complex acc = 0;
            for (std::size_t xa = 0; xa < da; ++xa)
                acc += std::conj(ms[xa]) * amps[scatter(xa, alice_shift) | bob_part];
            bob[xb] = acc;
        }
        double p = 0;
        for (const auto& c : bob) p += std::norm(c);
        total += p;

        OutcomeRecord rec;
        rec.outcome_label = label;
        rec.probability = p;
        rec.is_null = p < kNullProbability;
        if (!rec.is_null) {
            StateVector cond(nb, std::move(bob));
            cond.normalize();
            rec.bob_state = std::move(cond);
        }
        records.push_back(std::move(rec));
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::runtime_error("decompose: outcome probabilities sum to " +
                                 std::to_string(total));
    return records;
}

std::optional<CorrectionOp> find_correction(const StateVector& bob,
                                            const StateVector& target) {
    if (bob.n_qubits() != target.n_qubits())
        throw std::invalid_argument("find_correction: dimension mismatch");
    const int k = bob.n_qubits();
    const Pauli order[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    const std::size_t n_words = std::size_t{1} << (2 * k);
    for (std::size_t w = 0; w < n_words; ++w) {
        CorrectionOp op;
        PauliWord word;
        for (int q = 0; q < k; ++q) {
            const auto digit = (w >> (2 * (k - 1 - q))) & 3u;
            op.factors.push_back(order[digit]);
            word.set(q + 1, order[digit]);
        }
        const StateVector corrected = apply_pauli_word(bob, word);
        const Complex amp = inner(target, corrected);
        if (std::abs(std::abs(amp) - 1.0) < kFidelityTol) {
            op.global_phase = std::conj(amp);
            return op;
        }
    }
    return std::nullopt;
}

namespace {

// Applies a discovered correction and reports fidelity against the target.
double corrected_fidelity(const StateVector& bob, const CorrectionOp& op,
                          const StateVector& target) {
    PauliWord word;
    for (std::size_t q = 0; q < op.factors.size(); ++q)
        word.set(static_cast<int>(q) + 1, op.factors[q]);
    return fidelity(target, apply_pauli_word(bob, word));
}

void summarize(ProtocolReport& report) {
    report.null_outcome_count = 0;
    std::set<std::string> words;
    double minf = 1.0;
    double live = 0;
    int live_count = 0;
    for (const auto& rec : report.outcomes) {
        if (rec.is_null) {
            ++report.null_outcome_count;
            continue;
        }
        ++live_count;
        live += rec.probability;
        minf = std::min(minf, rec.post_fidelity);
        if (rec.correction) words.insert(rec.correction->word());
    }
    report.min_post_fidelity = live_count ? minf : 0.0;
    report.distinct_corrections = static_cast<int>(words.size());
    const double uniform = live_count ? live / live_count : 0.0;
    report.max_probability_spread = 0;
    for (const auto& rec : report.outcomes)
        if (!rec.is_null)
            report.max_probability_spread = std::max(
                report.max_probability_spread, std::abs(rec.probability - uniform));
    report.success = live_count > 0 && report.min_post_fidelity >= 1.0 - kFidelityTol;
}

}  // namespace

ProtocolReport run(const Protocol& protocol, const StateVector& unknown) {
    protocol.validate();
    ProtocolReport report;
    report.protocol_name = protocol.name;
    report.carrier_label = protocol.carrier_label;
    report.basis_name = protocol.measurement_basis.name;
    report.input_subspace = protocol.input_subspace;
    report.n_inputs = 1;

    const StateVector joint = compose(unknown, protocol);
    report.outcomes =
        decompose(joint, protocol.measurement_basis, protocol.wiring.alice());
    for (auto& rec : report.outcomes) {
        if (rec.is_null) continue;
        rec.correction = find_correction(*rec.bob_state, unknown);
        rec.post_fidelity =
            rec.correction ? corrected_fidelity(*rec.bob_state, *rec.correction, unknown)
                           : 0.0;
    }
    summarize(report);
    return report;
}

ProtocolReport run_random(const Protocol& protocol, int n_inputs,
                          std::uint64_t seed) {
    if (n_inputs < 1) throw std::invalid_argument("run_random: n_inputs >= 1");
    Rng rng(seed);
    ProtocolReport report = run(protocol, protocol.random_unknown(rng));
    report.seed = seed;
    report.n_inputs = n_inputs;

    for (int i = 1; i < n_inputs; ++i) {
        const StateVector unknown = protocol.random_unknown(rng);
        const StateVector joint = compose(unknown, protocol);
        const auto outcomes =
            decompose(joint, protocol.measurement_basis, protocol.wiring.alice());
        for (std::size_t k = 0; k < outcomes.size(); ++k) {
            auto& first = report.outcomes[k];
            const auto& rec = outcomes[k];
            if (rec.is_null != first.is_null) {
                // Outcome liveness depends on the input; re-derive.
                report.corrections_input_independent = false;
                continue;
            }
            if (rec.is_null) continue;
            if (first.correction) {
                const double f =
                    corrected_fidelity(*rec.bob_state, *first.correction, unknown);
                first.post_fidelity = std::min(first.post_fidelity, f);
                if (f < 1.0 - kFidelityTol)
                    report.corrections_input_independent = false;
            }
            first.probability = std::max(first.probability, rec.probability);
        }
    }
    summarize(report);
    return report;
}

FailureStats failure_analysis(const Protocol& protocol, int n_samples,
                              std::uint64_t seed) {
    protocol.validate();
    if (n_samples < 1) throw std::invalid_argument("failure_analysis: samples");
    Rng rng(seed);
    std::vector<bool> always_null(protocol.measurement_basis.size(), true);
    std::vector<bool> correctable(protocol.measurement_basis.size(), false);
    double mass = 0;
    bool first_sample = true;

    for (int i = 0; i < n_samples; ++i) {
        const StateVector unknown = protocol.random_unknown(rng);
        const StateVector joint = compose(unknown, protocol);
        const auto outcomes =
            decompose(joint, protocol.measurement_basis, protocol.wiring.alice());
        double sample_mass = 0;
        for (std::size_t k = 0; k < outcomes.size(); ++k) {
            if (outcomes[k].is_null) continue;
            always_null[k] = false;
            if (first_sample)
                correctable[k] =
                    find_correction(*outcomes[k].bob_state, unknown).has_value();
            if (correctable[k]) sample_mass += outcomes[k].probability;
        }
        mass += sample_mass;
        first_sample = false;
    }

    FailureStats stats;
    stats.null_count =
        static_cast<int>(std::count(always_null.begin(), always_null.end(), true));
    stats.success_probability = mass / n_samples;
    return stats;
}

namespace {

Protocol make_protocol(std::string name, int arity, std::string carrier_label,
                       QubitWiring wiring, BasisSet basis,
                       std::vector<PreOp> pre_ops = {},
                       std::vector<std::string> subspace = {},
                       bool expect_failure = false) {
    Protocol p;
    p.name = std::move(name);
    p.unknown_arity = arity;
    p.carrier_label = std::move(carrier_label);
    p.carrier = catalog_state(p.carrier_label);
    p.wiring = std::move(wiring);
    p.measurement_basis = std::move(basis);
    p.pre_ops = std::move(pre_ops);
    p.input_subspace = std::move(subspace);
    p.expect_failure = expect_failure;
    p.validate();
    return p;
}

}  // namespace

Protocol builtin_protocol(std::string_view name) {
    if (name == "single_ghz_chi")
        return make_protocol("single_ghz_chi", 1, "ghz.1", {{1}, {2, 3}, {4}},
                             chi_basis());
    if (name == "single_ghz_varphi") {
        std::vector<PreOp> ops;
        ops.push_back({"cnot", cnot_matrix(), {2, 3}});
        ops.push_back({"cnot", cnot_matrix(), {1, 2}});
        return make_protocol("single_ghz_varphi", 1, "ghz.1", {{1}, {2, 3}, {4}},
                             varphi_basis(), std::move(ops));
    }
    if (name == "epr_ghz_varphi")
        return make_protocol("epr_ghz_varphi", 2, "ghz.1", {{1, 2}, {3}, {4, 5}},
                             varphi_basis(), {}, {"01", "10"});
    if (name == "single_varphi_ghz")
        return make_protocol("single_varphi_ghz", 1, "varphi.1", {{1}, {2, 3}, {4}},
                             ghz_basis());
    if (name == "two_qubit_phi4")
        return make_protocol("two_qubit_phi4", 2, "phi4.1",
                             {{1, 2}, {3, 4}, {5, 6}},
                             four_particle_set(FourQubitFamily::First));
    if (name == "two_qubit_varphi4")
        return make_protocol("two_qubit_varphi4", 2, "varphi4.1",
                             {{1, 2}, {3, 4}, {5, 6}},
                             four_particle_set(FourQubitFamily::Second));
    if (name == "single_ghz_ghz")
        return make_protocol("single_ghz_ghz", 1, "ghz.1", {{1}, {2, 3}, {4}},
                             ghz_basis(), {}, {}, /*expect_failure=*/true);
    throw std::invalid_argument("unknown protocol: " + std::string(name));
}

std::vector<std::string> builtin_protocol_names() {
    return {"single_ghz_chi",   "single_ghz_varphi", "epr_ghz_varphi",
            "single_varphi_ghz", "two_qubit_phi4",   "two_qubit_varphi4",
            "single_ghz_ghz"};
}

Protocol protocol_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("protocol JSON: ") + e.what());
    }
    auto need = [&](const char* field) -> const json& {
        if (!j.contains(field))
            throw std::invalid_argument(std::string("protocol JSON: missing field '") +
                                        field + "'");
        return j.at(field);
    };

    Protocol p;
    p.name = j.value("name", "protocol");
    p.unknown_arity = need("unknown_arity").get<int>();
    p.carrier_label = need("carrier_member").get<std::string>();
    p.carrier = catalog_state(p.carrier_label);

    const json& w = need("wiring");
    auto field_list = [&](const char* field) {
        if (!w.contains(field))
            throw std::invalid_argument(
                std::string("protocol JSON: wiring missing '") + field + "'");
        return w.at(field).get<std::vector<int>>();
    };
    p.wiring.alice_unknown = field_list("alice_unknown");
    p.wiring.alice_carrier = field_list("alice_carrier");
    p.wiring.bob = field_list("bob");

    p.measurement_basis = basis_by_name(need("basis_family").get<std::string>());

    if (j.contains("pre_ops"))
        for (const auto& op : j.at("pre_ops")) {
            PreOp pre;
            pre.gate = op.value("gate", "custom");
            pre.targets = op.at("targets").get<std::vector<int>>();
            if (pre.gate == "custom") {
                const auto rows = op.at("matrix");
                const auto d = rows.size();
                pre.matrix = Matrix(d, d);
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t c = 0; c < d; ++c) {
                        const auto& cell = rows.at(r).at(c);
                        pre.matrix(static_cast<Eigen::Index>(r),
                                   static_cast<Eigen::Index>(c)) =
                            Complex{cell.at(0).get<double>(),
                                    cell.at(1).get<double>()};
                    }
            } else {
                pre.matrix = named_gate_matrix(pre.gate);
            }
            p.pre_ops.push_back(std::move(pre));
        }

    if (j.contains("input_subspace"))
        p.input_subspace = j.at("input_subspace").get<std::vector<std::string>>();
    p.expect_failure = j.value("expect_failure", false);

    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("protocol JSON: ") + e.what());
    }
    return p;
}

std::string protocol_to_json_text(const Protocol& p) {
    json j;
    j["name"] = p.name;
    j["unknown_arity"] = p.unknown_arity;
    j["carrier_family"] = p.carrier_label.substr(0, p.carrier_label.find('.'));
    j["carrier_member"] = p.carrier_label;
    j["wiring"] = {{"alice_unknown", p.wiring.alice_unknown},
                   {"alice_carrier", p.wiring.alice_carrier},
                   {"bob", p.wiring.bob}};
    j["basis_family"] = p.measurement_basis.name;
    if (!p.pre_ops.empty()) {
        json ops = json::array();
        for (const auto& op : p.pre_ops)
            ops.push_back({{"gate", op.gate}, {"targets", op.targets}});
        j["pre_ops"] = std::move(ops);
    }
    if (!p.input_subspace.empty()) j["input_subspace"] = p.input_subspace;
    if (p.expect_failure) j["expect_failure"] = true;
    return j.dump(2) + "\n";
}

std::string report_to_json_text(const ProtocolReport& report) {
    json j;
    j["protocol"] = report.protocol_name;
    j["carrier"] = report.carrier_label;
    j["basis"] = report.basis_name;
    if (!report.input_subspace.empty())
        j["input_subspace"] = report.input_subspace;
    j["seed"] = report.seed;
    j["inputs"] = report.n_inputs;
    json outs = json::array();
    for (const auto& rec : report.outcomes) {
        json o;
        o["outcome"] = rec.outcome_label;
        o["probability"] = round12(rec.probability);
        o["null"] = rec.is_null;
        if (rec.correction) {
            o["correction"] = rec.correction->word();
            o["global_phase"] = {round12(rec.correction->global_phase.real()),
                                 round12(rec.correction->global_phase.imag())};
        }
        if (!rec.is_null) o["post_fidelity"] = round12(rec.post_fidelity);
        outs.push_back(std::move(o));
    }
    j["outcomes"] = std::move(outs);
    j["null_outcome_count"] = report.null_outcome_count;
    j["distinct_corrections"] = report.distinct_corrections;
    j["min_post_fidelity"] = round12(report.min_post_fidelity);
    j["max_probability_spread"] = round12(report.max_probability_spread);
    j["corrections_input_independent"] = report.corrections_input_independent;
    j["success"] = report.success;
    return j.dump(2) + "\n";
}

std::string report_to_table_text(const ProtocolReport& report) {
    // Group outcomes by correction word, mirroring the reference layout.
    std::map<std::string, std::vector<std::string>> groups;
    std::vector<std::string> group_order;
    for (const auto& rec : report.outcomes) {
        const std::string key =
            rec.is_null ? "(null)" : (rec.correction ? rec.correction->word() : "(none)");
        if (!groups.count(key)) group_order.push_back(key);
        groups[key].push_back(rec.outcome_label);
    }
    std::ostringstream out;
    out << "protocol: " << report.protocol_name << "  carrier: "
        << report.carrier_label << "  basis: " << report.basis_name << "\n";
    out << "measurement outcome(s)                     correction\n";
    for (const auto& key : group_order) {
        std::string joined;
        for (const auto& l : groups[key]) {
            if (!joined.empty()) joined += ", ";
            joined += l;
        }
        if (joined.size() < 42) joined.resize(42, ' ');
        out << joined << " " << key << "\n";
    }
    out << "null outcomes: " << report.null_outcome_count
        << "  min post-correction fidelity: " << format_real(report.min_post_fidelity)
        << "  success: " << (report.success ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace qtele
