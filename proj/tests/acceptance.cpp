// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
//
// Integration gate: one pass/fail line per shipped guarantee. Exit status
// is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qtele/circuits.hpp"
#include "qtele/correlations.hpp"
#include "qtele/reports.hpp"
#include "qtele/teleport.hpp"

using namespace qtele;

namespace {

int g_failures = 0;
int g_index = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& fn) {
    ++g_index;
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(t1 - t0).count();
    if (!ok) ++g_failures;
    std::printf("[%2d] %s  %-58s (%.2f s)%s%s\n", g_index, ok ? "PASS" : "FAIL",
                name.c_str(), secs, detail.empty() ? "" : "  -- ",
                detail.c_str());
}

// --- criterion 1: signature tables ---------------------------------------

bool check_signature_tables(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    double worst_listed = 0;   // deviation from the printed +-1
    double worst_unlisted = 0; // leakage outside the printed set
    for (const char* id : {"I", "II", "V", "VI", "VIII", "X"}) {
        const auto& ref = signature_table(id);
        for (const auto& row : ref.rows) {
            const auto table =
                nonzero_scan(catalog_state(row.state_label), ref.particles,
                             row.state_label);
            std::map<std::string, double> values;
            for (const auto& r : table.rows) values[r.axes] = r.value;
            std::set<std::string> listed;
            for (std::size_t k = 0; k < ref.axis_columns.size(); ++k) {
                if (row.signs[k] == 0) continue;
                listed.insert(ref.axis_columns[k]);
                worst_listed = std::max(
                    worst_listed,
                    std::abs(values.at(ref.axis_columns[k]) - row.signs[k]));
            }
            for (const auto& [axes, value] : values)
                if (!listed.count(axes))
                    worst_unlisted = std::max(worst_unlisted, std::abs(value));
        }
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0).count();
    std::ostringstream ss;
    ss << "max listed dev " << worst_listed << ", max unlisted " << worst_unlisted;
    detail = ss.str();
    return worst_listed < 1e-10 && worst_unlisted < 1e-9 && secs < 1.0;
}

// --- criterion 2: correction tables --------------------------------------

bool check_correction_tables(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    int mismatches = 0;
    for (const char* id : {"III", "IV", "VII", "IX"}) {
        const auto& ref = correction_table(id);
        const auto protocol = builtin_protocol(ref.protocol);
        const auto report = run_random(protocol, 3, 1);
        std::map<std::string, std::string> discovered;
        for (const auto& rec : report.outcomes)
            discovered[rec.outcome_label] =
                rec.correction ? rec.correction->word() : "(none)";
        for (const auto& [outcome, word] : ref.rows)
            if (!words_equivalent_on_subspace(word, discovered.at(outcome),
                                              protocol.input_subspace))
                ++mismatches;
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0).count();
    detail = std::to_string(mismatches) + " row mismatches";
    return mismatches == 0 && secs < 1.0;
}

// --- criterion 3: teleportation fidelity over random inputs --------------

bool check_protocol_fidelity(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const char* names[] = {"single_ghz_chi",    "single_ghz_varphi",
                           "epr_ghz_varphi",    "single_varphi_ghz",
                           "two_qubit_phi4",    "two_qubit_varphi4"};
    double min_fidelity = 1.0;
    double worst_spread = 0.0;
    for (const char* name : names) {
        const auto protocol = builtin_protocol(name);
        const double uniform = 1.0 / static_cast<double>(
                                         protocol.measurement_basis.size());
        Rng rng(20260810);

        // corrections discovered once, then re-verified on every input
        const auto first = run(protocol, protocol.random_unknown(rng));
        for (int input = 1; input < 100; ++input) {
            const auto unknown = protocol.random_unknown(rng);
            const auto joint = compose(unknown, protocol);
            const auto outcomes = decompose(joint, protocol.measurement_basis,
                                            protocol.wiring.alice());
            for (std::size_t k = 0; k < outcomes.size(); ++k) {
                worst_spread = std::max(
                    worst_spread, std::abs(outcomes[k].probability - uniform));
                PauliWord word;
                const auto& op = *first.outcomes[k].correction;
                for (std::size_t q = 0; q < op.factors.size(); ++q)
                    word.set(static_cast<int>(q) + 1, op.factors[q]);
                const auto corrected = apply_pauli_word(*outcomes[k].bob_state, word);
                min_fidelity = std::min(min_fidelity, fidelity(unknown, corrected));
            }
        }
        for (const auto& rec : first.outcomes) {
            min_fidelity = std::min(min_fidelity, rec.post_fidelity);
            worst_spread =
                std::max(worst_spread, std::abs(rec.probability - uniform));
        }
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0).count();
    std::ostringstream ss;
    ss << "min fidelity " << min_fidelity << ", max spread " << worst_spread
       << ", " << secs << " s";
    detail = ss.str();
    return min_fidelity >= 1.0 - 1e-10 && worst_spread < 1e-10 && secs < 5.0;
}

// --- criterion 4: the cat-projection failure mode -------------------------

bool check_failure_mode(std::string& detail) {
    const auto stats =
        failure_analysis(builtin_protocol("single_ghz_ghz"), 100, 20260810);
    detail = std::to_string(stats.null_count) + " of 8 outcomes dead";
    return stats.null_count == 4;
}

// --- criterion 5: separability nulls --------------------------------------

bool check_separability(std::string& detail) {
    const auto examples = separable_examples();
    double worst = 0;
    double worst_fid = 1;
    for (const auto& ex : examples) {
        std::vector<int> wires;
        for (int q = 1; q <= ex.state.n_qubits(); ++q) wires.push_back(q);
        const auto table = nonzero_scan(ex.state, wires, ex.label);
        for (const auto& row : table.rows)
            worst = std::max(worst, std::abs(row.value));
        worst_fid = std::min(worst_fid, fidelity(ex.state, ex.product()));
    }
    std::ostringstream ss;
    ss << "max coefficient " << worst << ", factorization fidelity " << worst_fid;
    detail = ss.str();
    return worst < 1e-9 && worst_fid >= 1.0 - 1e-10;
}

// --- criterion 6: partition sum vs closed forms ----------------------------

bool check_cumulant_equivalence(std::string& detail) {
    Rng rng(424242);
    const Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    double worst = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const auto s = haar_state(4, rng);
        auto pick_axes = [&](int k) {
            std::vector<Pauli> out;
            for (int i = 0; i < k; ++i) out.push_back(axes[rng.next_u64() % 3]);
            return out;
        };
        const CorrelationSpec s2{{1 + static_cast<int>(rng.next_u64() % 2),
                                  3 + static_cast<int>(rng.next_u64() % 2)},
                                 pick_axes(2)};
        const CorrelationSpec s3{{1, 2, 3 + static_cast<int>(rng.next_u64() % 2)},
                                 pick_axes(3)};
        const CorrelationSpec s4{{1, 2, 3, 4}, pick_axes(4)};
        worst = std::max(worst, std::abs(cumulant_n(s, s2) - corr2(s, s2)));
        worst = std::max(worst, std::abs(cumulant_n(s, s3) - corr3(s, s3)));
        worst = std::max(worst, std::abs(cumulant_n(s, s4) - corr4(s, s4)));
    }
    std::ostringstream ss;
    ss << "max |partition - closed| = " << worst << " over 10000 states";
    detail = ss.str();
    return worst < 1e-10;
}

// --- criterion 7: gate pipelines ------------------------------------------

StateVector terms_state(int n, Complex a, Complex b, double scale,
                        const std::vector<std::pair<std::size_t, int>>& a_terms,
                        const std::vector<std::pair<std::size_t, int>>& b_terms) {
    std::vector<Complex> amps(std::size_t{1} << n, Complex{0, 0});
    for (const auto& [idx, sign] : a_terms) amps[idx] = a * scale * double(sign);
    for (const auto& [idx, sign] : b_terms) amps[idx] = b * scale * double(sign);
    return {n, std::move(amps)};
}

double diff(const StateVector& x, const StateVector& y) {
    double worst = 0;
    for (std::size_t i = 0; i < x.dim(); ++i)
        worst = std::max(worst, std::abs(x.amplitude(i) - y.amplitude(i)));
    return worst;
}

bool check_circuits(std::string& detail) {
    Rng rng(77070);
    double worst_stage = 0;
    double min_fid = 1.0;
    const double r = 1.0 / std::sqrt(2.0);

    // staged single-qubit network
    for (int trial = 0; trial < 10; ++trial) {
        const auto u = haar_state(1, rng);
        const Complex a = u.amplitude(0), b = u.amplitude(1);
        const auto input = tensor(u, catalog_state("ghz.1"));
        auto s = run_circuit(Circuit{4, {Gate::cnot(1, 3)}, {}}, input);
        worst_stage = std::max(
            worst_stage, diff(s, terms_state(4, a, b, r,
                                             {{0b0000, 1}, {0b0111, 1}},
                                             {{0b1010, 1}, {0b1101, 1}})));
        s = run_circuit(Circuit{4, {Gate::h(1)}, {}}, s);
        worst_stage = std::max(
            worst_stage,
            diff(s, terms_state(
                        4, a, b, 0.5,
                        {{0b0000, 1}, {0b1000, 1}, {0b0111, 1}, {0b1111, 1}},
                        {{0b0010, 1}, {0b1010, -1}, {0b0101, 1}, {0b1101, -1}})));
        s = run_circuit(Circuit{4, {Gate::h(2)}, {}}, s);
        worst_stage = std::max(
            worst_stage,
            diff(s, terms_state(4, a, b, 0.5 * r,
                                {{0b0000, 1}, {0b0100, 1}, {0b1000, 1},
                                 {0b1100, 1}, {0b0011, 1}, {0b0111, -1},
                                 {0b1011, 1}, {0b1111, -1}},
                                {{0b0010, 1}, {0b0110, 1}, {0b1010, -1},
                                 {0b1110, -1}, {0b0001, 1}, {0b0101, -1},
                                 {0b1001, -1}, {0b1101, 1}})));

        // gate classes restore the unknown
        const auto& ref = gate_table("XI");
        const auto outcomes = measure_outcomes(teleport_network("single_ghz"),
                                               input, {1, 2, 3});
        for (const auto& o : outcomes) {
            std::string cls;
            for (const auto& [bits, word] : ref.rows)
                if (bits == o.bits) cls = word;
            StateVector corrected = *o.conditional;
            for (auto it = cls.rbegin(); it != cls.rend(); ++it)
                corrected =
                    apply_pauli_word(corrected, PauliWord::single(1, pauli_from_char(*it)));
            min_fid = std::min(min_fid, fidelity(u, corrected));
        }
    }

    // staged pair network
    for (int trial = 0; trial < 10; ++trial) {
        const auto u = haar_state_in_span({"01", "10"}, rng);
        const Complex a = u.amplitude(1), b = u.amplitude(2);
        const auto input = tensor(u, catalog_state("ghz.1"));
        auto s = run_circuit(Circuit{5, {Gate::cnot(1, 3)}, {}}, input);
        worst_stage = std::max(
            worst_stage, diff(s, terms_state(5, a, b, r,
                                             {{0b01000, 1}, {0b01111, 1}},
                                             {{0b10100, 1}, {0b10011, 1}})));
        s = run_circuit(Circuit{5, {Gate::h(1)}, {}}, s);
        worst_stage = std::max(
            worst_stage,
            diff(s, terms_state(
                        5, a, b, 0.5,
                        {{0b01000, 1}, {0b11000, 1}, {0b01111, 1}, {0b11111, 1}},
                        {{0b00100, 1}, {0b10100, -1}, {0b00011, 1}, {0b10011, -1}})));
        s = run_circuit(Circuit{5, {Gate::h(2)}, {}}, s);
        worst_stage = std::max(
            worst_stage,
            diff(s, terms_state(5, a, b, 0.5 * r,
                                {{0b00000, 1}, {0b01000, -1}, {0b10000, 1},
                                 {0b11000, -1}, {0b00111, 1}, {0b01111, -1},
                                 {0b10111, 1}, {0b11111, -1}},
                                {{0b00100, 1}, {0b01100, 1}, {0b10100, -1},
                                 {0b11100, -1}, {0b00011, 1}, {0b01011, 1},
                                 {0b10011, -1}, {0b11011, -1}})));

        const auto& ref = gate_table("XII");
        const auto outcomes =
            measure_outcomes(teleport_network("epr_ghz"), input, {1, 2, 3});
        for (const auto& o : outcomes) {
            std::string cls;
            for (const auto& [bits, word] : ref.rows)
                if (bits == o.bits) cls = word;
            PauliWord word;
            word.set(1, pauli_from_char(cls[0]));
            word.set(2, pauli_from_char(cls[1]));
            min_fid = std::min(min_fid, fidelity(u, apply_pauli_word(*o.conditional, word)));
        }
    }

    // gate-level vs projective receiver states, as multisets up to phase
    const auto protocol = builtin_protocol("single_ghz_chi");
    const auto network = teleport_network("single_ghz");
    int unmatched = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto u = haar_state(1, rng);
        const auto input = tensor(u, catalog_state("ghz.1"));
        const auto gate_outcomes = measure_outcomes(network, input, {1, 2, 3});
        const auto proj_outcomes =
            decompose(input, protocol.measurement_basis, {1, 2, 3});
        std::vector<bool> used(proj_outcomes.size(), false);
        for (const auto& g : gate_outcomes) {
            bool matched = false;
            for (std::size_t j = 0; j < proj_outcomes.size(); ++j) {
                if (used[j]) continue;
                if (std::abs(std::abs(inner(*proj_outcomes[j].bob_state,
                                            *g.conditional)) - 1.0) < 1e-9) {
                    used[j] = true;
                    matched = true;
                    break;
                }
            }
            if (!matched) ++unmatched;
        }
    }

    std::ostringstream ss;
    ss << "max stage deviation " << worst_stage << ", min class fidelity "
       << min_fid << ", unmatched " << unmatched;
    detail = ss.str();
    return worst_stage < 1e-12 && min_fid >= 1.0 - 1e-10 && unmatched == 0;
}

// --- criterion 8: six-qubit generalization ---------------------------------

bool check_generalization(std::string& detail) {
    const auto gen6 = generalized_basis(3);
    const double offdiag = gen6.max_gram_offdiag();

    // Embedded pair teleport: share gen6.1 over wires 3..8 (sender holds
    // 3,4,5; receiver 6,7,8). Reading the correlated outer wires 3 and 8 in
    // the computational basis collapses the inner four wires onto a member
    // of the four-qubit family, which then carries a full two-qubit
    // teleportation.
    Rng rng(808);
    double min_fid = 1.0;
    double outer_mass = 0;
    const auto first_family = four_particle_set(FourQubitFamily::First);
    for (int trial = 0; trial < 20; ++trial) {
        const auto unknown = haar_state(2, rng);
        const auto joint = tensor(unknown, catalog_state("gen6.1"));  // 8 wires
        for (int outer = 0; outer <= 1; ++outer) {
            // project wires 3 and 8 onto |outer>, drop them
            std::vector<Complex> reduced(64, Complex{0, 0});
            double mass = 0;
            for (std::size_t idx = 0; idx < joint.dim(); ++idx) {
                if (StateVector::bit(idx, 3, 8) != outer) continue;
                if (StateVector::bit(idx, 8, 8) != outer) continue;
                std::size_t out = 0;
                for (int q : {1, 2, 4, 5, 6, 7})
                    out = (out << 1) | static_cast<std::size_t>(
                                           StateVector::bit(idx, q, 8));
                reduced[out] = joint.amplitude(idx);
                mass += std::norm(joint.amplitude(idx));
            }
            outer_mass += mass;
            StateVector collapsed(6, std::move(reduced));
            collapsed.normalize();
            const auto outcomes =
                decompose(collapsed, first_family, {1, 2, 3, 4});
            for (const auto& rec : outcomes) {
                const auto op = find_correction(*rec.bob_state, unknown);
                if (!op) return false;
                PauliWord word;
                for (std::size_t q = 0; q < op->factors.size(); ++q)
                    word.set(static_cast<int>(q) + 1, op->factors[q]);
                min_fid = std::min(
                    min_fid, fidelity(unknown, apply_pauli_word(*rec.bob_state, word)));
            }
        }
    }
    outer_mass /= 20;

    std::ostringstream ss;
    ss << "gram offdiag " << offdiag << ", outer branch mass " << outer_mass
       << ", min fidelity " << min_fid;
    detail = ss.str();
    return offdiag < 1e-12 && std::abs(outer_mass - 1.0) < 1e-10 &&
           min_fid >= 1.0 - 1e-10;
}

// --- criterion 9: tracing reports ------------------------------------------

bool check_tracing_reports(std::string& detail) {
    const double cat = concurrence(partial_trace(catalog_state("ghz.1"), {1, 2}));
    const double chi = concurrence(partial_trace(catalog_state("chi.1"), {1, 2}));

    std::printf("     trace report: cat state, third wire traced -> "
                "concurrence %.12f\n", cat);
    std::printf("     trace report: chi.1, third wire traced -> "
                "concurrence %.12f\n", chi);
    if (chi < 1e-9)
        std::printf("     NOTE: the chi family is advertised as keeping the "
                    "remaining pair entangled after the trace; the measured "
                    "concurrence is zero (classical correlation only), so "
                    "that claim is reported, not asserted.\n");

    // four-qubit families: traced remainders, values reported verbatim
    for (const char* label : {"phi4.1", "varphi4.1"}) {
        for (const auto& keep :
             std::vector<std::vector<int>>{{2, 3}, {1, 4}, {2, 4}}) {
            const double c = concurrence(partial_trace(catalog_state(label), keep));
            std::printf("     trace report: %s keep {%d,%d} -> concurrence %.12f\n",
                        label, keep[0], keep[1], c);
        }
        for (const auto& keep :
             std::vector<std::vector<int>>{{1, 3, 4}, {1, 2, 3}}) {
            const auto three = trace_report(label, keep);
            std::printf("     trace report: %s keep {%d,%d,%d} -> %zu non-zero "
                        "cumulants, pair concurrences", label, keep[0], keep[1],
                        keep[2], three.nonzero_signature.size());
            for (const auto& [pair, value] : three.pair_concurrences)
                std::printf(" (%s)=%.6f", pair.c_str(), value);
            std::printf("\n");
        }
    }

    std::ostringstream ss;
    ss << "cat remainder " << cat << " (asserted 0), chi remainder " << chi
       << " (reported, discrepancy flagged)";
    detail = ss.str();
    return std::abs(cat) < 1e-10;
}

// --- criterion 10: byte-determinism of the CLI ------------------------------

bool check_determinism(std::string& detail) {
    namespace fs = std::filesystem;
    const fs::path tmp = fs::temp_directory_path();
    auto capture = [&](const std::string& args, const fs::path& out) {
        const std::string cmd = std::string(QTELE_CLI_PATH) + " " + args +
                                " > " + out.string() + " 2>/dev/null";
        return std::system(cmd.c_str()) == 0;
    };
    auto read = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };

    const std::string cmds[] = {
        "tables --id IX --format json --seed 5",
        "tables --id II --format csv",
        std::string("teleport --protocol ") + QTELE_DATA_DIR +
            "/protocols/two_qubit_varphi4.json --random 5 --seed 21",
    };
    bool ok = true;
    for (const auto& cmd : cmds) {
        const fs::path a = tmp / "qtele_det_a.txt";
        const fs::path b = tmp / "qtele_det_b.txt";
        if (!capture(cmd, a) || !capture(cmd, b)) ok = false;
        if (read(a) != read(b)) ok = false;
        fs::remove(a);
        fs::remove(b);
    }
    detail = ok ? "three command pairs byte-identical" : "byte mismatch";
    return ok;
}

}  // namespace

int main() {
    std::printf("acceptance suite (version %s)\n",
                std::string(kVersion).c_str());
    criterion("signature tables I/II/V/VI/VIII/X reproduce exactly",
              check_signature_tables);
    criterion("correction tables III/IV/VII/IX match row for row",
              check_correction_tables);
    criterion("six protocols reach fidelity 1 on 100 random inputs",
              check_protocol_fidelity);
    criterion("cat-projection configuration loses 4 of 8 outcomes",
              check_failure_mode);
    criterion("product states carry no multi-particle cumulants",
              check_separability);
    criterion("partition sum equals closed forms on 10000 states",
              check_cumulant_equivalence);
    criterion("gate pipelines match staged amplitudes and gate classes",
              check_circuits);
    criterion("six-qubit family: orthogonal and teleports a pair",
              check_generalization);
    criterion("tracing reports computed; cat remainder separable",
              check_tracing_reports);
    criterion("seeded CLI reports are byte-identical", check_determinism);

    if (g_failures == 0)
        std::printf("all %d criteria passed\n", g_index);
    else
        std::printf("%d of %d criteria FAILED\n", g_failures, g_index);
    return g_failures;
}
