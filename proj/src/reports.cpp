// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qtele/reports.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qtele/circuits.hpp"
#include "qtele/format.hpp"

namespace qtele {

namespace {

using nlohmann::json;

SignatureTableRef sig_I() {
    return {"I",
            {"xx", "yy", "zz"},
            {1, 2},
            {{"bell.psi-", {-1, -1, -1}},
             {"bell.psi+", {+1, +1, -1}},
             {"bell.phi-", {-1, +1, +1}},
             {"bell.phi+", {+1, -1, +1}}}};
}

SignatureTableRef sig_II() {
    return {"II",
            {"xxx", "yyx", "yxy", "xyy", "xxz", "yyz"},
            {1, 2, 3},
            {{"ghz.1", {+1, -1, -1, -1, 0, 0}},
             {"ghz.2", {-1, +1, +1, +1, 0, 0}},
             {"ghz.7", {+1, -1, +1, +1, 0, 0}},
             {"ghz.8", {-1, +1, -1, -1, 0, 0}},
             {"ghz.3", {+1, +1, -1, +1, 0, 0}},
             {"ghz.4", {-1, -1, +1, -1, 0, 0}},
             {"ghz.5", {+1, +1, +1, -1, 0, 0}},
             {"ghz.6", {-1, -1, -1, +1, 0, 0}},
             {"chi.1", {0, 0, +1, +1, +1, -1}},
             {"chi.2", {0, 0, -1, -1, +1, -1}},
             {"chi.3", {0, 0, -1, -1, -1, +1}},
             {"chi.4", {0, 0, +1, +1, -1, +1}},
             {"chi.5", {0, 0, +1, -1, +1, +1}},
             {"chi.6", {0, 0, -1, +1, +1, +1}},
             {"chi.7", {0, 0, -1, +1, -1, -1}},
             {"chi.8", {0, 0, +1, -1, -1, -1}}}};
}

SignatureTableRef sig_V() {
    SignatureTableRef t{"V", {"xyyx", "xzzx", "zyyz", "zzzz"}, {1, 2, 3, 4}, {}};
    const int signs[16][4] = {
        {-1, +1, -1, +1}, {+1, -1, +1, -1}, {-1, -1, -1, -1}, {+1, +1, +1, +1},
        {-1, +1, +1, -1}, {+1, -1, -1, +1}, {-1, -1, +1, +1}, {+1, +1, -1, -1},
        {+1, -1, +1, -1}, {-1, +1, -1, +1}, {+1, +1, +1, +1}, {-1, -1, -1, -1},
        {+1, -1, -1, +1}, {-1, +1, +1, -1}, {+1, +1, -1, -1}, {-1, -1, +1, +1}};
    for (int k = 0; k < 16; ++k)
        t.rows.push_back({"yeo_chua." + std::to_string(k + 1),
                          {signs[k][0], signs[k][1], signs[k][2], signs[k][3]}});
    return t;
}

SignatureTableRef sig_VI() {
    SignatureTableRef t{"VI", {"xxyy", "xyxy", "yxyx", "yyxx"}, {1, 2, 3, 4}, {}};
    const int signs[16][4] = {
        {+1, +1, +1, +1}, {-1, -1, -1, -1}, {-1, -1, +1, +1}, {+1, +1, -1, -1},
        {-1, +1, -1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {-1, +1, +1, -1},
        {+1, +1, -1, -1}, {-1, -1, +1, +1}, {-1, -1, -1, -1}, {+1, +1, +1, +1},
        {-1, +1, +1, -1}, {+1, -1, -1, +1}, {+1, -1, +1, -1}, {-1, +1, -1, +1}};
    for (int k = 0; k < 16; ++k)
        t.rows.push_back({"phi4." + std::to_string(k + 1),
                          {signs[k][0], signs[k][1], signs[k][2], signs[k][3]}});
    return t;
}

SignatureTableRef sig_VIII() {
    SignatureTableRef t{"VIII", {"xyyz", "xzyy", "yyxz", "yzxy"}, {1, 2, 3, 4}, {}};
    const int signs[16][4] = {
        {-1, -1, -1, -1}, {-1, +1, -1, +1}, {+1, +1, +1, +1}, {+1, -1, +1, -1},
        {+1, +1, +1, +1}, {+1, -1, +1, -1}, {-1, -1, -1, -1}, {-1, +1, -1, +1},
        {-1, -1, +1, +1}, {-1, +1, +1, -1}, {+1, +1, -1, -1}, {+1, -1, -1, +1},
        {+1, +1, -1, -1}, {+1, -1, -1, +1}, {-1, -1, +1, +1}, {-1, +1, +1, -1}};
    for (int k = 0; k < 16; ++k)
        t.rows.push_back({"varphi4." + std::to_string(k + 1),
                          {signs[k][0], signs[k][1], signs[k][2], signs[k][3]}});
    return t;
}

SignatureTableRef sig_X() {
    SignatureTableRef t{"X", {"xxxz", "xzxx", "yxyz", "yzyx"}, {1, 2, 3, 4}, {}};
    const int signs[16][4] = {
        {+1, -1, -1, +1}, {+1, +1, -1, -1}, {-1, +1, +1, -1}, {-1, -1, +1, +1},
        {-1, -1, +1, +1}, {-1, +1, +1, -1}, {+1, +1, -1, -1}, {+1, -1, -1, +1},
        {+1, +1, +1, +1}, {+1, -1, +1, -1}, {-1, -1, -1, -1}, {-1, +1, -1, +1},
        {-1, +1, -1, +1}, {-1, -1, -1, -1}, {+1, -1, +1, -1}, {+1, +1, +1, +1}};
    for (int k = 0; k < 16; ++k)
        t.rows.push_back({"varphi4_prime." + std::to_string(k + 1),
                          {signs[k][0], signs[k][1], signs[k][2], signs[k][3]}});
    return t;
}

CorrectionTableRef corr_III() {
    return {"III",
            "single_ghz_chi",
            {{"chi.1", "Z"}, {"chi.2", "I"}, {"chi.3", "I"}, {"chi.4", "Z"},
             {"chi.5", "X"}, {"chi.6", "Y"}, {"chi.7", "Y"}, {"chi.8", "X"}}};
}

CorrectionTableRef corr_IV() {
    return {"IV",
            "epr_ghz_varphi",
            {{"varphi.1", "XI"}, {"varphi.2", "XZ"}, {"varphi.3", "XZ"},
             {"varphi.4", "XI"}, {"varphi.5", "IX"}, {"varphi.6", "ZX"},
             {"varphi.7", "ZX"}, {"varphi.8", "IX"}}};
}

CorrectionTableRef corr_VII() {
    CorrectionTableRef t{"VII", "two_qubit_phi4", {}};
    const char* words[16] = {"II", "ZI", "XZ", "YZ", "ZX", "IX", "YY", "XY",
                             "XI", "YI", "IZ", "ZZ", "YX", "XX", "ZY", "IY"};
    for (int k = 0; k < 16; ++k)
        t.rows.emplace_back("phi4." + std::to_string(k + 1), words[k]);
    return t;
}

CorrectionTableRef corr_IX() {
    CorrectionTableRef t{"IX", "two_qubit_varphi4", {}};
    const char* words[16] = {"II", "ZZ", "ZI", "IZ", "IX", "ZY", "ZX", "IY",
                             "XI", "YZ", "YI", "XZ", "XX", "YY", "YX", "XY"};
    for (int k = 0; k < 16; ++k)
        t.rows.emplace_back("varphi4." + std::to_string(k + 1), words[k]);
    return t;
}

GateTableRef gate_XI() {
    return {"XI",
            "single_ghz",
            "ghz",
            {{"000", "I"}, {"110", "I"}, {"001", "X"}, {"111", "X"},
             {"010", "Z"}, {"100", "Z"}, {"101", "ZX"}, {"011", "ZX"}}};
}

GateTableRef gate_XII() {
    return {"XII",
            "epr_ghz",
            "ghz",
            {{"000", "IX"}, {"110", "IX"}, {"001", "XI"}, {"111", "XI"},
             {"010", "ZX"}, {"100", "ZX"}, {"101", "XZ"}, {"011", "XZ"}}};
}

std::string sign_cell(int sign) {
    if (sign > 0) return "+1";
    if (sign < 0) return "-1";
    return "";
}

Matrix word_matrix(const std::string& word) {
    Matrix m = pauli_matrix(pauli_from_char(word.at(0)));
    for (std::size_t k = 1; k < word.size(); ++k) {
        const Matrix& f = pauli_matrix(pauli_from_char(word[k]));
        Matrix next(m.rows() * 2, m.cols() * 2);
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                next.block(2 * i, 2 * j, 2, 2) = m(i, j) * f;
        m = std::move(next);
    }
    return m;
}

}  // namespace

bool words_equivalent_on_subspace(const std::string& a, const std::string& b,
                                  const std::vector<std::string>& subspace) {
    if (a.size() != b.size())
        throw std::invalid_argument("words_equivalent_on_subspace: arity");
    if (a == b) return true;
    const Matrix m = word_matrix(a).adjoint() * word_matrix(b);
    std::vector<std::size_t> indices;
    if (subspace.empty()) {
        for (std::size_t i = 0; i < (std::size_t{1} << a.size()); ++i)
            indices.push_back(i);
    } else {
        for (const auto& ket : subspace) {
            std::size_t idx = 0;
            for (char c : ket) idx = (idx << 1) | static_cast<std::size_t>(c == '1');
            indices.push_back(idx);
        }
    }
    Complex phase = 0;
    for (std::size_t r : indices) {
        for (std::size_t c : indices) {
            const Complex v = m(static_cast<Eigen::Index>(r),
                                static_cast<Eigen::Index>(c));
            if (r == c) {
                if (std::abs(std::abs(v) - 1.0) > 1e-9) return false;
                if (phase == Complex{0, 0})
                    phase = v;
                else if (std::abs(v - phase) > 1e-9)
                    return false;
            } else if (std::abs(v) > 1e-9) {
                return false;
            }
        }
    }
    return true;
}

const SignatureTableRef& signature_table(std::string_view id) {
    static const std::map<std::string, SignatureTableRef> tables = [] {
        std::map<std::string, SignatureTableRef> m;
        for (auto t : {sig_I(), sig_II(), sig_V(), sig_VI(), sig_VIII(), sig_X()})
            m.emplace(t.id, std::move(t));
        return m;
    }();
    const auto it = tables.find(std::string(id));
    if (it == tables.end())
        throw std::invalid_argument("no signature table " + std::string(id));
    return it->second;
}

const CorrectionTableRef& correction_table(std::string_view id) {
    static const std::map<std::string, CorrectionTableRef> tables = [] {
        std::map<std::string, CorrectionTableRef> m;
        for (auto t : {corr_III(), corr_IV(), corr_VII(), corr_IX()})
            m.emplace(t.id, std::move(t));
        return m;
    }();
    const auto it = tables.find(std::string(id));
    if (it == tables.end())
        throw std::invalid_argument("no correction table " + std::string(id));
    return it->second;
}

const GateTableRef& gate_table(std::string_view id) {
    static const std::map<std::string, GateTableRef> tables = [] {
        std::map<std::string, GateTableRef> m;
        for (auto t : {gate_XI(), gate_XII()}) m.emplace(t.id, std::move(t));
        return m;
    }();
    const auto it = tables.find(std::string(id));
    if (it == tables.end())
        throw std::invalid_argument("no gate table " + std::string(id));
    return it->second;
}

std::vector<std::string> table_ids() {
    return {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X", "XI",
            "XII"};
}

namespace {

struct TableData {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    bool ok = true;
    std::vector<std::string> diagnostics;
};

// Pair rows of a signature table that differ only in the trailing member
// index, for the +- presentation of cat-state rows.
bool is_plus_minus_pair(const SignatureRow& a, const SignatureRow& b) {
    for (std::size_t k = 0; k < a.signs.size(); ++k)
        if (a.signs[k] != -b.signs[k]) return false;
    return true;
}

TableData build_signature(const SignatureTableRef& ref) {
    TableData data;
    data.columns.push_back("state");
    for (const auto& c : ref.axis_columns) data.columns.push_back("C_" + c);

    // Verify every row against a full 3^N scan.
    for (const auto& row : ref.rows) {
        const auto& state = catalog_state(row.state_label);
        const auto table = nonzero_scan(state, ref.particles, row.state_label);
        std::set<std::string> expected_nonzero;
        for (std::size_t k = 0; k < ref.axis_columns.size(); ++k)
            if (row.signs[k] != 0) expected_nonzero.insert(ref.axis_columns[k]);
        for (const auto& r : table.rows) {
            const bool should = expected_nonzero.count(r.axes) > 0;
            if (should) {
                const auto col = std::find(ref.axis_columns.begin(),
                                           ref.axis_columns.end(), r.axes) -
                                 ref.axis_columns.begin();
                const double want = row.signs[static_cast<std::size_t>(col)];
                if (std::abs(r.value - want) > kFidelityTol) {
                    data.ok = false;
                    data.diagnostics.push_back(row.state_label + " " + r.axes +
                                               ": computed " + format_real(r.value) +
                                               ", expected " + format_real(want));
                }
            } else if (std::abs(r.value) >= kNonzeroThreshold) {
                data.ok = false;
                data.diagnostics.push_back(row.state_label + " " + r.axes +
                                           ": unexpected non-zero " +
                                           format_real(r.value));
            }
        }
    }

    // Emit rows, merging exact +- pairs into one printed row.
    for (std::size_t i = 0; i < ref.rows.size(); ++i) {
        const auto& row = ref.rows[i];
        if (i + 1 < ref.rows.size() &&
            is_plus_minus_pair(row, ref.rows[i + 1]) &&
            row.state_label.substr(0, row.state_label.find('.')) == "ghz") {
            std::vector<std::string> cells{row.state_label + "/" +
                                           ref.rows[i + 1].state_label};
            for (int s : row.signs)
                cells.push_back(s == 0 ? "" : (s > 0 ? "+-1" : "-+1"));
            data.rows.push_back(std::move(cells));
            ++i;
            continue;
        }
        std::vector<std::string> cells{row.state_label};
        for (int s : row.signs) cells.push_back(sign_cell(s));
        data.rows.push_back(std::move(cells));
    }
    return data;
}

TableData build_correction(const CorrectionTableRef& ref, std::uint64_t seed) {
    TableData data;
    data.columns = {"measurement_outcome", "correction"};

    const Protocol protocol = builtin_protocol(ref.protocol);
    const ProtocolReport report = run_random(protocol, 3, seed);

    std::map<std::string, std::string> discovered;
    for (const auto& rec : report.outcomes)
        discovered[rec.outcome_label] =
            rec.correction ? rec.correction->word() : "(none)";
    if (!report.success) {
        data.ok = false;
        data.diagnostics.push_back(ref.protocol + ": protocol run failed");
    }

    for (const auto& [outcome, word] : ref.rows) {
        const auto it = discovered.find(outcome);
        if (it == discovered.end()) {
            data.ok = false;
            data.diagnostics.push_back(outcome + ": outcome missing from run");
            continue;
        }
        if (!words_equivalent_on_subspace(word, it->second,
                                          protocol.input_subspace)) {
            data.ok = false;
            data.diagnostics.push_back(outcome + ": discovered " + it->second +
                                       ", expected " + word);
        }
    }

    // Group outcomes sharing a reference word, preserving first-seen order.
    std::vector<std::pair<std::string, std::string>> groups;
    for (const auto& [outcome, word] : ref.rows) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.second == word; });
        if (it == groups.end())
            groups.emplace_back(outcome, word);
        else
            it->first += ", " + outcome;
    }
    for (const auto& [outcomes, word] : groups)
        data.rows.push_back({outcomes, word});
    return data;
}

TableData build_gate(const GateTableRef& ref, std::uint64_t seed) {
    TableData data;
    data.columns = {"measurement_outcome", "gates"};

    // Compose the unknown with the prepared carrier and push it through the
    // measurement network, then check each frozen gate class restores the
    // input on the receiver's wires.
    const Circuit network = teleport_network(ref.network);
    const Circuit prep = prepare(ref.prepared_carrier);
    const StateVector carrier = run_circuit(prep, StateVector(prep.n_qubits));
    const int unknown_arity = network.n_qubits - prep.n_qubits;

    Rng rng(seed);
    for (int trial = 0; trial < 3; ++trial) {
        const StateVector unknown =
            ref.network == "epr_ghz"
                ? haar_state_in_span({"01", "10"}, rng)
                : haar_state(unknown_arity, rng);
        const StateVector input = tensor(unknown, carrier);
        const auto outcomes = measure_outcomes(network, input, network.measured);
        for (const auto& o : outcomes) {
            const auto it = std::find_if(
                ref.rows.begin(), ref.rows.end(),
                [&](const auto& r) { return r.first == o.bits; });
            if (it == ref.rows.end()) {
                if (o.probability > kNullProbability) {
                    data.ok = false;
                    data.diagnostics.push_back(o.bits + ": unexpected live outcome");
                }
                continue;
            }
            if (!o.conditional) {
                data.ok = false;
                data.diagnostics.push_back(o.bits + ": dead outcome");
                continue;
            }
            // On a single receiver wire "ZX" means X first, then Z; for two
            // wires the word has one letter per wire.
            StateVector corrected = *o.conditional;
            if (corrected.n_qubits() == 1) {
                for (auto rit = it->second.rbegin(); rit != it->second.rend(); ++rit)
                    corrected = apply_pauli_word(
                        corrected, PauliWord::single(1, pauli_from_char(*rit)));
            } else {
                PauliWord word;
                for (std::size_t k = 0; k < it->second.size(); ++k)
                    word.set(static_cast<int>(k) + 1,
                             pauli_from_char(it->second[k]));
                corrected = apply_pauli_word(corrected, word);
            }
            const double f = fidelity(unknown, corrected);
            if (f < 1.0 - kFidelityTol) {
                data.ok = false;
                data.diagnostics.push_back(o.bits + ": post-gate fidelity " +
                                           format_real(f));
            }
        }
    }

    // Group bitstrings by gate class for the printed table.
    std::vector<std::pair<std::string, std::string>> groups;
    for (const auto& [bits, word] : ref.rows) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.second == word; });
        if (it == groups.end())
            groups.emplace_back(bits, word);
        else
            it->first += ", " + bits;
    }
    for (const auto& [bits, word] : groups) data.rows.push_back({bits, word});
    return data;
}

std::string render_csv(const TableData& data) {
    std::string out = csv_line(data.columns);
    for (const auto& row : data.rows) out += csv_line(row);
    return out;
}

std::string render_json(const TableData& data, std::string_view id,
                        std::uint64_t seed) {
    json j;
    j["table"] = std::string(id);
    j["provenance"] = {{"version", std::string(kVersion)}, {"seed", seed}};
    j["columns"] = data.columns;
    json rows = json::array();
    for (const auto& row : data.rows) rows.push_back(row);
    j["rows"] = std::move(rows);
    j["verified"] = data.ok;
    if (!data.ok) j["diagnostics"] = data.diagnostics;
    return j.dump(2) + "\n";
}

std::string render_text(const TableData& data, std::string_view id) {
    std::vector<std::size_t> widths(data.columns.size());
    for (std::size_t c = 0; c < data.columns.size(); ++c)
        widths[c] = data.columns[c].size();
    for (const auto& row : data.rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());

    std::ostringstream out;
    out << "table " << id << "\n";
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            cell.resize(widths[c], ' ');
            out << cell << (c + 1 < row.size() ? "  " : "");
        }
        out << "\n";
    };
    emit(data.columns);
    for (const auto& row : data.rows) emit(row);
    return out.str();
}

}  // namespace

ReportBundle make_table_report(std::string_view table_id,
                               std::string_view format, std::uint64_t seed) {
    TableData data;
    const std::string id(table_id);
    if (id == "I" || id == "II" || id == "V" || id == "VI" || id == "VIII" ||
        id == "X")
        data = build_signature(signature_table(id));
    else if (id == "III" || id == "IV" || id == "VII" || id == "IX")
        data = build_correction(correction_table(id), seed);
    else if (id == "XI" || id == "XII")
        data = build_gate(gate_table(id), seed);
    else
        throw std::invalid_argument("unknown table id: " + id);

    ReportBundle bundle;
    bundle.table_id = id;
    bundle.format = std::string(format);
    bundle.ok = data.ok;
    bundle.diagnostics = data.diagnostics;
    if (format == "csv")
        bundle.payload = render_csv(data);
    else if (format == "json")
        bundle.payload = render_json(data, id, seed);
    else if (format == "text")
        bundle.payload = render_text(data, id);
    else
        throw std::invalid_argument("unknown format: " + std::string(format));
    return bundle;
}

std::string correlation_table_csv(const CorrelationTable& table) {
    std::string out =
        csv_line({"state_label", "particles", "axes", "value", "is_nonzero"});
    for (const auto& row : table.rows)
        out += csv_line({row.state_label, row.particles, row.axes,
                         format_real(row.value), row.is_nonzero ? "1" : "0"});
    return out;
}

std::string correlation_table_json(const CorrelationTable& table) {
    json j;
    j["threshold"] = table.threshold;
    json rows = json::array();
    for (const auto& row : table.rows)
        rows.push_back({{"state_label", row.state_label},
                        {"particles", row.particles},
                        {"axes", row.axes},
                        {"value", round12(row.value)},
                        {"is_nonzero", row.is_nonzero}});
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

TraceReport trace_report(std::string_view state_label,
                         const std::vector<int>& keep) {
    const StateVector& state = catalog_state(state_label);
    const DensityMatrix remainder = partial_trace(state, keep);
    TraceReport report;
    report.state_label = std::string(state_label);
    report.kept = keep;
    report.n_kept = remainder.n_qubits();

    if (remainder.n_qubits() == 2) {
        report.concurrence_value = concurrence(remainder);
    } else {
        std::vector<int> wires(static_cast<std::size_t>(remainder.n_qubits()));
        for (int q = 1; q <= remainder.n_qubits(); ++q)
            wires[static_cast<std::size_t>(q - 1)] = q;
        const auto table = nonzero_scan(remainder, wires,
                                        std::string(state_label) + ".traced");
        report.nonzero_signature = table.nonzero();
        for (int a = 1; a <= remainder.n_qubits(); ++a)
            for (int b = a + 1; b <= remainder.n_qubits(); ++b) {
                const auto pair = partial_trace(remainder, {a, b});
                report.pair_concurrences.emplace_back(
                    std::to_string(a) + "," + std::to_string(b),
                    concurrence(pair));
            }
    }
    return report;
}

std::string trace_report_json(const TraceReport& report) {
    json j;
    j["state"] = report.state_label;
    j["kept_qubits"] = report.kept;
    if (report.concurrence_value >= 0)
        j["concurrence"] = round12(report.concurrence_value);
    if (!report.pair_concurrences.empty()) {
        json pc = json::object();
        for (const auto& [pair, value] : report.pair_concurrences)
            pc[pair] = round12(value);
        j["pair_concurrences"] = std::move(pc);
    }
    if (!report.nonzero_signature.empty()) {
        json sig = json::object();
        for (const auto& [axes, value] : report.nonzero_signature)
            sig[axes] = round12(value);
        j["nonzero_signature"] = std::move(sig);
    }
    return j.dump(2) + "\n";
}

}  // namespace qtele
