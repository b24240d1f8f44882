// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
//
// Command-line surface: reference-table reports, protocol runs, correlation
// scans, basis fixtures and circuit execution.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or schema error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtele/bases.hpp"
#include "qtele/circuits.hpp"
#include "qtele/correlations.hpp"
#include "qtele/format.hpp"
#include "qtele/reports.hpp"
#include "qtele/teleport.hpp"

namespace {

using nlohmann::json;
using namespace qtele;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --out is resolved against QTELE_OUT_DIR when relative.
void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
        return;
    }
    std::filesystem::path p(out_path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("QTELE_OUT_DIR")) p = std::filesystem::path(dir) / p;
    }
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << payload;
}

std::vector<int> parse_particles(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw std::runtime_error("empty particle list");
    return out;
}

StateVector state_from_amplitude_file(const std::string& path) {
    const json j = json::parse(read_file(path));
    const auto& arr = j.at("amplitudes");
    std::vector<Complex> amps;
    for (const auto& cell : arr)
        amps.emplace_back(cell.at(0).get<double>(), cell.at(1).get<double>());
    int n = 0;
    while ((std::size_t{1} << n) < amps.size()) ++n;
    StateVector s(n, std::move(amps));
    return s.normalize();
}

// Exact dyadic form of catalog amplitudes: value = (a + i b) / sqrt(2)^p.
json exact_amplitude(Complex v) {
    for (int p = 0; p <= 30; ++p) {
        const double scale = std::pow(std::sqrt(2.0), p);
        const double re = v.real() * scale;
        const double im = v.imag() * scale;
        const double rre = std::round(re);
        const double rim = std::round(im);
        if (std::abs(re - rre) < 1e-9 && std::abs(im - rim) < 1e-9)
            return json::array({static_cast<long long>(rre),
                                static_cast<long long>(rim), p});
    }
    throw std::runtime_error("amplitude is not dyadic in sqrt(2)");
}

json basis_to_exact_json(const BasisSet& set) {
    json j;
    j["name"] = set.name;
    j["n_qubits"] = set.n_qubits;
    j["amplitude_encoding"] = "[a, b, p] means (a + i b) / sqrt(2)^p";
    json members = json::array();
    for (const auto& [label, state] : set.members) {
        json m;
        m["label"] = label;
        json amps = json::array();
        for (const Complex& v : state.amplitudes()) amps.push_back(exact_amplitude(v));
        m["amplitudes"] = std::move(amps);
        members.push_back(std::move(m));
    }
    j["members"] = std::move(members);

    // chi4 is a re-expression of varphi4: record which member it equals and
    // with which phase.
    if (set.name == "chi4") {
        const auto other = four_particle_set(FourQubitFamily::Second);
        const auto matches = match_up_to_phase(set, other);
        json map = json::array();
        for (std::size_t k = 0; k < matches.size(); ++k)
            map.push_back({{"member", set.members[k].first},
                           {"equals", other.members[matches[k].index_in_b].first},
                           {"phase", {round12(matches[k].phase.real()),
                                      round12(matches[k].phase.imag())}}});
        j["phase_map"] = std::move(map);
    }
    return j;
}

int check_basis_file(const std::string& path) {
    const json j = json::parse(read_file(path));
    const int n = j.at("n_qubits").get<int>();
    BasisSet set;
    set.name = j.value("name", "file");
    set.n_qubits = n;
    for (const auto& m : j.at("members")) {
        std::vector<Complex> amps;
        for (const auto& cell : m.at("amplitudes")) {
            const double a = cell.at(0).get<double>();
            const double b = cell.at(1).get<double>();
            const double p = cell.at(2).get<double>();
            const double scale = std::pow(std::sqrt(2.0), p);
            amps.emplace_back(a / scale, b / scale);
        }
        set.members.emplace_back(m.at("label").get<std::string>(),
                                 StateVector(n, std::move(amps)));
    }
    const double offdiag = set.max_gram_offdiag();
    const double norm_err = set.max_norm_error();
    std::cout << "members: " << set.members.size()
              << "  max |<i|j>| off-diagonal: " << format_real(offdiag)
              << "  max norm error: " << format_real(norm_err) << "\n";
    if (offdiag > kAlgebraTol || norm_err > kAlgebraTol) {
        std::cerr << "basis check failed: not orthonormal within 1e-12\n";
        return kExitMismatch;
    }
    std::cout << "orthonormal within 1e-12\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"state-family, correlation and teleportation toolkit"};
    app.require_subcommand(1);

    // tables
    auto* tables = app.add_subcommand("tables", "emit a verified reference table");
    std::string table_id, table_format = "text", table_out;
    std::uint64_t table_seed = 1;
    tables->add_option("--id", table_id, "table id (I..XII)")->required();
    tables->add_option("--format", table_format, "csv, json or text");
    tables->add_option("--out", table_out, "output file (default stdout)");
    tables->add_option("--seed", table_seed, "seed for protocol-backed tables");

    // teleport
    auto* teleport = app.add_subcommand("teleport", "run a teleportation protocol");
    std::string proto_file, proto_name, teleport_out, input_label;
    int random_inputs = 0;
    std::uint64_t teleport_seed = 1;
    bool human = false;
    teleport->add_option("--protocol", proto_file, "protocol JSON file");
    teleport->add_option("--name", proto_name, "builtin protocol name");
    teleport->add_option("--random", random_inputs, "number of random unknown inputs");
    teleport->add_option("--seed", teleport_seed, "seed for random inputs");
    teleport->add_option("--input", input_label, "catalog label or amplitude file for the unknown");
    teleport->add_option("--out", teleport_out, "report file (default stdout)");
    teleport->add_flag("--table", human, "print the human-readable outcome table");

    // correlate
    auto* correlate = app.add_subcommand("correlate", "full cumulant scan of a state");
    std::string corr_state, corr_ampfile, corr_particles_csv, corr_out,
        corr_format = "csv", corr_keep_csv;
    correlate->add_option("--state", corr_state, "catalog state label");
    correlate->add_option("--amplitudes", corr_ampfile, "amplitude JSON file");
    correlate->add_option("--particles", corr_particles_csv, "comma-separated labels");
    correlate->add_option("--format", corr_format, "csv or json");
    correlate->add_option("--out", corr_out, "output file (default stdout)");
    correlate->add_option("--keep", corr_keep_csv,
                          "trace out everything else and report the remainder");

    // basis dump/check
    auto* basis = app.add_subcommand("basis", "basis fixtures");
    auto* dump = basis->add_subcommand("dump", "emit a family as exact JSON");
    std::string dump_family, dump_particles_csv, dump_out;
    dump->add_option("--family", dump_family, "family name")->required();
    dump->add_option("--particles", dump_particles_csv, "relabeled particle list");
    dump->add_option("--out", dump_out, "output file (default stdout)");
    auto* check = basis->add_subcommand("check", "re-validate a dumped family");
    std::string check_file;
    check->add_option("file", check_file, "basis JSON file")->required();

    // circuit run
    auto* circuit = app.add_subcommand("circuit", "gate-level execution");
    auto* crun = circuit->add_subcommand("run", "run a circuit file");
    std::string circ_file, circ_input, circ_out, circ_format = "csv";
    std::int64_t shots = 0;
    std::uint64_t circ_seed = 1;
    crun->add_option("--file", circ_file, "circuit JSON file")->required();
    crun->add_option("--input", circ_input,
                     "input: bitstring, catalog label or amplitude file "
                     "(default |0...0>)");
    crun->add_option("--shots", shots, "sample this many shots");
    crun->add_option("--seed", circ_seed, "sampling seed");
    crun->add_option("--format", circ_format, "csv or json");
    crun->add_option("--out", circ_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*tables) {
            const ReportBundle bundle =
                make_table_report(table_id, table_format, table_seed);
            write_output(table_out, bundle.payload);
            if (!bundle.ok) {
                std::cerr << "table " << bundle.table_id
                          << " disagrees with the embedded expectations:\n";
                for (const auto& d : bundle.diagnostics)
                    std::cerr << "  " << d << "\n";
                return kExitMismatch;
            }
            return kExitOk;
        }

        if (*teleport) {
            Protocol protocol = proto_file.empty()
                                    ? builtin_protocol(proto_name)
                                    : protocol_from_json_text(read_file(proto_file));
            ProtocolReport report;
            if (random_inputs > 0) {
                report = run_random(protocol, random_inputs, teleport_seed);
            } else if (!input_label.empty()) {
                StateVector unknown =
                    input_label.find(".json") != std::string::npos
                        ? state_from_amplitude_file(input_label)
                        : catalog_state(input_label);
                report = run(protocol, unknown);
            } else {
                report = run_random(protocol, 1, teleport_seed);
            }
            write_output(teleport_out, human ? report_to_table_text(report)
                                             : report_to_json_text(report));
            const bool fidelity_ok =
                report.success ||
                (protocol.expect_failure && report.null_outcome_count > 0);
            return fidelity_ok ? kExitOk : kExitMismatch;
        }

        if (*correlate) {
            if (corr_state.empty() == corr_ampfile.empty()) {
                std::cerr << "correlate: provide exactly one of --state/--amplitudes\n";
                return kExitUsage;
            }
            if (!corr_keep_csv.empty()) {
                if (corr_state.empty()) {
                    std::cerr << "correlate: --keep needs a catalog --state\n";
                    return kExitUsage;
                }
                const TraceReport report =
                    trace_report(corr_state, parse_particles(corr_keep_csv));
                write_output(corr_out, trace_report_json(report));
                return kExitOk;
            }
            const StateVector state = corr_state.empty()
                                          ? state_from_amplitude_file(corr_ampfile)
                                          : catalog_state(corr_state);
            std::vector<int> particles;
            if (corr_particles_csv.empty()) {
                for (int q = 1; q <= state.n_qubits(); ++q) particles.push_back(q);
            } else {
                particles = parse_particles(corr_particles_csv);
            }
            const std::string label = corr_state.empty() ? "file" : corr_state;
            const CorrelationTable table = nonzero_scan(state, particles, label);
            write_output(corr_out, corr_format == "json"
                                       ? correlation_table_json(table)
                                       : correlation_table_csv(table));
            return kExitOk;
        }

        if (*dump) {
            BasisSet set = dump_particles_csv.empty()
                               ? basis_by_name(dump_family)
                               : [&] {
                                     const auto p = parse_particles(dump_particles_csv);
                                     if (dump_family == "ghz") return ghz_basis(p);
                                     if (dump_family == "chi") return chi_basis(p);
                                     if (dump_family == "varphi") return varphi_basis(p);
                                     if (dump_family == "chi_prime")
                                         return chi_prime_basis(p);
                                     if (auto f4 = four_qubit_family_from(dump_family))
                                         return four_particle_set(*f4, p);
                                     throw std::runtime_error(
                                         "family does not take a particle list: " +
                                         dump_family);
                                 }();
            write_output(dump_out, basis_to_exact_json(set).dump(2) + "\n");
            return kExitOk;
        }
        if (*check) return check_basis_file(check_file);

        if (*crun) {
            const Circuit c = circuit_from_json_text(read_file(circ_file));
            StateVector input(c.n_qubits);
            if (!circ_input.empty()) {
                if (circ_input.find_first_not_of("01") == std::string::npos)
                    input = StateVector::basis_ket(circ_input);
                else if (circ_input.find(".json") != std::string::npos)
                    input = state_from_amplitude_file(circ_input);
                else
                    input = catalog_state(circ_input);
            }
            if (input.n_qubits() != c.n_qubits)
                throw std::runtime_error("circuit input has wrong qubit count");

            std::string payload;
            if (shots > 0) {
                const auto counts = sample(c, input, circ_seed, shots);
                if (circ_format == "json") {
                    json j;
                    j["seed"] = circ_seed;
                    j["shots"] = shots;
                    json cj = json::object();
                    for (const auto& [bits, count] : counts) cj[bits] = count;
                    j["counts"] = std::move(cj);
                    payload = j.dump(2) + "\n";
                } else {
                    payload = csv_line({"bitstring", "count"});
                    for (const auto& [bits, count] : counts)
                        payload += csv_line({bits, std::to_string(count)});
                }
            } else {
                const std::vector<int> qubits = c.measured.empty()
                                                    ? [&] {
                                                          std::vector<int> all;
                                                          for (int q = 1; q <= c.n_qubits; ++q)
                                                              all.push_back(q);
                                                          return all;
                                                      }()
                                                    : c.measured;
                const auto outcomes = measure_outcomes(c, input, qubits);
                if (circ_format == "json") {
                    json j;
                    json rows = json::array();
                    for (const auto& o : outcomes)
                        rows.push_back({{"bits", o.bits},
                                        {"probability", round12(o.probability)}});
                    j["outcomes"] = std::move(rows);
                    payload = j.dump(2) + "\n";
                } else {
                    payload = csv_line({"bitstring", "probability"});
                    for (const auto& o : outcomes)
                        payload += csv_line({o.bits, format_real(o.probability)});
                }
            }
            write_output(circ_out, payload);
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
