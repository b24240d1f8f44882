// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtele/correlations.hpp"
#include "qtele/teleport.hpp"

namespace qtele {

inline constexpr std::string_view kVersion = "0.1.0";

/// Reference tables I..XII: the expected correlation signatures, correction
/// maps and measurement-gate classes for the bundled state catalog and
/// protocols. Every `make_table_report` recomputes the table from the
/// engine and diffs it against these embedded expectations.
struct ReportBundle {
    std::string table_id;
    std::string format;  // csv, json or text
    std::string payload;
    bool ok = false;
    std::vector<std::string> diagnostics;  // cell-level mismatches
};

std::vector<std::string> table_ids();
ReportBundle make_table_report(std::string_view table_id,
                               std::string_view format, std::uint64_t seed);

// Expected non-zero signature of one catalog state: (axes word -> sign).
struct SignatureRow {
    std::string state_label;
    std::vector<int> signs;  // aligned with the table's axis columns; 0 = zero
};

struct SignatureTableRef {
    std::string id;
    std::vector<std::string> axis_columns;
    std::vector<int> particles;
    std::vector<SignatureRow> rows;
};

const SignatureTableRef& signature_table(std::string_view id);  // I,II,V,VI,VIII,X

struct CorrectionTableRef {
    std::string id;
    std::string protocol;  // builtin protocol name
    std::vector<std::pair<std::string, std::string>> rows;  // outcome -> word
};

const CorrectionTableRef& correction_table(std::string_view id);  // III,IV,VII,IX

struct GateTableRef {
    std::string id;
    std::string network;  // teleport_network name
    std::string prepared_carrier;
    std::vector<std::pair<std::string, std::string>> rows;  // bits -> word
};

const GateTableRef& gate_table(std::string_view id);  // XI,XII

/// True when the two Pauli words act identically up to one global phase on
/// the span of the given computational kets (the full space when empty).
bool words_equivalent_on_subspace(const std::string& a, const std::string& b,
                                  const std::vector<std::string>& subspace);

// Scan serialization (columns: state_label, particles, axes, value,
// is_nonzero).
std::string correlation_table_csv(const CorrelationTable& table);
std::string correlation_table_json(const CorrelationTable& table);

/// Reduced-state entanglement summary used by the tracing reports: the
/// concurrence for two-qubit remainders; the non-zero cumulant signature
/// plus all pairwise concurrences for three-qubit remainders.
struct TraceReport {
    std::string state_label;
    std::vector<int> kept;
    int n_kept = 0;
    double concurrence_value = -1;  // two-qubit remainders only
    std::vector<std::pair<std::string, double>> pair_concurrences;
    std::vector<std::pair<std::string, double>> nonzero_signature;
};

TraceReport trace_report(std::string_view state_label,
                         const std::vector<int>& keep);
std::string trace_report_json(const TraceReport& report);

}  // namespace qtele
