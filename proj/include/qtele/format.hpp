// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <string>
#include <vector>

namespace qtele {

// 12 significant digits, "-0" normalized to "0". All report output goes
// through here so repeated runs are byte-identical.
std::string format_real(double x);

// Round to 12 significant digits; applied to every double handed to the
// JSON writer.
double round12(double x);

// One CSV line; fields pass through as-is (catalog labels and axis names
// never need quoting).
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace qtele
