// This code is part of qtele.
//
// (C) Copyright 2026 qtele developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "qtele/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace qtele {

std::string format_real(double x) {
    if (x == 0.0) return "0";  // catches -0.0 as well
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

double round12(double x) {
    if (x == 0.0) return 0.0;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    out += '\n';
    return out;
}

}  // namespace qtele
