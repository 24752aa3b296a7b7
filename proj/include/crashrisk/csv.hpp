// csv.hpp
// Minimal CSV plumbing. No quoting support: every format this project writes
// or reads uses plain comma-separated fields (symbols and feature names never
// contain commas). Doubles are written with %.17g so files round-trip exactly.

#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "crashrisk/errors.hpp"

namespace crashrisk {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Full-precision round-trippable text for a double. NaN becomes the empty
// string (the CSV convention for missing cells).
inline std::string format_double(double v) {
    if (std::isnan(v)) return "";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline double parse_double(const std::string& s, const std::string& context) {
    const std::string t = trim(s);
    if (t.empty()) return std::nan("");
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (end == t.c_str() || *end != '\0') {
        throw DataError("unparsable number '" + s + "' in " + context);
    }
    return v;
}

// Reads all lines, dropping a trailing empty line if present.
inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open()) throw DataError("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out.is_open()) throw DataError("cannot write file: " + path);
    out << content;
}

}  // namespace crashrisk
