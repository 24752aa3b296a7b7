// errors.hpp
// Error taxonomy shared by the library and the CLI. Each category maps to a
// distinct process exit code so scripted callers can tell config problems from
// bad data from numerical blowups.

#pragma once

#include <stdexcept>
#include <string>

namespace crashrisk {

// Bad or inconsistent configuration (missing keys, invalid ranges). Exit 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unusable input data (missing files, malformed rows, violated invariants). Exit 3.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure during computation (divergence, NaN loss, degenerate fit). Exit 4.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int config_error = 2;
inline constexpr int data_error = 3;
inline constexpr int numeric_error = 4;
}  // namespace exit_code

}  // namespace crashrisk
