#pragma once

#include <stdexcept>
#include <string>

namespace hyperfield {

// Error taxonomy. The CLI maps these onto exit codes:
//   ConfigError/ArgumentError/ShapeError -> 2 (usage/config)
//   NumericError                         -> 3 (numerical failure)
//   IoError/FormatError                  -> 4 (I/O)

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ArgumentError : std::runtime_error {
    explicit ArgumentError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hyperfield
