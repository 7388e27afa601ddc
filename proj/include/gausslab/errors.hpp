#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gausslab {

// Admissible-cube enumeration produced no cube (smallest ladder side too large).
struct EmptyFamily : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AlphaOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidExponents : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// sigma = v^{1-p'} has a non-integrable piece: no finite constant can be certified.
struct DegenerateWeight : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    std::size_t offset;
    std::vector<std::string> expected;

    ParseError(std::size_t off, std::vector<std::string> exp, const std::string& what)
        : std::runtime_error(what), offset(off), expected(std::move(exp)) {}
};

struct ConfigError : std::runtime_error {
    std::string field_path;

    ConfigError(std::string path, const std::string& what)
        : std::runtime_error(what), field_path(std::move(path)) {}
};

}  // namespace gausslab
