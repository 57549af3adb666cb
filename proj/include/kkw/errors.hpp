#pragma once

#include <stdexcept>
#include <string>

namespace kkw {

struct PDegreeOverflow : std::runtime_error {
    explicit PDegreeOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct ImproperRational : std::runtime_error {
    explicit ImproperRational(const std::string& what) : std::runtime_error(what) {}
};

struct NotIntegrable : std::runtime_error {
    explicit NotIntegrable(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedSymbol : std::runtime_error {
    explicit UnsupportedSymbol(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedConfiguration : std::runtime_error {
    explicit UnsupportedConfiguration(const std::string& what) : std::runtime_error(what) {}
};

struct RelationCheckFailed : std::runtime_error {
    explicit RelationCheckFailed(const std::string& what) : std::runtime_error(what) {}
};

struct ToleranceNotReached : std::runtime_error {
    explicit ToleranceNotReached(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& what, size_t p)
        : std::runtime_error(what + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

} // namespace kkw
