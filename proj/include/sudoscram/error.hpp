#pragma once

#include <stdexcept>
#include <string>

namespace sudoscram {

// Malformed external data: unparseable files, bad key strings, shape
// mismatches between serialized structures.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Arguments outside an operation's domain: undersized images, out-of-range
// indices, degenerate statistics (zero variance, undefined GDD).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sudoscram
