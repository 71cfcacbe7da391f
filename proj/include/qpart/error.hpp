#pragma once

#include <stdexcept>
#include <string>

namespace qpart {

// Signed 64-bit coefficient arithmetic overflowed. Never wrapped silently.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// A value violated a domain precondition (family membership, diagram shape,
// involution guard, exceptional input, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A series operation was called with incompatible operands (order mismatch,
// non-unit constant term, valuation contract violation).
class SeriesError : public std::invalid_argument {
public:
    explicit SeriesError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qpart
