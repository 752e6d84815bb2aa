#pragma once

#include <stdexcept>
#include <string>

namespace lcmbin {

/// Argument outside the operation's mathematical domain (k > n, n == 0 where
/// N* is required, zero in an lcm sequence, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured resource cap would be exceeded.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Two paths that must agree did not. Always an implementation bug.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace lcmbin
