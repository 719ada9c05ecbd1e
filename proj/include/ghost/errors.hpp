#pragma once

#include <stdexcept>
#include <string>

namespace ghost {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical inputs does not hold.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain error: " + what) {}
};

/// A catalog name could not be resolved.
class LookupError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A configured resource cap (region level, coefficient count) would be exceeded.
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error("resource cap exceeded: " + what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error("i/o error: " + what) {}
};

}  // namespace ghost
