#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or mathematically invalid input data (rank-deficient grading,
/// non-positive grading, inconsistent equations, ...).
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error(what) {}
};

/// Caller passed arguments of the wrong shape.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

/// A computation refused to run because its size guard was exceeded.
class GuardExceeded : public Error {
public:
    explicit GuardExceeded(const std::string& what) : Error(what) {}
};

/// A randomized search ran out of attempts.
class SearchExhausted : public Error {
public:
    SearchExhausted(const std::string& what, unsigned attempts)
        : Error(what), attempts_(attempts) {}
    unsigned attempts() const noexcept { return attempts_; }

private:
    unsigned attempts_;
};

}  // namespace toric
