#pragma once

#include <stdexcept>
#include <string>

namespace aeronav {

/// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Precondition or argument violation.
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// Malformed document. `position` is a byte offset when known, -1 otherwise.
class ParseError : public Error {
public:
    ParseError(const std::string& what, long long position = -1)
        : Error(position >= 0 ? what + " (at byte " + std::to_string(position) + ")" : what),
          position_(position) {}
    long long position() const { return position_; }

private:
    long long position_;
};

/// A pluggable backend (perception, parser, reasoner, scorer, transport)
/// failed or is unavailable. Carries which backend it was.
class BackendError : public Error {
public:
    BackendError(const std::string& backend, const std::string& what, int retries = 0)
        : Error("[" + backend + "] " + what), backend_(backend), retries_(retries) {}
    const std::string& backend() const { return backend_; }
    int retries() const { return retries_; }

private:
    std::string backend_;
    int retries_;
};

class ScoringError : public Error {
public:
    explicit ScoringError(const std::string& what) : Error(what) {}
};

class NoPathError : public Error {
public:
    explicit NoPathError(const std::string& what) : Error(what) {}
};

class NoOroiError : public Error {
public:
    explicit NoOroiError(const std::string& what) : Error(what) {}
};

class NoPointsError : public Error {
public:
    explicit NoPointsError(const std::string& what) : Error(what) {}
};

class GenerationError : public Error {
public:
    explicit GenerationError(const std::string& what) : Error(what) {}
};

}  // namespace aeronav
