#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace ovtk {

/// Distances are nonnegative integers; kInfDist marks an unreachable vertex.
/// Never add to kInfDist without checking for it first.
using Dist = std::int64_t;
inline constexpr Dist kInfDist = std::numeric_limits<Dist>::max();

/// Base class for every error the toolkit raises. The CLI maps these to a
/// nonzero exit status with a one-line diagnostic.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string& what) : Error(what), line_(0) {}
    int line() const { return line_; }

private:
    int line_;
};

/// A request the toolkit refuses to run (caps on exhaustive work).
class RefusalError : public Error {
public:
    using Error::Error;
};

/// Raised when a graph with no finite diameter is handed to a diameter engine.
class DisconnectedError : public Error {
public:
    DisconnectedError() : Error("infinite diameter: graph is disconnected") {}
};

}  // namespace ovtk
