#pragma once

#include <stdexcept>
#include <string>

namespace atiyah {

/// A configuration (or sub-configuration) too close to coincident points,
/// or a quadrilateral too degenerate for the requested operation.
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Four points not in strictly convex position. Carries the index (into the
/// caller's ordering) of the offending vertex.
class NotConvexError : public std::runtime_error {
public:
    NotConvexError(const std::string& msg, int vertex)
        : std::runtime_error(msg), vertex_(vertex) {}
    int vertex() const { return vertex_; }

private:
    int vertex_;
};

/// Invalid request: unsupported point count, non-positive scale, bad sample
/// spec, infeasible optimizer start, exhausted rejection budget.
class InvalidSpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed points-file text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace atiyah
