#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace srf {

/// Metric density lost positivity (left the admissible cone).
class PositivityViolation : public std::runtime_error {
public:
    PositivityViolation(int node, double value)
        : std::runtime_error("metric density non-positive at node " +
                             std::to_string(node) + " (value " +
                             std::to_string(value) + ")"),
          node(node), value(value) {}
    int node;
    double value;
};

/// Time step exceeds the monitored parabolic stability bound.
class StabilityViolation : public std::runtime_error {
public:
    StabilityViolation(double dt, double bound, double t)
        : std::runtime_error("dt " + std::to_string(dt) +
                             " exceeds stability bound " + std::to_string(bound) +
                             " at t " + std::to_string(t)),
          dt(dt), bound(bound), t(t) {}
    double dt, bound, t;
};

/// The two-point Ricci-potential problem is not solvable for this density
/// (volume mismatch or broken quadrature).
class SolvabilityResidualExceeded : public std::runtime_error {
public:
    explicit SolvabilityResidualExceeded(double residual)
        : std::runtime_error("Ricci potential solvability residual " +
                             std::to_string(residual) + " exceeds 1e-6"),
          residual(residual) {}
    double residual;
};

/// Trajectory too short for the requested tail-truncated integral.
class TailNotConverged : public std::runtime_error {
public:
    explicit TailNotConverged(double bound)
        : std::runtime_error("tail truncation bound " + std::to_string(bound) +
                             " exceeds 1e-8; extend t_max"),
          bound(bound) {}
    double bound;
};

/// Potential sampling could not reach the admissibility margin.
class SamplingFailed : public std::runtime_error {
public:
    SamplingFailed() : std::runtime_error("potential sampling failed after 100 rescale attempts") {}
};

/// Config file syntax or unknown-key error.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = -1)
        : std::runtime_error(line >= 0 ? "parse error (line " + std::to_string(line) + "): " + what
                                       : "parse error: " + what),
          line(line) {}
    int line;
};

/// Config semantic validation failure; lists every violated constraint.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations(std::move(violations)) {}
    std::vector<std::string> violations;

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "config validation failed:";
        for (const auto& e : v) s += "\n  - " + e;
        return s;
    }
};

} // namespace srf
