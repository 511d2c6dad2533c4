#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace repute {

/// Base class for all validation errors raised by the library. Internal
/// logic errors are left to the standard exception types.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnknownVertex : Error {
    explicit UnknownVertex(std::uint64_t id)
        : Error("unknown vertex id " + std::to_string(id)), id(id) {}
    std::uint64_t id;
};

struct EmptyGraph : Error {
    EmptyGraph() : Error("operation requires a non-empty graph") {}
};

struct NonConvergence : Error {
    NonConvergence(std::size_t iterations, double residual)
        : Error("iteration did not converge after " + std::to_string(iterations) +
                " steps (residual " + std::to_string(residual) + ")"),
          iterations(iterations), residual(residual) {}
    std::size_t iterations;
    double residual;
};

struct InsufficientData : Error {
    explicit InsufficientData(const std::string& msg) : Error(msg) {}
};

struct NoKnownAccounts : Error {
    NoKnownAccounts() : Error("no authors with known features/scores") {}
};

struct DuplicateTweetId : Error {
    explicit DuplicateTweetId(const std::string& id)
        : Error("duplicate tweet id " + id), id(id) {}
    std::string id;
};

struct CycleDetected : Error {
    explicit CycleDetected(const std::string& id)
        : Error("cycle through tweet id " + id), id(id) {}
    std::string id;
};

struct MalformedLine : Error {
    MalformedLine(std::size_t line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line_no(line_no) {}
    std::size_t line_no;
};

struct FeatureOutOfRange : Error {
    FeatureOutOfRange(std::size_t line_no, const std::string& field, double value)
        : Error("line " + std::to_string(line_no) + ": feature '" + field +
                "' = " + std::to_string(value) + " outside [0,1]"),
          line_no(line_no), field(field), value(value) {}
    std::size_t line_no;
    std::string field;
    double value;
};

struct UnsupportedFormat : Error {
    explicit UnsupportedFormat(const std::string& name)
        : Error("unsupported format '" + name + "'") {}
};

struct InvalidSpec : Error {
    explicit InvalidSpec(const std::string& msg) : Error(msg) {}
};

struct InvalidConfig : Error {
    explicit InvalidConfig(const std::string& msg) : Error(msg) {}
};

}  // namespace repute
