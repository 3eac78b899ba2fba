#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace maxss {

enum class ErrorKind {
    parameter,           // invalid argument or model parameter
    input,               // empty or unreadable input
    scale,               // scale index out of range
    range,               // invalid (j1, j2) scale range
    validity,            // undefined Y_j inside a requested range
    degenerate_data,     // no usable scale, or too many dropped replicates
    nonpositive_slope,   // H <= 0, data not heavy tailed at the fitted scales
    numeric,             // non-positive-definite or singular system
    unsupported_model,   // operation has no closed form for this model
    infinite_moment,     // requested moment does not exist
    domain,              // log of a non-positive order statistic
    insufficient_scales, // scale selection needs more valid scales
    parse,               // unparsable number in an input file
};

inline std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::input: return "input";
    case ErrorKind::scale: return "scale";
    case ErrorKind::range: return "range";
    case ErrorKind::validity: return "validity";
    case ErrorKind::degenerate_data: return "degenerate_data";
    case ErrorKind::nonpositive_slope: return "nonpositive_slope";
    case ErrorKind::numeric: return "numeric";
    case ErrorKind::unsupported_model: return "unsupported_model";
    case ErrorKind::infinite_moment: return "infinite_moment";
    case ErrorKind::domain: return "domain";
    case ErrorKind::insufficient_scales: return "insufficient_scales";
    case ErrorKind::parse: return "parse";
    }
    return "unknown";
}

/// Single exception type for the library; the kind tells callers (and the
/// CLI's error object) which contract was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message)
{
    throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const char* message)
{
    if (!condition) {
        throw Error(kind, message);
    }
}

} // namespace detail
} // namespace maxss
