#ifndef ROS_ERROR_HPP
#define ROS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ros {

enum class ErrorKind {
    parse,       // malformed input text
    range,       // index outside the declared node range
    duplicate,   // repeated or conflicting edge
    argument,    // invalid configuration or argument value
    shape,       // dimension mismatch between objects
    generation,  // random generator exhausted its retry budget
    numeric,     // non-finite values or failed step control
    format,      // model file magic/version/truncation
    io,          // filesystem failures
    timeout,     // deadline exceeded
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse error that remembers the 1-based line where it happened (0 = no line).
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t line, const std::string& what);

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Raised by enumerate_integer_neighborhood when the support product is above the cap.
class EnumerationTooLarge : public Error {
public:
    EnumerationTooLarge(double product, std::size_t cap);

    /// Product of support sizes (as double; may exceed 2^64).
    double product() const { return product_; }

private:
    double product_;
};

}  // namespace ros

#endif  // ROS_ERROR_HPP
