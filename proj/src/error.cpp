#include "ros/error.hpp"

#include <sstream>

namespace ros {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse: return "parse";
        case ErrorKind::range: return "range";
        case ErrorKind::duplicate: return "duplicate";
        case ErrorKind::argument: return "argument";
        case ErrorKind::shape: return "shape";
        case ErrorKind::generation: return "generation";
        case ErrorKind::numeric: return "numeric";
        case ErrorKind::format: return "format";
        case ErrorKind::io: return "io";
        case ErrorKind::timeout: return "timeout";
    }
    return "unknown";
}

namespace {

std::string with_line(std::size_t line, const std::string& what) {
    if (line == 0) return what;
    std::ostringstream os;
    os << "line " << line << ": " << what;
    return os.str();
}

std::string too_large_message(double product, std::size_t cap) {
    std::ostringstream os;
    os << "integer neighborhood has " << product << " points, cap is " << cap;
    return os.str();
}

}  // namespace

ParseError::ParseError(ErrorKind kind, std::size_t line, const std::string& what)
    : Error(kind, with_line(line, what)), line_(line) {}

EnumerationTooLarge::EnumerationTooLarge(double product, std::size_t cap)
    : Error(ErrorKind::argument, too_large_message(product, cap)), product_(product) {}

}  // namespace ros
