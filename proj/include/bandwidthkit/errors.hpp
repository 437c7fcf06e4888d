#pragma once

#include <stdexcept>
#include <string>

namespace bwkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidTreeError : Error {
    using Error::Error;
};

struct InvalidLayoutError : Error {
    using Error::Error;
};

struct InvalidVertexError : Error {
    using Error::Error;
};

struct NotACaterpillarError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct TooLargeError : Error {
    explicit TooLargeError(const std::string& msg, std::string computed_total = "")
        : Error(msg), total(std::move(computed_total)) {}
    std::string total;  // decimal string of the offending size, when known
};

struct ParameterError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line_no)
        : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    int line;
};

}  // namespace bwkit
