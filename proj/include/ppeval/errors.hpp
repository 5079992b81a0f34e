#ifndef PPEVAL_ERRORS_HPP
#define PPEVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ppeval {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised by the text-format parsers; carries a 1-based source position.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                ": " + message),
          line(line),
          column(column) {}

    int line;
    int column;
};

// An operation hit one of its documented resource caps (enumeration width,
// product-state count, extension count, ...).
class CapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace ppeval

#endif
