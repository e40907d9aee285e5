#ifndef CRN_ERRORS_HPP
#define CRN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crn {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// DSL / rates-file problems, with 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Raised when a positive steady state with all complex coordinates balanced
// does not exist for the given rates.
class NotComplexBalancing : public Error {
public:
    using Error::Error;
};

class NotDetailedBalancing : public Error {
public:
    using Error::Error;
};

// Combinatorial guard tripped (i-tree enumeration, orientation enumeration).
class GuardExceeded : public Error {
public:
    using Error::Error;
};

} // namespace crn

#endif
