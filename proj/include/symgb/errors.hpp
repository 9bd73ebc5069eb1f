#ifndef SYMGB_ERRORS_HPP
#define SYMGB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symgb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic preconditions: division by zero, overflow, bad modulus.
struct MathError : Error {
    using Error::Error;
};

// The symmetric algorithm cannot run because the field characteristic
// divides the permutation order.
struct NotApplicableError : Error {
    using Error::Error;
};

// Requested a root of unity over the rationals that would need a field
// extension (order > 2).
struct UnsupportedExtensionError : Error {
    using Error::Error;
};

// k-th primitive root requested in F_p with k not dividing p-1.
struct NoPrimitiveRootError : Error {
    using Error::Error;
};

// Prime sampling ran out of admissible candidates.
struct RangeExhaustedError : Error {
    using Error::Error;
};

// Modular loop exceeded its configured round budget.
struct ResourceLimitError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(std::string msg, int line, int column)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
    int line;
    int column;
};

}  // namespace symgb

#endif
