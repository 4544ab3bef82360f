#ifndef ENVELKIT_ERRORS_HPP
#define ENVELKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace envelkit {

// Error taxonomy mirrors the CLI exit-code map:
//   parse -> 1, invalid algebra -> 2, precondition -> 3, characteristic -> 4.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (files, ids, element syntax).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Structural data that is not a Lie algebra (Jacobi violation, bad table parameters).
struct InvalidAlgebraError : Error {
    explicit InvalidAlgebraError(const std::string& what) : Error(what) {}
};

// Operation preconditions: MixedFields, DivisionByZero, NotAnIdeal, NotDerivation,
// NotAbelianIdeal, OrderNotAdapted, NotCodimOne, ... conveyed in the message.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Operations restricted to characteristic zero (index / Frobenius semiradical).
struct CharacteristicError : Error {
    explicit CharacteristicError(const std::string& what) : Error(what) {}
};

} // namespace envelkit

#endif
