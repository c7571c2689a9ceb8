#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmzv {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// An argument lies outside the submodule on which a map or product is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

// A word in the {x, y, rho} alphabet does not factor into blocks x^{k-1}y and rho.
class NotInH1 : public Error {
public:
    using Error::Error;
};

class NotAnIndexWord : public Error {
public:
    using Error::Error;
};

class NotAdmissible : public Error {
public:
    using Error::Error;
};

class NotHomogeneous : public Error {
public:
    using Error::Error;
};

}  // namespace qmzv
