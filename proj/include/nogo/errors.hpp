// errors.hpp
// Exception types shared across the library. The CLI maps these onto its
// documented exit codes (input 2, internal 3, io 4).

#pragma once

#include <stdexcept>
#include <string>

namespace nogo {

// Invalid caller-supplied data: bad dimensions, unnormalized states,
// missing machine images, out-of-range parameters.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Machine description text that does not parse. Carries the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(int line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Inputs for which the requested quantity is undefined, e.g. the cos-theta
// bound when any amplitude is zero (its denominator 2abcd vanishes).
class DegenerateError : public InputError {
public:
    explicit DegenerateError(const std::string& what) : InputError(what) {}
};

// A violated internal contract: failed eigensolver convergence, or a
// closed-form / numeric disagreement beyond tolerance.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

// Failure to write an output file.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nogo
