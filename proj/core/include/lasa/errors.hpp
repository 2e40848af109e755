#pragma once

#include <stdexcept>
#include <string>

namespace lasa {

// Bad data supplied by the caller (malformed files, invalid chains, ...).
// The CLI maps this family to exit code 2.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A gamma / z vector that violates the model constraints.
class ConstraintViolation : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// Parse failure in an input file; carries the 1-based line number.
class ParseError : public InvalidInput {
public:
    ParseError(const std::string& path, std::size_t line, const std::string& what)
        : InvalidInput(path + ":" + std::to_string(line) + ": " + what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Bad configuration (hyperparameters, sampler settings, CLI flags).
// The CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A retry cap was exhausted (simulation, sampler initialization).
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invariant breakage inside the library (cache incoherence and the like).
// The CLI maps this to exit code 3.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace lasa
