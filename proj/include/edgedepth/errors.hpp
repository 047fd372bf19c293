#ifndef EDGEDEPTH_ERRORS_HPP
#define EDGEDEPTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edgedepth {

// A configured resource cap was hit (search bound, lattice size, face count).
// Callers that sweep many cases catch this and mark the case as skipped.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation does not hold for the input.
class PreconditionFailed : public std::runtime_error {
public:
    explicit PreconditionFailed(const std::string& what) : std::runtime_error(what) {}
};

// The graph does not belong to a family with a closed-form depth formula.
class UnsupportedFamily : public std::runtime_error {
public:
    explicit UnsupportedFamily(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input (graph spec string, monomial syntax, config file).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace edgedepth

#endif
