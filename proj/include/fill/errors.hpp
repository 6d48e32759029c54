#pragma once

#include <stdexcept>
#include <string>

namespace fill {

// Invalid user-facing input (bad schema, violated invariant). CLI maps this to exit 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Exact arithmetic failure (zero intermediate denominator on framed-chain input).
struct ArithmeticError : std::runtime_error {
    explicit ArithmeticError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant (e.g. daisy template mismatch). CLI maps this to exit 1.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace fill
