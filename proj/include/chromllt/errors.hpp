#pragma once

#include <stdexcept>
#include <string>

namespace chromllt {

// Division by the zero rational function.
struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};

// Substitution at a pole.
struct EvaluationError : std::domain_error {
    using std::domain_error::domain_error;
};

// Mixing elements of different (space, basis) pairs, or a key that is not
// valid for the tagged basis.
struct BasisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Arguments whose lengths or degrees disagree.
struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input outside the domain of a partial operation (nesting partition passed
// to eta, element outside the span of a sub-basis, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw SizeMismatch(std::string(what) + ": length mismatch (" + std::to_string(a) +
                           " vs " + std::to_string(b) + ")");
    }
}

}  // namespace detail
}  // namespace chromllt
