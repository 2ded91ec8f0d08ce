#ifndef ARGSHIFT_ERRORS_HPP
#define ARGSHIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace argshift {

// Malformed user input: files, indices out of range, dimension mismatches.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mathematically meaningful refusal: singular base point, line inside the
// singular set, broken recursion input.  Distinct from InputError so the CLI
// can map the two classes to different exit codes.
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularPointError : MathError {
    using MathError::MathError;
};

struct RecursionBrokenError : MathError {
    using MathError::MathError;
};

struct LineInsideSingError : MathError {
    using MathError::MathError;
};

// A condition that theory guarantees cannot happen; reaching it is a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace argshift

#endif
