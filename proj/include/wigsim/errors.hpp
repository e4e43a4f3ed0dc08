#pragma once

#include <stdexcept>
#include <string>

namespace wigsim {

// Numeric-contract violations. Every throwing operation documents which of
// these it can raise; the CLI maps them to exit code 3.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Wavefunction has non-negligible amplitude at the edge of its grid, so a
// transform over the jump coordinate would be truncated.
struct GridTooSmall : NumericError {
    using NumericError::NumericError;
};

// Input state norm deviates from 1 beyond tolerance.
struct NonNormalized : NumericError {
    using NumericError::NumericError;
};

// Two fields that must share a grid do not.
struct GridMismatch : NumericError {
    using NumericError::NumericError;
};

// A map pulled more than the allowed fraction of a field's mass outside the
// grid, or pushed it in from outside.
struct ExtrapolationLoss : NumericError {
    using NumericError::NumericError;
};

// Iterative refinement (root bracketing) failed to reach its tolerance.
struct ConvergenceFailure : NumericError {
    using NumericError::NumericError;
};

// Thermal weight does not decay at an open grid edge: the distribution has
// no finite normalization in the grid-growth limit.
struct NotNormalizable : NumericError {
    using NumericError::NumericError;
};

// A propagated wavefunction reached the edge of its grid mid-evolution.
struct GridEscape : NumericError {
    using NumericError::NumericError;
};

}  // namespace wigsim
