#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace casimir {

// Malformed or out-of-domain input: CLI flags, scenario files, bad argument
// combinations. Always the caller's fault, never a numerical failure.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Base class for runtime numerical failures.
class NumericsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A budget (function evaluations, series terms, recursion depth) ran out
// before the requested tolerance was met. Carries the partial result so
// callers can report how far the computation got.
class ConvergenceError : public NumericsError {
public:
    ConvergenceError(const std::string& what, double partial, double err,
                     std::size_t evals)
        : NumericsError(what),
          partial_value(partial),
          partial_error(err),
          evaluations(evals) {}

    double partial_value;
    double partial_error;
    std::size_t evaluations;
};

// The dielectric model has no finite static value (metal-like response
// diverging as xi -> 0); the caller must use the structured static limit
// instead of evaluating at xi = 0.
class DivergentStaticLimit : public NumericsError {
public:
    using NumericsError::NumericsError;
};

// Evaluation was requested inside the exclusion window around a real pole of
// the analytically continued dielectric function.
class PoleProximityError : public NumericsError {
public:
    PoleProximityError(const std::string& what, double xi_value, double pole_value)
        : NumericsError(what), xi(xi_value), pole(pole_value) {}

    double xi;
    double pole;
};

// The continued dispersion argument left the disc where the principal log is
// the continuous branch; a result computed there would sit on the wrong sheet.
class BranchTrackingError : public NumericsError {
public:
    BranchTrackingError(const std::string& what, double xi_value, double mag)
        : NumericsError(what), xi(xi_value), magnitude(mag) {}

    double xi;
    double magnitude;
};

// 1 + sign * alpha * K crossed zero along the integration path: the
// linearized mode sum has no stable ground state for these parameters.
class ModeInstabilityError : public NumericsError {
public:
    ModeInstabilityError(const std::string& what, double xi_value)
        : NumericsError(what), xi(xi_value) {}

    double xi;
};

}  // namespace casimir
