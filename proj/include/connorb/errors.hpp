#pragma once

#include <stdexcept>
#include <string>

namespace connorb {

/// Base class for all numerical failures raised by this library.
class NumericsError : public std::runtime_error {
public:
    explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

/// Step size fell below the representable floor; signals stiffness or a singularity.
class StepSizeUnderflow : public NumericsError {
public:
    explicit StepSizeUnderflow(const std::string& what) : NumericsError(what) {}
};

/// State became NaN/Inf during integration; signals finite-time blow-up.
class NonFiniteState : public NumericsError {
public:
    explicit NonFiniteState(const std::string& what) : NumericsError(what) {}
};

class SingularJacobian : public NumericsError {
public:
    explicit SingularJacobian(const std::string& what) : NumericsError(what) {}
};

/// Iteration budget exhausted or iterates diverged.
class ConvergenceError : public NumericsError {
public:
    explicit ConvergenceError(const std::string& what) : NumericsError(what) {}
};

/// Input violates a documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Quadrature self-check (Richardson half-grid comparison) disagreed too much.
class QuadratureError : public NumericsError {
public:
    explicit QuadratureError(const std::string& what) : NumericsError(what) {}
};

/// A constrained quantity drifted beyond its tolerance.
class ConstraintViolation : public NumericsError {
public:
    explicit ConstraintViolation(const std::string& what) : NumericsError(what) {}
};

} // namespace connorb
