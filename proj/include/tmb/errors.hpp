#pragma once

#include <stdexcept>
#include <string>

namespace tmb {

// Argument outside the mathematical domain of an operation (n < 2, beta >= n, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Input object violates a structural invariant (non-monotone knots, increasing
// radial function, energy constraint broken, ...).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An integrand sample came back NaN or infinite.
struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative scheme exhausted its budget; carries the best estimate found.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, double best)
        : std::runtime_error(what), best_estimate(best) {}
    double best_estimate;
};

// The exponential functional fails to decay (input not admissible).
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A stated precondition check failed; the message names the check.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tmb
