#pragma once

#include <stdexcept>
#include <string>

namespace toruskit {

/// Base class for every error raised by the workbench.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Lattice operands of different rank.
struct dimension_error : error { using error::error; };

/// Checked integer arithmetic left the representable range.
struct overflow_error : error { using error::error; };

/// An operation was invoked outside the hypotheses of the result it encodes.
struct hypothesis_error : error { using error::error; };

/// Stored invariants of a manifold record contradict each other.
struct inconsistent_record_error : error { using error::error; };

/// The surgery rule table has no entry for the requested status combination.
struct rule_not_covered_error : error { using error::error; };

/// A stated precondition does not hold.
struct precondition_error : error { using error::error; };

/// A configuration state machine received a transition it does not accept.
struct state_error : error { using error::error; };

/// Pinwheel criteria are only implemented for three components.
struct unsupported_arity_error : error { using error::error; };

/// The pinwheel closing condition fails, so no closed manifold results.
struct not_closeable_error : error { using error::error; };

/// Handle trading requested between non-adjacent pinwheel components.
struct adjacency_error : error { using error::error; };

/// A basic class pairs nontrivially with the surgery torus class.
struct adjunction_error : error { using error::error; };

/// The genus formula evaluated to a non-integer.
struct non_integral_genus_error : error { using error::error; };

/// A required nonvanishing certificate is absent.
struct certificate_error : error { using error::error; };

/// A surgery schedule step is not certified.
struct schedule_error : error { using error::error; };

/// An internal consistency check failed while assembling a construction.
struct assembly_error : error { using error::error; };

/// A manifest could not be parsed or violates its schema.
struct manifest_error : error { using error::error; };

}  // namespace toruskit
