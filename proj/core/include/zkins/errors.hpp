#pragma once

#include <stdexcept>
#include <string>

namespace zkins {

/// Polynomial exponents exceed the SRS degree bound.
struct DegreeOverflowError : std::out_of_range {
    explicit DegreeOverflowError(const std::string& w) : std::out_of_range(w) {}
};

/// Restricted commitment of a polynomial with nonzero constant term.
struct NonzeroConstantError : std::invalid_argument {
    explicit NonzeroConstantError(const std::string& w) : std::invalid_argument(w) {}
};

/// Claimed evaluations are inconsistent with the committed polynomials
/// (batch-opening division left a remainder).
struct InconsistentClaimError : std::invalid_argument {
    explicit InconsistentClaimError(const std::string& w) : std::invalid_argument(w) {}
};

/// Prover-side early failure: the witness does not satisfy the system.
struct UnsatisfiedWitnessError : std::runtime_error {
    explicit UnsatisfiedWitnessError(const std::string& w) : std::runtime_error(w) {}
};

/// Data-source signature or layout mismatch while assembling a proof.
struct DataBindingError : std::runtime_error {
    explicit DataBindingError(const std::string& w) : std::runtime_error(w) {}
};

/// Illegal policy lifecycle transition (wrong state, replay, expiry).
struct PolicyStateError : std::logic_error {
    explicit PolicyStateError(const std::string& w) : std::logic_error(w) {}
};

}  // namespace zkins
