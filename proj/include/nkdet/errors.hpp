#pragma once

#include <stdexcept>
#include <string>

namespace nkdet {

/// An interval endpoint evaluates to (numerically) zero; the variation
/// bound is unreliable there and the caller must perturb.
struct DegenerateEndpoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// reciprocal_poly needs p(0) != 0.
struct ZeroConstantTerm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root isolation narrowed an interval below resolution while the
/// variation bound still admits two or more roots (likely a multiple
/// root); reported instead of guessed.
struct UnresolvedCluster : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A model parameter violates its parameter-space bound; the message
/// names the offending bound.
struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The forward-rule matrix prefactor 1/(1 - phi_x*sigma) blows up.
struct SingularPrefactor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A classification statement's standing hypotheses do not hold for the
/// given inputs, so the statement is silent there.
struct HypothesisNotMetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace nkdet
