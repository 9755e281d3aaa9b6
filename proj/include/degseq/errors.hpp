#pragma once

#include <stdexcept>

namespace degseq {

// Malformed input: negative terms, a term >= n where graphicality is asked,
// bad text forms, out-of-range parameters.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An operation was invoked outside its stated contract (caller bug), e.g.
// a placement check on a sequence that is not potentially F-graphic.
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

// sigma(K_{r+1}-H, n) was requested in formula mode for a family no closed
// form covers.
struct NoFormulaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The brute-force sigma sweep hit its search budget; no value is reported.
struct OracleIncompleteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace degseq
