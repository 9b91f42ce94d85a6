#pragma once

#include <stdexcept>
#include <string>

namespace respoly {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inputs over different alphabets were combined.
struct alphabet_mismatch : error {
    using error::error;
};

// An operation was asked of a series variant that does not support it.
struct unsupported_variant : error {
    using error::error;
};

// The requested (alphabet, level, flavor) combination has no decision
// procedure; distinct from a negative membership verdict.
struct oracle_unavailable : error {
    using error::error;
};

// Malformed JSON spec, formula text, or flag value.
struct parse_error : error {
    using error::error;
};

} // namespace respoly
