#pragma once

#include "respoly/resorder.hpp"
#include "respoly/transducer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace respoly {

struct BuildConfig {
    enum class Policy { Shortlex, Fifo, Lifo };

    unsigned k = 1;
    std::uint64_t fuel = 10000; // budget of ordering-oracle calls
    std::size_t max_states = 1024;
    Policy policy = Policy::Shortlex;
};

BuildConfig::Policy parse_policy(std::string_view name); // "shortlex" | "fifo" | "lifo"
std::string_view policy_name(BuildConfig::Policy policy);

struct TraceStep {
    std::string chosen;
    std::string branch; // "if" (existing target found) or "else" (new state)
    std::vector<std::string> q_states; // after the step, shortlex
    std::vector<std::string> o_words;  // after the step, shortlex
};

struct BuildTrace {
    std::vector<TraceStep> steps;
    std::uint64_t oracle_calls = 0;
};

struct BuildOutcome {
    std::optional<HTransducer> transducer; // empty when a budget ran out
    BuildTrace trace;
    std::string failure; // "", "fuel-exhausted" or "state-budget-exhausted"
    bool ok() const { return transducer.has_value(); }
};

// Worklist construction of the residual transducer of f at level k: states
// are words, the transition from u on a goes to the longest prefix-state
// below ua, and the label is the derivative between the two. Stops with a
// failure outcome when the oracle-call or state budget runs out before the
// worklist drains.
BuildOutcome build_residual_transducer(const Series& f, const BuildConfig& cfg);

struct Violation {
    int condition; // 1..6
    std::string detail;
};

// The six conditions a residual transducer of f at level k must satisfy:
// (1) it computes f, (2) the state set is prefix-closed, (3) the initial
// state is the empty word, (4) every state is reachable, (5) each
// transition targets the longest prefix-state below the extended word,
// (6) labels equal the prescribed derivatives and finals the function
// values. Returns every violation found (empty = valid).
std::vector<Violation> validate_residual_transducer(const Series& f, unsigned k,
                                                    const HTransducer& t);

struct MinimalityWitness {
    std::string word;
    Int value;
};

// Any single-state machine with a non-negative label would have to emit
// f(aw) - f(w) on its loop; the witness is the least word where that
// difference goes negative, if one exists. Unary series only.
std::optional<MinimalityWitness> minimality_witness(const Series& f);

} // namespace respoly
