#pragma once

#include "respoly/alphabet.hpp"
#include "respoly/series.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace respoly {

// Deterministic automaton whose transitions additionally emit the value of a
// label series applied to the remaining suffix; the output on a word is the
// sum of all emissions plus a final constant at the reached state.
class HTransducer {
public:
    // delta[q][letter] / lambda[q][letter] indexed like `states` x alphabet
    // order. Every state must be reachable from the initial one.
    HTransducer(Alphabet alphabet, std::vector<std::string> states, std::size_t initial,
                std::vector<std::vector<std::size_t>> delta,
                std::vector<std::vector<Series>> lambda, std::vector<Int> final_values);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t state_count() const { return states_.size(); }
    const std::vector<std::string>& state_names() const { return states_; }
    const std::string& state_name(std::size_t q) const { return states_[q]; }
    std::size_t state_index(std::string_view name) const; // throws if absent
    bool has_state(std::string_view name) const;
    std::size_t initial() const { return initial_; }

    std::size_t delta(std::size_t q, std::size_t letter_index) const {
        return delta_[q][letter_index];
    }
    const Series& lambda(std::size_t q, std::size_t letter_index) const {
        return lambda_[q][letter_index];
    }
    const Int& final_at(std::size_t q) const { return final_[q]; }

    std::size_t delta_star(std::size_t q, std::string_view symbols) const;

    // T(q, aw) = T(delta(q,a), w) + lambda(q,a)(w);  T(q, eps) = F(q).
    Int eval_recursive(std::size_t q, std::string_view symbols) const;
    // Sum over positions of lambda(state before the letter, letter)(suffix
    // after the letter), plus F at the reached state.
    Int eval_closed(std::string_view symbols) const;

    // No state q and word u with delta(q,u) != q yet delta(q,u^n) = q:
    // decided through aperiodicity of the transition monoid.
    bool is_counter_free() const;

    // Deterministic Graphviz export; equal machines yield identical bytes.
    std::string to_dot() const;

private:
    Alphabet alphabet_;
    std::vector<std::string> states_;
    std::size_t initial_ = 0;
    std::vector<std::vector<std::size_t>> delta_;
    std::vector<std::vector<Series>> lambda_;
    std::vector<Int> final_;
};

// Same states, initial state, transitions and final values, and pairwise
// semantically equal labels. State order may differ.
bool same_structure(const HTransducer& a, const HTransducer& b);

// Exact linear representation of the function the transducer computes
// (machine part plus one block per transition label). Labels must be
// Zero/Unary/Linear.
LinRep transducer_to_linrep(const HTransducer& t);

} // namespace respoly
