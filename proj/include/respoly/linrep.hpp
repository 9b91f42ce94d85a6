#pragma once

#include "respoly/alphabet.hpp"
#include "respoly/rational.hpp"
#include "respoly/unary_qp.hpp"

#include <string_view>
#include <vector>

namespace respoly {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>; // row-major, square

// Z-weighted linear representation: w |-> init . M_{w1} ... M_{wn} . final,
// with exact rational entries. Row-vector convention throughout.
class LinRep {
public:
    LinRep(Alphabet alphabet, RatVector init, std::vector<RatMatrix> trans, RatVector final);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t dim() const { return init_.size(); }
    const RatVector& init() const { return init_; }
    const RatVector& final_vector() const { return final_; }
    const RatMatrix& transition(std::size_t letter_index) const { return trans_[letter_index]; }
    // True when every word of length <= 3 evaluated to an integer at
    // construction time.
    bool integral_on_short_words() const { return integral_on_short_words_; }

    // Exact value; throws if the result is not an integer (malformed rep).
    Int eval(std::string_view symbols) const;
    RatVector row_after(std::string_view symbols) const;

    LinRep add(const LinRep& o) const; // direct sum
    LinRep negate() const;
    LinRep scale(const Int& c) const;
    LinRep residual(std::string_view symbols) const;

    // Exact zeroness: closure of the forward-reachable row space, then
    // orthogonality against the final vector.
    bool is_zero() const;

private:
    Alphabet alphabet_;
    RatVector init_;
    std::vector<RatMatrix> trans_; // one per letter, alphabet order
    RatVector final_;
    bool integral_on_short_words_ = true;
};

RatVector mul_row_matrix(const RatVector& v, const RatMatrix& m);
Rat dot(const RatVector& a, const RatVector& b);

// Companion-matrix representation of a unary quasi-polynomial: the sequence
// satisfies the recurrence with characteristic polynomial
// X^N0 (X^m - 1)^(D+1), so dim = N0 + m(D+1) initial values determine it.
LinRep unary_to_linrep(const UnaryQP& g, const Alphabet& unary_alphabet);

} // namespace respoly
