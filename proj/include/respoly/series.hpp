#pragma once

#include "respoly/alphabet.hpp"
#include "respoly/formula.hpp"
#include "respoly/linrep.hpp"
#include "respoly/unary_qp.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace respoly {

// A function Sigma* -> Z in one of four exact representations. Values are
// immutable; every operation returns a fresh series.
class Series {
public:
    enum class Variant { Zero, Unary, Linear, Counting };

    static Series zero(Alphabet alphabet);
    // Requires a one-letter alphabet; g(n) is the value on the length-n word.
    static Series unary(Alphabet alphabet, UnaryQP g);
    static Series linear(LinRep rep);
    // coeff * (number of satisfying valuations of vars in the word).
    static Series counting(Alphabet alphabet, std::vector<std::string> vars,
                           FormulaPtr formula, Int coeff);

    Variant variant() const { return variant_; }
    const Alphabet& alphabet() const { return alphabet_; }

    const UnaryQP& unary_qp() const;                 // Unary only
    const LinRep& linrep() const;                    // Linear only
    const FormulaPtr& formula() const;               // Counting only
    const std::vector<std::string>& vars() const;    // Counting only
    const Int& coeff() const;                        // Counting only
    // Word already consumed by residuals of a Counting series (evaluation
    // prepends it); empty on freshly parsed series.
    const std::string& counting_prefix() const;

    Int eval(const Word& w) const;
    Int eval(std::string_view symbols) const;

    Series add(const Series& o) const;
    Series subtract(const Series& o) const;
    Series negate() const;
    Series scale(const Int& c) const;
    // w |-> f(u w).
    Series residual(std::string_view u) const;

    // Exact zero-equivalence; throws unsupported_variant for Counting.
    bool is_zero() const;

    // Series with the unary representation lifted to a linear one; identity
    // on Linear, zero rep for Zero. Throws for Counting.
    Series as_linear() const;

private:
    Series() = default;

    Variant variant_ = Variant::Zero;
    Alphabet alphabet_;
    std::vector<UnaryQP> unary_;          // 0 or 1 entries
    std::vector<LinRep> linear_;          // 0 or 1 entries
    FormulaPtr formula_;
    std::vector<std::string> vars_;
    Int coeff_ = 0;
    std::string counting_prefix_;

    void check_alphabet(const Alphabet& other) const;
    void check_symbols(std::string_view symbols) const;
};

// Exact semantic equality for Zero/Unary/Linear series; a unary side is
// lifted to a linear representation when the variants are mixed. Throws
// unsupported_variant when a Counting series is involved.
bool semantically_equal(const Series& a, const Series& b);

} // namespace respoly
