#pragma once

#include "respoly/alphabet.hpp"
#include "respoly/rational.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace respoly {

// First-order formulas over word positions: letter atoms atom(a,x), order
// atoms lt(x,y) / eq(x,y), modular position atoms mod(x,r,m), boolean
// connectives and first-order quantifiers. Positions are 0-based.
struct FOFormula {
    enum class Kind { True, False, LetterAtom, Less, Equal, ModAtom, And, Or, Not, Implies, Exists, Forall };

    Kind kind;
    char letter = 0;                    // LetterAtom
    std::string var, var2;              // atoms bind var/var2; quantifiers bind var
    unsigned long residue = 0, modulus = 1; // ModAtom
    std::vector<std::shared_ptr<const FOFormula>> children;
};

using FormulaPtr = std::shared_ptr<const FOFormula>;

// Functional-term syntax, e.g. "and(atom(a,x),atom(b,y))",
// "exists(z,lt(x,z))", "mod(x,0,2)", "not(...)", "implies(f,g)", "true".
FormulaPtr parse_formula(std::string_view text, const Alphabet& alphabet);

// Free variables in order of first occurrence.
std::vector<std::string> free_variables(const FormulaPtr& f);

// Number of valuations of `vars` (tuples of positions in w) satisfying f,
// by exhaustive enumeration of the |w|^k tuples.
Int count_valuations(const FormulaPtr& f, const std::vector<std::string>& vars,
                     std::string_view w);

std::string formula_to_string(const FormulaPtr& f);

} // namespace respoly
