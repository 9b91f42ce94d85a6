#pragma once

#include "respoly/rational.hpp"

#include <vector>

namespace respoly {

// Dense univariate polynomial with exact rational coefficients,
// coefficient index = degree. Kept trimmed: the leading coefficient is
// non-zero unless the polynomial is zero.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rat> coefficients);
    static RationalPoly constant(Rat c);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    bool is_zero() const { return coef_.empty(); }
    const std::vector<Rat>& coefficients() const { return coef_; }
    const Rat& coefficient(std::size_t i) const;
    Rat leading() const;

    Rat eval(const Rat& x) const;
    Rat eval(const Int& n) const { return eval(Rat(n)); }

    RationalPoly add(const RationalPoly& o) const;
    RationalPoly negate() const;
    RationalPoly scale(const Rat& c) const;
    // P(X + shift).
    RationalPoly shift_argument(const Int& shift) const;

    // Smallest N such that every real root of the polynomial is < N
    // (Cauchy bound); 0 for constants. Beyond it the sign is the leading sign.
    Int root_bound() const;

    bool operator==(const RationalPoly& o) const { return coef_ == o.coef_; }
    bool operator!=(const RationalPoly& o) const { return !(*this == o); }

private:
    std::vector<Rat> coef_;
    void trim();
};

} // namespace respoly
