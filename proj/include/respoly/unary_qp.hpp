#pragma once

#include "respoly/polynomial.hpp"
#include "respoly/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace respoly {

// A function N -> Z given by explicit values g(0..N0-1) followed by an
// eventually-quasi-polynomial tail: g(n) = P_{n mod m}(n) for n >= N0.
// The threshold N0 is the prefix length. Construction checks that every
// residue polynomial is integer-valued on its class beyond the threshold
// (degree+1 sample points force the rest by finite differences).
class UnaryQP {
public:
    UnaryQP(); // the zero function
    UnaryQP(std::vector<Int> prefix, std::size_t period, std::vector<RationalPoly> tail);

    static UnaryQP constant(Int c);
    static UnaryQP from_values_then_poly(std::vector<Int> prefix, RationalPoly tail);

    const std::vector<Int>& prefix() const { return prefix_; }
    std::size_t threshold() const { return prefix_.size(); }
    std::size_t period() const { return period_; }
    const std::vector<RationalPoly>& tail() const { return tail_; }

    Int eval(std::uint64_t n) const;

    UnaryQP add(const UnaryQP& o) const;
    UnaryQP negate() const;
    UnaryQP scale(const Int& c) const;
    // n |-> g(n + shift)
    UnaryQP shifted(std::uint64_t shift) const;

    // Least period and least threshold; idempotent.
    UnaryQP normalized() const;

    // Max degree over tail polynomials; -1 iff eventually zero.
    int degree() const;
    bool is_zero() const;
    // g(n) >= 0 for every n >= 0 (prefix included).
    bool is_nonnegative_everywhere() const;
    // Least n with g(n) < 0, together with the value there.
    std::optional<std::pair<std::uint64_t, Int>> find_negative() const;

    bool operator==(const UnaryQP& o) const;

private:
    std::vector<Int> prefix_;
    std::size_t period_ = 1;
    std::vector<RationalPoly> tail_;

    void check_integrality() const;
};

} // namespace respoly
