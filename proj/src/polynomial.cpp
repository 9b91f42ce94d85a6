#include "respoly/polynomial.hpp"

#include "respoly/errors.hpp"

#include <algorithm>

namespace respoly {

RationalPoly::RationalPoly(std::vector<Rat> coefficients) : coef_(std::move(coefficients)) {
    trim();
}

RationalPoly RationalPoly::constant(Rat c) {
    return RationalPoly(std::vector<Rat>{std::move(c)});
}

void RationalPoly::trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

const Rat& RationalPoly::coefficient(std::size_t i) const {
    static const Rat zero{0};
    return i < coef_.size() ? coef_[i] : zero;
}

Rat RationalPoly::leading() const {
    return coef_.empty() ? Rat(0) : coef_.back();
}

Rat RationalPoly::eval(const Rat& x) const {
    Rat acc{0};
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPoly RationalPoly::add(const RationalPoly& o) const {
    std::vector<Rat> out(std::max(coef_.size(), o.coef_.size()), Rat(0));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = coefficient(i) + o.coefficient(i);
    return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::negate() const { return scale(Rat(-1)); }

RationalPoly RationalPoly::scale(const Rat& c) const {
    std::vector<Rat> out(coef_);
    for (auto& v : out) v *= c;
    return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::shift_argument(const Int& shift) const {
    // Binomial expansion of each (X + shift)^i.
    std::vector<Rat> out(coef_.size(), Rat(0));
    std::vector<Rat> power{Rat(1)}; // (X + shift)^i, built incrementally
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        for (std::size_t j = 0; j < power.size(); ++j) out[j] += coef_[i] * power[j];
        std::vector<Rat> next(power.size() + 1, Rat(0));
        for (std::size_t j = 0; j < power.size(); ++j) {
            next[j] += power[j] * shift;
            next[j + 1] += power[j];
        }
        power = std::move(next);
    }
    return RationalPoly(std::move(out));
}

Int RationalPoly::root_bound() const {
    if (degree() <= 0) return 0;
    Rat m{0};
    for (std::size_t i = 0; i + 1 < coef_.size(); ++i) {
        Rat v = abs(coef_[i]) / abs(coef_.back());
        if (v > m) m = v;
    }
    return ceil_rational(m + 1);
}

} // namespace respoly
