#include "respoly/unary_qp.hpp"

#include "respoly/errors.hpp"

#include <numeric>

namespace respoly {

UnaryQP::UnaryQP() : period_(1), tail_{RationalPoly()} {}

UnaryQP::UnaryQP(std::vector<Int> prefix, std::size_t period, std::vector<RationalPoly> tail)
    : prefix_(std::move(prefix)), period_(period), tail_(std::move(tail)) {
    if (period_ == 0) throw error("unary-qp period must be >= 1");
    if (tail_.size() != period_)
        throw error("unary-qp needs exactly one tail polynomial per residue class");
    check_integrality();
}

UnaryQP UnaryQP::constant(Int c) {
    return UnaryQP({}, 1, {RationalPoly::constant(Rat(std::move(c)))});
}

UnaryQP UnaryQP::from_values_then_poly(std::vector<Int> prefix, RationalPoly tail) {
    return UnaryQP(std::move(prefix), 1, {std::move(tail)});
}

void UnaryQP::check_integrality() const {
    for (std::size_t r = 0; r < period_; ++r) {
        const auto& p = tail_[r];
        if (p.is_zero()) continue;
        // First point n >= N0 with n = r (mod m).
        std::uint64_t n0 = threshold();
        std::uint64_t start = n0 + ((r + period_ - n0 % period_) % period_);
        for (int i = 0; i <= p.degree(); ++i) {
            Rat v = p.eval(Int(start + static_cast<std::uint64_t>(i) * period_));
            if (!is_integer(v))
                throw error("tail polynomial for residue " + std::to_string(r) +
                            " is not integer-valued on its class");
        }
    }
}

Int UnaryQP::eval(std::uint64_t n) const {
    if (n < prefix_.size()) return prefix_[n];
    return to_integer(tail_[n % period_].eval(Int(n)));
}

UnaryQP UnaryQP::add(const UnaryQP& o) const {
    std::size_t m = std::lcm(period_, o.period_);
    std::size_t n0 = std::max(prefix_.size(), o.prefix_.size());
    std::vector<Int> prefix(n0);
    for (std::size_t n = 0; n < n0; ++n) prefix[n] = eval(n) + o.eval(n);
    std::vector<RationalPoly> tail(m);
    for (std::size_t r = 0; r < m; ++r)
        tail[r] = tail_[r % period_].add(o.tail_[r % o.period_]);
    return UnaryQP(std::move(prefix), m, std::move(tail)).normalized();
}

UnaryQP UnaryQP::negate() const { return scale(Int(-1)); }

UnaryQP UnaryQP::scale(const Int& c) const {
    std::vector<Int> prefix(prefix_);
    for (auto& v : prefix) v *= c;
    std::vector<RationalPoly> tail(tail_);
    for (auto& p : tail) p = p.scale(Rat(c));
    return UnaryQP(std::move(prefix), period_, std::move(tail)).normalized();
}

UnaryQP UnaryQP::shifted(std::uint64_t shift) const {
    if (shift == 0) return normalized();
    std::size_t n0 = prefix_.size() > shift ? prefix_.size() - shift : 0;
    std::vector<Int> prefix(n0);
    for (std::size_t n = 0; n < n0; ++n) prefix[n] = prefix_[n + shift];
    std::vector<RationalPoly> tail(period_);
    for (std::size_t r = 0; r < period_; ++r)
        tail[r] = tail_[(r + shift) % period_].shift_argument(Int(shift));
    return UnaryQP(std::move(prefix), period_, std::move(tail)).normalized();
}

UnaryQP UnaryQP::normalized() const {
    // Least period: merging residue classes needs equal polynomials, so a
    // divisor m' works iff P_r == P_{r mod m'} for every r.
    std::size_t m = period_;
    for (std::size_t cand = 1; cand < period_; ++cand) {
        if (period_ % cand != 0) continue;
        bool ok = true;
        for (std::size_t r = 0; ok && r < period_; ++r)
            if (tail_[r] != tail_[r % cand]) ok = false;
        if (ok) {
            m = cand;
            break;
        }
    }
    std::vector<RationalPoly> tail(tail_.begin(), tail_.begin() + static_cast<long>(m));
    // Least threshold: absorb prefix values that the tail already produces.
    std::vector<Int> prefix(prefix_);
    while (!prefix.empty()) {
        std::size_t n = prefix.size() - 1;
        Rat v = tail[n % m].eval(Int(n));
        if (!is_integer(v) || numerator(v) != prefix.back()) break;
        prefix.pop_back();
    }
    return UnaryQP(std::move(prefix), m, std::move(tail));
}

int UnaryQP::degree() const {
    int d = -1;
    for (const auto& p : tail_) d = std::max(d, p.degree());
    return d;
}

bool UnaryQP::is_zero() const {
    UnaryQP g = normalized();
    if (!g.prefix_.empty()) return false;
    for (const auto& p : g.tail_)
        if (!p.is_zero()) return false;
    return true;
}

bool UnaryQP::is_nonnegative_everywhere() const {
    return !find_negative().has_value();
}

std::optional<std::pair<std::uint64_t, Int>> UnaryQP::find_negative() const {
    for (std::size_t n = 0; n < prefix_.size(); ++n)
        if (prefix_[n] < 0) return std::make_pair(static_cast<std::uint64_t>(n), prefix_[n]);
    std::optional<std::pair<std::uint64_t, Int>> best;
    auto consider = [&](std::uint64_t n, Int v) {
        if (!best || n < best->first) best = std::make_pair(n, std::move(v));
    };
    for (std::size_t r = 0; r < period_; ++r) {
        const auto& p = tail_[r];
        if (p.is_zero()) continue;
        // Beyond every real root the sign equals the leading sign, so only
        // class points up to the Cauchy bound need scanning; one extra point
        // past the bound witnesses an eventually-negative class.
        Int bound = p.root_bound();
        std::uint64_t first = threshold() + ((r + period_ - threshold() % period_) % period_);
        bool found = false;
        for (Int k(first); k <= bound; k += Int(period_)) {
            Rat v = p.eval(k);
            if (v < 0) {
                consider(k.convert_to<std::uint64_t>(), to_integer(v));
                found = true;
                break;
            }
        }
        if (!found && p.leading() < 0) {
            Int k(first);
            while (k <= bound) k += Int(period_);
            consider(k.convert_to<std::uint64_t>(), to_integer(p.eval(k)));
        }
    }
    return best;
}

bool UnaryQP::operator==(const UnaryQP& o) const {
    return prefix_ == o.prefix_ && period_ == o.period_ && tail_ == o.tail_;
}

} // namespace respoly
