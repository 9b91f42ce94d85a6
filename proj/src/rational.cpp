#include "respoly/rational.hpp"

#include "respoly/errors.hpp"

namespace respoly {

Int to_integer(const Rat& r) {
    if (!is_integer(r))
        throw error("expected an integer value, got " + format_rational(r));
    return numerator(r);
}

Rat parse_rational(std::string_view text) {
    if (text.empty()) throw parse_error("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rat(Int(std::string(text)));
        Int p{std::string(text.substr(0, slash))};
        Int q{std::string(text.substr(slash + 1))};
        if (q == 0) throw parse_error("zero denominator in rational literal");
        return Rat(p, q);
    } catch (const std::exception&) {
        throw parse_error("malformed rational literal: " + std::string(text));
    }
}

std::string format_rational(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Int ceil_rational(const Rat& r) {
    Int q = numerator(r) / denominator(r); // truncates toward zero
    if (q * denominator(r) != numerator(r) && r > 0) ++q;
    return q;
}

} // namespace respoly
