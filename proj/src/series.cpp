#include "respoly/series.hpp"

#include "respoly/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace respoly {

Series Series::zero(Alphabet alphabet) {
    Series s;
    s.variant_ = Variant::Zero;
    s.alphabet_ = std::move(alphabet);
    return s;
}

Series Series::unary(Alphabet alphabet, UnaryQP g) {
    if (alphabet.size() != 1)
        throw unsupported_variant("unary series require a one-letter alphabet");
    Series s;
    s.variant_ = Variant::Unary;
    s.alphabet_ = std::move(alphabet);
    s.unary_.push_back(std::move(g));
    return s;
}

Series Series::linear(LinRep rep) {
    Series s;
    s.variant_ = Variant::Linear;
    s.alphabet_ = rep.alphabet();
    s.linear_.push_back(std::move(rep));
    return s;
}

Series Series::counting(Alphabet alphabet, std::vector<std::string> vars, FormulaPtr formula,
                        Int coeff) {
    std::set<std::string> declared(vars.begin(), vars.end());
    if (declared.size() != vars.size())
        throw parse_error("counting series: duplicate variable in the tuple");
    for (const auto& v : free_variables(formula))
        if (!declared.count(v))
            throw parse_error("counting series: formula uses undeclared variable '" + v + "'");
    Series s;
    s.variant_ = Variant::Counting;
    s.alphabet_ = std::move(alphabet);
    s.formula_ = std::move(formula);
    s.vars_ = std::move(vars);
    s.coeff_ = std::move(coeff);
    return s;
}

const UnaryQP& Series::unary_qp() const {
    if (variant_ != Variant::Unary) throw unsupported_variant("not a unary series");
    return unary_.front();
}

const LinRep& Series::linrep() const {
    if (variant_ != Variant::Linear) throw unsupported_variant("not a linear series");
    return linear_.front();
}

const FormulaPtr& Series::formula() const {
    if (variant_ != Variant::Counting) throw unsupported_variant("not a counting series");
    return formula_;
}

const std::vector<std::string>& Series::vars() const {
    if (variant_ != Variant::Counting) throw unsupported_variant("not a counting series");
    return vars_;
}

const Int& Series::coeff() const {
    if (variant_ != Variant::Counting) throw unsupported_variant("not a counting series");
    return coeff_;
}

const std::string& Series::counting_prefix() const {
    if (variant_ != Variant::Counting) throw unsupported_variant("not a counting series");
    return counting_prefix_;
}

void Series::check_alphabet(const Alphabet& other) const {
    if (alphabet_ != other)
        throw alphabet_mismatch("series alphabets differ: '" + alphabet_.letters() + "' vs '" +
                                other.letters() + "'");
}

void Series::check_symbols(std::string_view symbols) const {
    for (char c : symbols)
        if (!alphabet_.contains(c))
            throw alphabet_mismatch(std::string("symbol '") + c + "' not in alphabet '" +
                                    alphabet_.letters() + "'");
}

Int Series::eval(const Word& w) const {
    check_alphabet(w.alphabet());
    return eval(w.symbols());
}

Int Series::eval(std::string_view symbols) const {
    check_symbols(symbols);
    switch (variant_) {
    case Variant::Zero:
        return 0;
    case Variant::Unary:
        return unary_.front().eval(symbols.size());
    case Variant::Linear:
        return linear_.front().eval(symbols);
    case Variant::Counting: {
        std::string full = counting_prefix_ + std::string(symbols);
        return coeff_ * count_valuations(formula_, vars_, full);
    }
    }
    return 0;
}

Series Series::add(const Series& o) const {
    check_alphabet(o.alphabet_);
    if (variant_ == Variant::Zero) return o;
    if (o.variant_ == Variant::Zero) return *this;
    if (variant_ == Variant::Unary && o.variant_ == Variant::Unary)
        return unary(alphabet_, unary_.front().add(o.unary_.front()));
    if (variant_ == Variant::Linear && o.variant_ == Variant::Linear)
        return linear(linear_.front().add(o.linear_.front()));
    throw unsupported_variant("add requires both sides unary or both linear");
}

Series Series::subtract(const Series& o) const { return add(o.negate()); }

Series Series::negate() const {
    switch (variant_) {
    case Variant::Zero:
        return *this;
    case Variant::Unary:
        return unary(alphabet_, unary_.front().negate());
    case Variant::Linear:
        return linear(linear_.front().negate());
    case Variant::Counting: {
        Series s = *this;
        s.coeff_ = -coeff_;
        return s;
    }
    }
    return *this;
}

Series Series::scale(const Int& c) const {
    switch (variant_) {
    case Variant::Zero:
        return *this;
    case Variant::Unary:
        return unary(alphabet_, unary_.front().scale(c));
    case Variant::Linear:
        return linear(linear_.front().scale(c));
    case Variant::Counting: {
        Series s = *this;
        s.coeff_ = coeff_ * c;
        return s;
    }
    }
    return *this;
}

Series Series::residual(std::string_view u) const {
    check_symbols(u);
    switch (variant_) {
    case Variant::Zero:
        return *this;
    case Variant::Unary:
        return unary(alphabet_, unary_.front().shifted(u.size()));
    case Variant::Linear:
        return linear(linear_.front().residual(u));
    case Variant::Counting: {
        Series s = *this;
        s.counting_prefix_ += std::string(u);
        return s;
    }
    }
    return *this;
}

bool Series::is_zero() const {
    switch (variant_) {
    case Variant::Zero:
        return true;
    case Variant::Unary:
        return unary_.front().is_zero();
    case Variant::Linear:
        return linear_.front().is_zero();
    case Variant::Counting:
        throw unsupported_variant("zero-equivalence is not decided for counting series");
    }
    return false;
}

Series Series::as_linear() const {
    switch (variant_) {
    case Variant::Linear:
        return *this;
    case Variant::Unary:
        return linear(unary_to_linrep(unary_.front(), alphabet_));
    case Variant::Zero: {
        std::vector<RatMatrix> trans(alphabet_.size(), RatMatrix{{Rat(1)}});
        return linear(LinRep(alphabet_, {Rat(0)}, std::move(trans), {Rat(0)}));
    }
    case Variant::Counting:
        throw unsupported_variant("counting series have no linear representation here");
    }
    throw unsupported_variant("unknown variant");
}

bool semantically_equal(const Series& a, const Series& b) {
    if (a.variant() == Series::Variant::Zero) return b.is_zero();
    if (b.variant() == Series::Variant::Zero) return a.is_zero();
    if (a.variant() == b.variant()) return a.subtract(b).is_zero();
    return a.as_linear().subtract(b.as_linear()).is_zero();
}

} // namespace respoly
