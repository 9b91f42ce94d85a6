#include "respoly/linrep.hpp"

#include "respoly/errors.hpp"

#include <deque>

namespace respoly {

RatVector mul_row_matrix(const RatVector& v, const RatMatrix& m) {
    RatVector out(m.empty() ? 0 : m[0].size(), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
    }
    return out;
}

Rat dot(const RatVector& a, const RatVector& b) {
    Rat out{0};
    for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
    return out;
}

LinRep::LinRep(Alphabet alphabet, RatVector init, std::vector<RatMatrix> trans, RatVector final)
    : alphabet_(std::move(alphabet)),
      init_(std::move(init)),
      trans_(std::move(trans)),
      final_(std::move(final)) {
    std::size_t d = init_.size();
    if (d == 0) throw error("linrep dimension must be >= 1");
    if (final_.size() != d) throw error("linrep init/final dimension mismatch");
    if (trans_.size() != alphabet_.size())
        throw error("linrep needs one transition matrix per letter");
    for (const auto& m : trans_) {
        if (m.size() != d) throw error("linrep transition matrix has wrong dimension");
        for (const auto& row : m)
            if (row.size() != d) throw error("linrep transition matrix is not square");
    }
    for (const auto& w : words_up_to(alphabet_, 3)) {
        if (!is_integer(dot(row_after(w), final_))) {
            integral_on_short_words_ = false;
            break;
        }
    }
}

RatVector LinRep::row_after(std::string_view symbols) const {
    RatVector v = init_;
    for (char c : symbols) v = mul_row_matrix(v, trans_[alphabet_.index_of(c)]);
    return v;
}

Int LinRep::eval(std::string_view symbols) const {
    Rat v = dot(row_after(symbols), final_);
    if (!is_integer(v))
        throw error("linrep evaluates to non-integer " + format_rational(v) +
                    " (malformed representation)");
    return numerator(v);
}

LinRep LinRep::add(const LinRep& o) const {
    if (alphabet_ != o.alphabet_) throw alphabet_mismatch("adding linreps over different alphabets");
    std::size_t d1 = dim(), d2 = o.dim();
    RatVector init(d1 + d2, Rat(0)), final(d1 + d2, Rat(0));
    for (std::size_t i = 0; i < d1; ++i) init[i] = init_[i], final[i] = final_[i];
    for (std::size_t i = 0; i < d2; ++i) init[d1 + i] = o.init_[i], final[d1 + i] = o.final_[i];
    std::vector<RatMatrix> trans(alphabet_.size(), RatMatrix(d1 + d2, RatVector(d1 + d2, Rat(0))));
    for (std::size_t a = 0; a < alphabet_.size(); ++a) {
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d1; ++j) trans[a][i][j] = trans_[a][i][j];
        for (std::size_t i = 0; i < d2; ++i)
            for (std::size_t j = 0; j < d2; ++j) trans[a][d1 + i][d1 + j] = o.trans_[a][i][j];
    }
    return LinRep(alphabet_, std::move(init), std::move(trans), std::move(final));
}

LinRep LinRep::negate() const { return scale(Int(-1)); }

LinRep LinRep::scale(const Int& c) const {
    RatVector final(final_);
    for (auto& v : final) v *= c;
    return LinRep(alphabet_, init_, trans_, std::move(final));
}

LinRep LinRep::residual(std::string_view symbols) const {
    return LinRep(alphabet_, row_after(symbols), trans_, final_);
}

namespace {

// Reduces v against the row-echelon basis; returns true (and appends the
// reduced vector) if it was independent.
bool add_to_row_space(std::vector<RatVector>& basis, std::vector<std::size_t>& pivots, RatVector v) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (v[pivots[k]] == 0) continue;
        Rat f = v[pivots[k]] / basis[k][pivots[k]];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[k][j];
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] != 0) {
            pivots.push_back(j);
            basis.push_back(std::move(v));
            return true;
        }
    }
    return false;
}

} // namespace

bool LinRep::is_zero() const {
    std::vector<RatVector> basis;
    std::vector<std::size_t> pivots;
    std::deque<RatVector> worklist;
    worklist.push_back(init_);
    while (!worklist.empty() && basis.size() < dim()) {
        RatVector v = std::move(worklist.front());
        worklist.pop_front();
        if (!add_to_row_space(basis, pivots, v)) continue;
        const RatVector& added = basis.back();
        for (std::size_t a = 0; a < alphabet_.size(); ++a)
            worklist.push_back(mul_row_matrix(added, trans_[a]));
    }
    for (const auto& b : basis)
        if (dot(b, final_) != 0) return false;
    return true;
}

LinRep unary_to_linrep(const UnaryQP& g, const Alphabet& unary_alphabet) {
    if (unary_alphabet.size() != 1)
        throw error("unary_to_linrep needs a single-letter alphabet");
    UnaryQP h = g.normalized();
    std::size_t n0 = h.threshold();
    std::size_t m = h.period();
    int deg = h.degree();
    std::size_t d = n0 + (deg >= 0 ? m * static_cast<std::size_t>(deg + 1) : 0);
    if (d == 0) {
        // The zero function.
        return LinRep(unary_alphabet, {Rat(0)}, {RatMatrix{{Rat(0)}}}, {Rat(0)});
    }
    // Coefficients of X^n0 (X^m - 1)^(D+1) below the leading term give the
    // recurrence g(n+d) = -sum_i a_i g(n+i), valid from n = 0 on.
    std::vector<Int> a(d, Int(0));
    if (deg >= 0) {
        std::size_t reps = static_cast<std::size_t>(deg + 1);
        // (X^m - 1)^reps = sum_t C(reps,t) (-1)^(reps-t) X^(mt)
        Int binom{1};
        for (std::size_t t = 0; t < reps; ++t) {
            if (t > 0) binom = binom * Int(reps - t + 1) / Int(t);
            Int sign = ((reps - t) % 2 == 0) ? Int(1) : Int(-1);
            a[n0 + m * t] = binom * sign;
        }
    }
    RatMatrix mat(d, RatVector(d, Rat(0)));
    for (std::size_t j = 0; j + 1 < d; ++j) mat[j + 1][j] = 1;
    for (std::size_t i = 0; i < d; ++i) mat[i][d - 1] = Rat(-a[i]);
    RatVector init(d), final(d, Rat(0));
    for (std::size_t n = 0; n < d; ++n) init[n] = Rat(h.eval(n));
    final[0] = 1;
    return LinRep(unary_alphabet, std::move(init), {std::move(mat)}, std::move(final));
}

} // namespace respoly
