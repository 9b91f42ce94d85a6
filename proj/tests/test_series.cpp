#include "doctest.h"

#include "respoly/errors.hpp"
#include "respoly/formula.hpp"
#include "respoly/json_io.hpp"
#include "respoly/series.hpp"

#include "helpers.hpp"

#include <string>
#include <vector>

using namespace respoly;
using testutil::an;
using testutil::qp_series;

TEST_CASE("rational literals round-trip") {
    REQUIRE(parse_rational("3/4") == Rat(3, 4));
    REQUIRE(parse_rational("-5") == Rat(-5));
    REQUIRE(parse_rational("-7/2") == Rat(-7, 2));
    REQUIRE(format_rational(Rat(3, 4)) == "3/4");
    REQUIRE(format_rational(Rat(12)) == "12");
    REQUIRE(format_rational(Rat(-7, 2)) == "-7/2");
    REQUIRE(to_integer(Rat(6, 2)) == Int(3));
    REQUIRE(ceil_rational(Rat(5, 2)) == Int(3));
    REQUIRE(ceil_rational(Rat(-5, 2)) == Int(-2));
    REQUIRE(ceil_rational(Rat(4)) == Int(4));
    REQUIRE_THROWS_AS(parse_rational("1/0"), parse_error);
    REQUIRE_THROWS_AS(parse_rational("x"), parse_error);
    REQUIRE_THROWS_AS(to_integer(Rat(1, 2)), error);
}

TEST_CASE("polynomials evaluate, combine and bound their roots") {
    RationalPoly p({Rat(-1), Rat(1)}); // X - 1
    REQUIRE(p.degree() == 1);
    REQUIRE(p.eval(Int(5)) == Rat(4));
    REQUIRE(p.add(p.negate()).is_zero());
    REQUIRE(p.scale(Rat(2)).eval(Int(3)) == Rat(4));

    // (X+2) - 1 = X + 1
    RationalPoly shifted = p.shift_argument(Int(2));
    REQUIRE(shifted.eval(Int(0)) == Rat(1));
    REQUIRE(shifted.eval(Int(7)) == Rat(8));

    // beyond the root bound the sign is the leading sign
    RationalPoly q({Rat(100), Rat(-25), Rat(1)}); // X^2 - 25X + 100, roots ~4.4 and ~20.6
    Int bound = q.root_bound();
    REQUIRE(q.eval(bound) > 0);
    REQUIRE(q.eval(Int(bound + 10)) > 0);
    REQUIRE(RationalPoly::constant(Rat(3)).root_bound() == 0);

    // trimming keeps the leading coefficient non-zero
    RationalPoly padded({Rat(2), Rat(0), Rat(0)});
    REQUIRE(padded.degree() == 0);
}

TEST_CASE("unary quasi-polynomials evaluate their declared data") {
    Series badexok = qp_series({1}, 1, {{"-1", "1"}}); // 1 then n-1
    REQUIRE(badexok.eval("") == Int(1));
    REQUIRE(badexok.eval("a") == Int(0));
    REQUIRE(badexok.eval("aa") == Int(1));
    REQUIRE(badexok.eval(an(200)) == Int(199));

    Series parity = qp_series({}, 2, {{"0"}, {"1"}});
    for (std::size_t n = 0; n < 12; ++n) REQUIRE(parity.eval(an(n)) == Int(n % 2));

    // residue polynomials may have rational coefficients as long as the
    // values on their class are integers
    Series half = qp_series({}, 2, {{"0", "1/2"}, {"0"}}); // n/2 on evens, 0 on odds
    REQUIRE(half.eval(an(6)) == Int(3));
    REQUIRE(half.eval(an(7)) == Int(0));
    REQUIRE_THROWS_AS(qp_series({}, 1, {{"1/2"}}), error); // never integral
}

TEST_CASE("unary addition aligns thresholds and periods") {
    Series badexko = qp_series({1, 0, 1}, 1, {{"-3", "1"}});
    Series three = qp_series({}, 1, {{"3"}});
    Series sum = badexko.add(three);
    for (std::size_t n = 0; n < 30; ++n)
        REQUIRE(sum.eval(an(n)) == badexko.eval(an(n)) + 3);

    UnaryQP normalized = sum.unary_qp().normalized();
    REQUIRE(normalized.prefix() == std::vector<Int>{4, 3, 4});
    REQUIRE(normalized.period() == 1);
    REQUIRE(normalized.tail()[0] == RationalPoly({Rat(0), Rat(1)})); // tail n

    Series parity = qp_series({}, 2, {{"0"}, {"1"}});
    Series doubled = parity.scale(Int(2));
    for (std::size_t n = 0; n < 8; ++n) REQUIRE(doubled.eval(an(n)) == Int(2 * (n % 2)));

    // periods 2 and 3 align at 6
    Series third = qp_series({}, 3, {{"0"}, {"1"}, {"2"}});
    Series mixed = parity.add(third);
    for (std::size_t n = 0; n < 24; ++n) REQUIRE(mixed.eval(an(n)) == Int(n % 2 + n % 3));
}

TEST_CASE("normalization finds the least period and threshold") {
    // prefix [1,0], period 2, both classes X-1: g(1)=0 matches the tail,
    // g(0)=1 does not
    UnaryQP g({Int(1), Int(0)}, 2,
              {RationalPoly({Rat(-1), Rat(1)}), RationalPoly({Rat(-1), Rat(1)})});
    UnaryQP n = g.normalized();
    REQUIRE(n.prefix() == std::vector<Int>{1});
    REQUIRE(n.period() == 1);
    REQUIRE(n.tail()[0] == RationalPoly({Rat(-1), Rat(1)}));
    REQUIRE(n.normalized() == n); // idempotent

    for (std::size_t i = 0; i < 20; ++i) REQUIRE(n.eval(i) == g.eval(i));

    // genuine period survives
    UnaryQP alt({}, 2, {RationalPoly::constant(Rat(0)), RationalPoly::constant(Rat(1))});
    REQUIRE(alt.normalized().period() == 2);
}

TEST_CASE("degree and nonnegativity answer the membership questions") {
    UnaryQP badexko({Int(1), Int(0), Int(1)}, 1, {RationalPoly({Rat(-3), Rat(1)})});
    REQUIRE(badexko.degree() == 1);
    REQUIRE(badexko.is_nonnegative_everywhere());
    REQUIRE(!badexko.find_negative().has_value());

    UnaryQP choose2({}, 1, {RationalPoly({Rat(0), Rat(-1, 2), Rat(1, 2)})});
    REQUIRE(choose2.degree() == 2);

    UnaryQP vanishing({Int(5), Int(2)}, 1, {RationalPoly()});
    REQUIRE(vanishing.degree() == -1);
    REQUIRE(!vanishing.is_zero());
    REQUIRE(UnaryQP().is_zero());

    // badexko|aa - badexko|a takes the value -1 at n=1
    Series f = qp_series({1, 0, 1}, 1, {{"-3", "1"}});
    Series diff = f.residual("aa").subtract(f.residual("a"));
    auto witness = diff.unary_qp().find_negative();
    REQUIRE(witness.has_value());
    REQUIRE(witness->first == 1);
    REQUIRE(witness->second == Int(-1));
    REQUIRE(!diff.unary_qp().is_nonnegative_everywhere());

    // negative values hiding beyond the threshold are still found
    UnaryQP dipped({}, 1, {RationalPoly({Rat(-10), Rat(1)})}); // n - 10
    auto dip = dipped.find_negative();
    REQUIRE(dip.has_value());
    REQUIRE(dip->first == 0);
    REQUIRE(dipped.eval(9) == Int(-1));
}

TEST_CASE("linear representations evaluate and residuate exactly") {
    LinRep len = testutil::length_rep();
    REQUIRE(len.dim() == 2);
    REQUIRE(len.eval("") == Int(0));
    REQUIRE(len.eval(an(5)) == Int(5));

    LinRep shifted = len.residual("aa");
    REQUIRE(shifted.init() == RatVector{Rat(1), Rat(2)});
    for (std::size_t n = 0; n < 10; ++n) REQUIRE(shifted.eval(an(n)) == Int(n + 2));

    REQUIRE(len.add(len.negate()).is_zero());
    REQUIRE(len.scale(Int(3)).eval(an(4)) == Int(12));
    REQUIRE(!len.is_zero());
}

TEST_CASE("exact zeroness certifies cross-representation equality") {
    Series identity = qp_series({}, 1, {{"0", "1"}});
    Series as_linear = identity.as_linear();
    REQUIRE(as_linear.variant() == Series::Variant::Linear);
    Series len = Series::linear(testutil::length_rep());
    REQUIRE(len.subtract(as_linear).is_zero());
    REQUIRE(semantically_equal(len, identity));

    Series badexok = qp_series({1}, 1, {{"-1", "1"}});
    REQUIRE(!badexok.residual("aa").subtract(badexok.residual("a")).is_zero());
    REQUIRE(badexok.subtract(badexok).is_zero());
    REQUIRE(semantically_equal(Series::zero(Alphabet("a")),
                               badexok.subtract(badexok)));
}

TEST_CASE("unary functions lift to companion linear representations") {
    std::vector<Series> functions = {
        qp_series({1}, 1, {{"-1", "1"}}),
        qp_series({1, 0, 1}, 1, {{"-3", "1"}}),
        qp_series({}, 2, {{"0"}, {"1"}}),
        qp_series({}, 1, {{"0", "-1/2", "1/2"}}),
        qp_series({}, 1, {{"1"}}),
    };
    for (const Series& f : functions) {
        Series lifted = f.as_linear();
        for (std::size_t n = 0; n <= 50; ++n) REQUIRE(lifted.eval(an(n)) == f.eval(an(n)));
        REQUIRE(lifted.subtract(f.as_linear()).is_zero());
    }
    REQUIRE(qp_series({}, 1, {{"1"}}).as_linear().linrep().dim() == 1);
}

TEST_CASE("counting series enumerate satisfying valuations") {
    Alphabet ab("ab");
    FormulaPtr pairs = parse_formula("and(atom(a,x),atom(b,y))", ab);
    Series count = Series::counting(ab, {"x", "y"}, pairs, Int(1));
    REQUIRE(count.eval("aabb") == Int(4));
    REQUIRE(count.eval("") == Int(0));
    REQUIRE(count.eval("ba") == Int(1));

    // coefficient scales the count
    Series twice = Series::counting(ab, {"x", "y"}, pairs, Int(-2));
    REQUIRE(twice.eval("aabb") == Int(-8));

    // residuals prepend the consumed prefix
    Series tail = count.residual("ab");
    REQUIRE(tail.counting_prefix() == "ab");
    REQUIRE(tail.eval("b") == count.eval("abb"));

    // cross-check against the direct product formula
    for (std::size_t len = 0; len <= 6; ++len)
        for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
            std::string w;
            std::size_t na = 0, nb = 0;
            for (std::size_t i = 0; i < len; ++i) {
                bool isa = bits & (std::size_t{1} << i);
                w += isa ? 'a' : 'b';
                (isa ? na : nb)++;
            }
            REQUIRE(count.eval(w) == Int(na * nb));
        }
}

TEST_CASE("pointwise laws hold across representations") {
    std::vector<Series> unary = {
        qp_series({1}, 1, {{"-1", "1"}}),
        qp_series({}, 2, {{"0"}, {"1"}}),
        Series::zero(Alphabet("a")),
    };
    for (const Series& s : unary)
        for (const Series& t : unary) {
            if (s.variant() == Series::Variant::Zero || t.variant() == Series::Variant::Zero)
                continue;
            Series sum = s.add(t);
            for (std::size_t n = 0; n <= 50; ++n)
                REQUIRE(sum.eval(an(n)) == s.eval(an(n)) + t.eval(an(n)));
        }
    for (const Series& s : unary) {
        for (std::size_t n = 0; n <= 50; ++n) {
            REQUIRE(s.negate().eval(an(n)) == -s.eval(an(n)));
            REQUIRE(s.residual("aaa").eval(an(n)) == s.eval(an(n + 3)));
        }
        REQUIRE(semantically_equal(s.residual(""), s));
    }

    Series len = Series::linear(testutil::length_rep());
    Series lsum = len.add(len.scale(Int(2)));
    for (std::size_t n = 0; n <= 20; ++n) REQUIRE(lsum.eval(an(n)) == Int(3 * n));
}

TEST_CASE("foreign alphabets and unsupported mixes are rejected") {
    Series badexok = qp_series({1}, 1, {{"-1", "1"}});
    Series len = Series::linear(testutil::length_rep());

    REQUIRE_THROWS_AS(badexok.eval("ab"), alphabet_mismatch);
    REQUIRE_THROWS_AS(badexok.add(len), unsupported_variant);
    REQUIRE_THROWS_AS(Series::unary(Alphabet("ab"), UnaryQP::constant(Int(1))),
                      unsupported_variant);

    Alphabet ab("ab");
    Series count = Series::counting(ab, {"x"}, parse_formula("atom(a,x)", ab), Int(1));
    REQUIRE_THROWS_AS(count.is_zero(), unsupported_variant);
    REQUIRE_THROWS_AS(count.as_linear(), unsupported_variant);
    REQUIRE_THROWS_AS(count.add(count), unsupported_variant);

    Series zb = Series::zero(Alphabet("b"));
    REQUIRE_THROWS_AS(badexok.add(zb), alphabet_mismatch);

    REQUIRE_THROWS_AS(Series::counting(ab, {"x", "x"},
                                       parse_formula("atom(a,x)", ab), Int(1)),
                      parse_error);
    REQUIRE_THROWS_AS(Series::counting(ab, {"x"},
                                       parse_formula("atom(a,y)", ab), Int(1)),
                      parse_error);
}

TEST_CASE("formula parser reads the functional syntax") {
    Alphabet ab("ab");

    FormulaPtr f = parse_formula("and(atom(a,x),atom(b,y))", ab);
    REQUIRE(free_variables(f) == std::vector<std::string>{"x", "y"});
    REQUIRE(formula_to_string(f) == "and(atom(a,x),atom(b,y))");

    FormulaPtr g = parse_formula("exists(z,and(lt(x,z),atom(b,z)))", ab);
    REQUIRE(free_variables(g) == std::vector<std::string>{"x"});
    REQUIRE(formula_to_string(parse_formula(formula_to_string(g), ab)) ==
            formula_to_string(g));

    // 'b at some position after every a': no free variables
    FormulaPtr h = parse_formula("forall(x,implies(atom(a,x),exists(y,and(lt(x,y),atom(b,y)))))", ab);
    REQUIRE(free_variables(h).empty());
    REQUIRE(count_valuations(h, {}, "ab") == Int(1));
    REQUIRE(count_valuations(h, {}, "ba") == Int(0));

    // modular position atom picks even positions
    FormulaPtr m = parse_formula("mod(x,0,2)", Alphabet("a"));
    REQUIRE(count_valuations(m, {"x"}, "aaaaa") == Int(3));

    REQUIRE(count_valuations(parse_formula("true", ab), {}, "") == Int(1));
    REQUIRE(count_valuations(parse_formula("false", ab), {}, "abab") == Int(0));
    REQUIRE(count_valuations(parse_formula("atom(a,x)", ab), {"x"}, "") == Int(0));
    REQUIRE(count_valuations(parse_formula("or(eq(x,y),lt(x,y))", ab), {"x", "y"}, "aaa") ==
            Int(6));
}

TEST_CASE("formula parser rejects malformed input") {
    Alphabet ab("ab");
    REQUIRE_THROWS_AS(parse_formula("atom(c,x)", ab), parse_error);
    REQUIRE_THROWS_AS(parse_formula("and(atom(a,x))", ab), parse_error);
    REQUIRE_THROWS_AS(parse_formula("exists(x,exists(x,atom(a,x)))", ab), parse_error);
    REQUIRE_THROWS_AS(parse_formula("mod(x,2,2)", ab), parse_error);
    REQUIRE_THROWS_AS(parse_formula("mod(x,0,0)", ab), parse_error);
    REQUIRE_THROWS_AS(parse_formula("besides(x,y)", ab), parse_error);
    REQUIRE_THROWS_AS(parse_formula("atom(a,x))", ab), parse_error);
    REQUIRE_THROWS_AS(parse_formula("", ab), parse_error);
}

TEST_CASE("series JSON round-trips every kind") {
    Series badexko = qp_series({1, 0, 1}, 1, {{"-3", "1"}});
    Series back = series_from_json(series_to_json(badexko));
    REQUIRE(semantically_equal(back, badexko));
    REQUIRE(back.unary_qp() == badexko.unary_qp());

    Series len = Series::linear(testutil::length_rep());
    REQUIRE(semantically_equal(series_from_json(series_to_json(len)), len));

    Series zero = Series::zero(Alphabet("ab"));
    Series zback = series_from_json(series_to_json(zero));
    REQUIRE(zback.variant() == Series::Variant::Zero);
    REQUIRE(zback.alphabet() == zero.alphabet());

    Alphabet ab("ab");
    Series count = Series::counting(ab, {"x", "y"},
                                    parse_formula("and(atom(a,x),atom(b,y))", ab), Int(-2));
    Series cback = series_from_json(series_to_json(count));
    REQUIRE(cback.variant() == Series::Variant::Counting);
    REQUIRE(cback.coeff() == Int(-2));
    REQUIRE(cback.eval("aabb") == count.eval("aabb"));

    // unary-qp specs carry no alphabet; the fallback applies
    nlohmann::json spec;
    spec["kind"] = "unary-qp";
    spec["prefix"] = nlohmann::json::array({1});
    spec["period"] = 1;
    spec["polys"] = nlohmann::json::array({nlohmann::json::array({"-1", "1"})});
    REQUIRE(!series_to_json(badexko).contains("alphabet"));
    REQUIRE(series_from_json(spec).alphabet() == Alphabet("a"));
    REQUIRE(series_from_json(spec, Alphabet("b")).alphabet() == Alphabet("b"));

    // malformed specs are parse errors
    REQUIRE_THROWS_AS(series_from_json(nlohmann::json{{"kind", "unary-qp"}}), parse_error);
    REQUIRE_THROWS_AS(series_from_json(nlohmann::json{{"kind", "wavelet"}}), parse_error);
    nlohmann::json short_polys = spec;
    short_polys["period"] = 2;
    REQUIRE_THROWS_AS(series_from_json(short_polys), parse_error);
}

TEST_CASE("integers wider than 64 bits survive JSON") {
    Int big = Int(1) << 80;
    REQUIRE(int_to_json(big).is_string());
    REQUIRE(json_to_int(int_to_json(big)) == big);
    REQUIRE(json_to_int(int_to_json(-big)) == -big);
    REQUIRE(int_to_json(Int(42)).is_number());
    REQUIRE(json_to_int(nlohmann::json(-7)) == Int(-7));

    REQUIRE(json_to_rat(rat_to_json(Rat(1, 3))) == Rat(1, 3));
    REQUIRE(rat_to_json(Rat(5)).is_number());
    REQUIRE(json_to_rat(nlohmann::json("9/4")) == Rat(9, 4));
}
