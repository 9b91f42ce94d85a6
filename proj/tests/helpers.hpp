#pragma once

#include "respoly/series.hpp"
#include "respoly/transducer.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

namespace testutil {

using namespace respoly;

// Unary series over {a} from prefix values and rational coefficient strings.
inline Series qp_series(std::vector<Int> prefix, std::size_t period,
                        std::vector<std::vector<std::string>> polys) {
    std::vector<RationalPoly> tail;
    for (const auto& coeffs : polys) {
        std::vector<Rat> c;
        for (const auto& s : coeffs) c.push_back(parse_rational(s));
        tail.emplace_back(std::move(c));
    }
    return Series::unary(Alphabet("a"), UnaryQP(std::move(prefix), period, std::move(tail)));
}

inline std::string an(std::size_t n) { return std::string(n, 'a'); }

// Word-length series |w| over a one-letter alphabet as a linear representation.
inline LinRep length_rep() {
    return LinRep(Alphabet("a"), {Rat(1), Rat(0)},
                  {{{Rat(1), Rat(1)}, {Rat(0), Rat(1)}}}, {Rat(0), Rat(1)});
}

// State maps of the transition monoid (all non-empty word actions).
inline std::vector<std::vector<std::size_t>> transition_monoid(const HTransducer& t) {
    std::size_t nq = t.state_count();
    std::vector<std::vector<std::size_t>> gens;
    for (std::size_t a = 0; a < t.alphabet().size(); ++a) {
        std::vector<std::size_t> g(nq);
        for (std::size_t q = 0; q < nq; ++q) g[q] = t.delta(q, a);
        gens.push_back(g);
    }
    std::set<std::vector<std::size_t>> seen(gens.begin(), gens.end());
    std::vector<std::vector<std::size_t>> queue(gens.begin(), gens.end());
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto& g : gens) {
            std::vector<std::size_t> next(nq);
            for (std::size_t q = 0; q < nq; ++q) next[q] = g[queue[i][q]];
            if (seen.insert(next).second) queue.push_back(next);
        }
    return queue;
}

// Definitional counter search: some monoid element m and state q with
// m(q) != q but m^n(q) = q, n up to |Q|+1.
inline bool has_counter_brute(const HTransducer& t) {
    std::size_t nq = t.state_count();
    for (const auto& m : transition_monoid(t)) {
        std::vector<std::size_t> power = m;
        for (std::size_t n = 2; n <= nq + 1; ++n) {
            std::vector<std::size_t> next(nq);
            for (std::size_t q = 0; q < nq; ++q) next[q] = m[power[q]];
            power = std::move(next);
            for (std::size_t q = 0; q < nq; ++q)
                if (m[q] != q && power[q] == q) return true;
        }
    }
    return false;
}

// Machine with random transitions (restricted to the reachable part),
// zero labels and zero finals.
inline HTransducer random_machine(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> state_count(1, 5), letter_count(1, 2);
    std::size_t nq = state_count(rng);
    Alphabet alphabet(letter_count(rng) == 1 ? "a" : "ab");
    std::uniform_int_distribution<std::size_t> pick(0, nq - 1);
    std::vector<std::vector<std::size_t>> delta(nq, std::vector<std::size_t>(alphabet.size()));
    for (auto& row : delta)
        for (auto& target : row) target = pick(rng);

    std::vector<std::size_t> order{0}, remap(nq, nq);
    remap[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t target : delta[order[i]])
            if (remap[target] == nq) {
                remap[target] = order.size();
                order.push_back(target);
            }

    std::size_t reachable = order.size();
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> rdelta(reachable);
    std::vector<std::vector<Series>> rlambda(reachable);
    std::vector<Int> finals(reachable, Int(0));
    for (std::size_t i = 0; i < reachable; ++i) {
        names.push_back("q" + std::to_string(i));
        for (std::size_t target : delta[order[i]]) rdelta[i].push_back(remap[target]);
        rlambda[i].assign(alphabet.size(), Series::zero(alphabet));
    }
    return HTransducer(alphabet, std::move(names), 0, std::move(rdelta), std::move(rlambda),
                       std::move(finals));
}

} // namespace testutil
