#include "respoly/builder.hpp"

#include "respoly/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace respoly {

BuildConfig::Policy parse_policy(std::string_view name) {
    if (name == "shortlex") return BuildConfig::Policy::Shortlex;
    if (name == "fifo") return BuildConfig::Policy::Fifo;
    if (name == "lifo") return BuildConfig::Policy::Lifo;
    throw parse_error("unknown policy '" + std::string(name) +
                      "' (expected shortlex, fifo or lifo)");
}

std::string_view policy_name(BuildConfig::Policy policy) {
    switch (policy) {
    case BuildConfig::Policy::Shortlex:
        return "shortlex";
    case BuildConfig::Policy::Fifo:
        return "fifo";
    case BuildConfig::Policy::Lifo:
        return "lifo";
    }
    return "?";
}

namespace {

std::vector<std::string> sorted_shortlex(const Alphabet& alphabet,
                                         const std::vector<std::string>& words) {
    std::vector<std::string> out = words;
    std::sort(out.begin(), out.end(),
              [&](const std::string& a, const std::string& b) { return shortlex_less(alphabet, a, b); });
    return out;
}

} // namespace

BuildOutcome build_residual_transducer(const Series& f, const BuildConfig& cfg) {
    if (cfg.fuel < 1 || cfg.max_states < 1)
        throw parse_error("fuel and max-states must be at least 1");
    OrderCtx ctx(f, cfg.k, Flavor::Npoly);
    const Alphabet& alphabet = f.alphabet();

    BuildOutcome out;
    BuildTrace& trace = out.trace;

    std::vector<std::string> q_order{""};
    std::set<std::string> q_set{""};
    std::deque<std::string> worklist;
    for (std::size_t a = 0; a < alphabet.size(); ++a)
        worklist.emplace_back(1, alphabet.letter(a));

    std::map<std::pair<std::string, char>, std::string> delta;
    std::map<std::pair<std::string, char>, Series> lambda;

    auto record = [&](const std::string& chosen, const char* branch) {
        TraceStep step;
        step.chosen = chosen;
        step.branch = branch;
        step.q_states = sorted_shortlex(alphabet, q_order);
        step.o_words = sorted_shortlex(alphabet, {worklist.begin(), worklist.end()});
        trace.steps.push_back(std::move(step));
    };

    while (!worklist.empty()) {
        std::size_t pick = 0;
        switch (cfg.policy) {
        case BuildConfig::Policy::Shortlex:
            for (std::size_t i = 1; i < worklist.size(); ++i)
                if (shortlex_less(alphabet, worklist[i], worklist[pick])) pick = i;
            break;
        case BuildConfig::Policy::Fifo:
            pick = 0;
            break;
        case BuildConfig::Policy::Lifo:
            pick = worklist.size() - 1;
            break;
        }
        std::string ua = worklist[pick];
        worklist.erase(worklist.begin() + static_cast<std::ptrdiff_t>(pick));

        std::string u = ua.substr(0, ua.size() - 1);
        char a = ua.back();

        // longest prefix-state below ua (all proper prefixes are states)
        std::optional<std::string> target;
        for (std::size_t len = ua.size(); len-- > 0;) {
            if (trace.oracle_calls >= cfg.fuel) {
                out.failure = "fuel-exhausted";
                return out;
            }
            ++trace.oracle_calls;
            std::string v = ua.substr(0, len);
            if (ctx.res_below(v, ua)) {
                target = std::move(v);
                break;
            }
        }

        if (target) {
            delta[{u, a}] = *target;
            lambda.emplace(std::make_pair(u, a), derivative(f, ua, *target));
            record(ua, "if");
        } else {
            if (q_order.size() >= cfg.max_states) {
                out.failure = "state-budget-exhausted";
                return out;
            }
            q_order.push_back(ua);
            q_set.insert(ua);
            delta[{u, a}] = ua;
            lambda.emplace(std::make_pair(u, a), Series::zero(alphabet));
            for (std::size_t b = 0; b < alphabet.size(); ++b)
                worklist.push_back(ua + alphabet.letter(b));
            record(ua, "else");
        }
    }

    std::vector<std::string> states = sorted_shortlex(alphabet, q_order);
    std::size_t n = states.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[states[i]] = i;

    std::vector<std::vector<std::size_t>> dvec(n, std::vector<std::size_t>(alphabet.size()));
    std::vector<std::vector<Series>> lvec;
    std::vector<Int> fvec;
    lvec.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Series> row;
        for (std::size_t b = 0; b < alphabet.size(); ++b) {
            auto key = std::make_pair(states[i], alphabet.letter(b));
            dvec[i][b] = index.at(delta.at(key));
            row.push_back(lambda.at(key));
        }
        lvec.push_back(std::move(row));
        fvec.push_back(f.eval(states[i]));
    }
    out.transducer.emplace(alphabet, states, index.at(""), std::move(dvec), std::move(lvec),
                           std::move(fvec));
    return out;
}

std::vector<Violation> validate_residual_transducer(const Series& f, unsigned k,
                                                    const HTransducer& t) {
    if (f.alphabet() != t.alphabet())
        throw alphabet_mismatch("function and transducer alphabets differ");
    OrderCtx ctx(f, k, Flavor::Npoly);
    const Alphabet& alphabet = t.alphabet();
    std::vector<Violation> out;

    auto display = [](const std::string& w) { return w.empty() ? std::string("ε") : w; };

    // (2) states are words over the alphabet, closed under prefixes
    bool words_ok = true;
    for (const auto& name : t.state_names())
        for (char c : name)
            if (!alphabet.contains(c)) {
                out.push_back({2, "state '" + name + "' is not a word over the alphabet"});
                words_ok = false;
                break;
            }
    if (!words_ok) return out;
    for (const auto& name : t.state_names())
        for (std::size_t len = 0; len < name.size(); ++len)
            if (!t.has_state(name.substr(0, len)))
                out.push_back({2, "prefix '" + display(name.substr(0, len)) + "' of state '" +
                                      name + "' is not a state"});

    // (3) initial state is the empty word
    if (!t.state_name(t.initial()).empty())
        out.push_back({3, "initial state is '" + t.state_name(t.initial()) +
                              "', not the empty word"});

    // (4) reachability (also enforced at construction)
    {
        std::vector<bool> seen(t.state_count(), false);
        std::vector<std::size_t> stack{t.initial()};
        seen[t.initial()] = true;
        while (!stack.empty()) {
            std::size_t q = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < alphabet.size(); ++b)
                if (!seen[t.delta(q, b)]) {
                    seen[t.delta(q, b)] = true;
                    stack.push_back(t.delta(q, b));
                }
        }
        for (std::size_t q = 0; q < t.state_count(); ++q)
            if (!seen[q]) out.push_back({4, "state '" + t.state_name(q) + "' is unreachable"});
    }

    // (5) each transition targets the longest prefix-state below ua,
    // (6) labels are the corresponding derivatives, finals the f-values
    for (std::size_t q = 0; q < t.state_count(); ++q) {
        const std::string& u = t.state_name(q);
        for (std::size_t b = 0; b < alphabet.size(); ++b) {
            std::string ua = u + alphabet.letter(b);
            const std::string& actual = t.state_name(t.delta(q, b));
            std::optional<std::string> expected;
            for (std::size_t len = ua.size() + 1; len-- > 0;) {
                std::string v = ua.substr(0, len);
                if (t.has_state(v) && ctx.res_below(v, ua)) {
                    expected = std::move(v);
                    break;
                }
            }
            if (!expected) {
                out.push_back({5, "no prefix-state lies below '" + display(ua) + "'"});
            } else if (*expected != actual) {
                out.push_back({5, "delta(" + display(u) + "," + alphabet.letter(b) + ") = '" +
                                      display(actual) + "' but prefix-state '" +
                                      display(*expected) + "' is the longest one below '" +
                                      display(ua) + "'"});
            }
            Series prescribed = derivative(f, ua, actual);
            if (!semantically_equal(t.lambda(q, b), prescribed))
                out.push_back({6, "label at (" + display(u) + "," + alphabet.letter(b) +
                                      ") differs from the derivative of f between '" +
                                      display(ua) + "' and '" + display(actual) + "'"});
        }
        if (t.final_at(q) != f.eval(u))
            out.push_back({6, "final value at '" + display(u) + "' differs from f"});
    }

    // (1) the machine computes f: exact equivalence when the labels admit
    // linear representations, plus direct evaluation agreement
    bool exact_done = false;
    try {
        LinRep machine = transducer_to_linrep(t);
        if (!semantically_equal(Series::linear(machine), f))
            out.push_back({1, "the transducer and f differ as series"});
        exact_done = true;
    } catch (const unsupported_variant&) {
    }
    std::size_t max_len = alphabet.size() == 1 ? 200 : 12;
    for (const auto& w : words_up_to(alphabet, max_len)) {
        if (t.eval_closed(w) != f.eval(w)) {
            if (!exact_done) out.push_back({1, "values differ on '" + display(w) + "'"});
            break;
        }
    }

    std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        if (a.condition != b.condition) return a.condition < b.condition;
        return a.detail < b.detail;
    });
    return out;
}

std::optional<MinimalityWitness> minimality_witness(const Series& f) {
    if (f.alphabet().size() != 1)
        throw unsupported_variant("the single-state argument is computed for unary series only");
    if (f.variant() == Series::Variant::Zero) return std::nullopt;
    if (f.variant() != Series::Variant::Unary)
        throw unsupported_variant("the single-state argument needs a unary representation");
    char a = f.alphabet().letter(0);
    Series d = derivative(f, std::string(1, a), "");
    auto neg = d.unary_qp().find_negative();
    if (!neg) return std::nullopt;
    return MinimalityWitness{std::string(neg->first, a), neg->second};
}

} // namespace respoly
