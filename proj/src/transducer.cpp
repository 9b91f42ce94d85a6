#include "respoly/transducer.hpp"

#include "respoly/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace respoly {

namespace {

bool order_by_length_then_lex(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string display_name(const std::string& name) { return name.empty() ? "ε" : name; }

// kind + degree + leading values; full data lives in the JSON export.
std::string label_summary(const Series& s) {
    switch (s.variant()) {
    case Series::Variant::Zero:
        return "0";
    case Series::Variant::Unary: {
        UnaryQP g = s.unary_qp().normalized();
        if (g.is_zero()) return "0";
        std::ostringstream out;
        out << "qp deg " << g.degree() << ": ";
        for (int n = 0; n < 4; ++n) out << g.eval(n) << (n < 3 ? "," : ",..");
        return out.str();
    }
    case Series::Variant::Linear: {
        if (s.linrep().is_zero()) return "0";
        std::ostringstream out;
        out << "lin dim " << s.linrep().dim();
        return out.str();
    }
    case Series::Variant::Counting: {
        std::ostringstream out;
        out << "count " << s.coeff() << "*#" << formula_to_string(s.formula());
        return out.str();
    }
    }
    return "?";
}

} // namespace

HTransducer::HTransducer(Alphabet alphabet, std::vector<std::string> states, std::size_t initial,
                         std::vector<std::vector<std::size_t>> delta,
                         std::vector<std::vector<Series>> lambda, std::vector<Int> final_values)
    : alphabet_(std::move(alphabet)),
      states_(std::move(states)),
      initial_(initial),
      delta_(std::move(delta)),
      lambda_(std::move(lambda)),
      final_(std::move(final_values)) {
    std::size_t n = states_.size();
    if (n == 0) throw error("transducer: at least one state required");
    if (std::set<std::string>(states_.begin(), states_.end()).size() != n)
        throw error("transducer: duplicate state names");
    if (initial_ >= n) throw error("transducer: initial state out of range");
    if (delta_.size() != n || lambda_.size() != n || final_.size() != n)
        throw error("transducer: delta/lambda/final must cover every state");
    for (std::size_t q = 0; q < n; ++q) {
        if (delta_[q].size() != alphabet_.size() || lambda_[q].size() != alphabet_.size())
            throw error("transducer: delta/lambda must cover every letter");
        for (std::size_t a = 0; a < alphabet_.size(); ++a) {
            if (delta_[q][a] >= n) throw error("transducer: transition target out of range");
            if (lambda_[q][a].alphabet() != alphabet_)
                throw alphabet_mismatch("transducer: label alphabet differs from machine alphabet");
        }
    }
    // every state must be reachable from the initial one
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{initial_};
    seen[initial_] = true;
    while (!stack.empty()) {
        std::size_t q = stack.back();
        stack.pop_back();
        for (std::size_t a = 0; a < alphabet_.size(); ++a) {
            std::size_t r = delta_[q][a];
            if (!seen[r]) {
                seen[r] = true;
                stack.push_back(r);
            }
        }
    }
    for (std::size_t q = 0; q < n; ++q)
        if (!seen[q]) throw error("transducer: state '" + states_[q] + "' unreachable");
}

std::size_t HTransducer::state_index(std::string_view name) const {
    for (std::size_t q = 0; q < states_.size(); ++q)
        if (states_[q] == name) return q;
    throw error("transducer: unknown state '" + std::string(name) + "'");
}

bool HTransducer::has_state(std::string_view name) const {
    return std::find(states_.begin(), states_.end(), name) != states_.end();
}

std::size_t HTransducer::delta_star(std::size_t q, std::string_view symbols) const {
    for (char c : symbols) q = delta_[q][alphabet_.index_of(c)];
    return q;
}

Int HTransducer::eval_recursive(std::size_t q, std::string_view symbols) const {
    if (symbols.empty()) return final_[q];
    std::size_t a = alphabet_.index_of(symbols[0]);
    std::string_view rest = symbols.substr(1);
    return eval_recursive(delta_[q][a], rest) + lambda_[q][a].eval(rest);
}

Int HTransducer::eval_closed(std::string_view symbols) const {
    Int total = 0;
    std::size_t q = initial_;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        std::size_t a = alphabet_.index_of(symbols[i]);
        total += lambda_[q][a].eval(symbols.substr(i + 1));
        q = delta_[q][a];
    }
    return total + final_[q];
}

bool HTransducer::is_counter_free() const {
    using Fn = std::vector<std::size_t>;
    std::size_t n = states_.size();
    std::vector<Fn> gens;
    for (std::size_t a = 0; a < alphabet_.size(); ++a) {
        Fn f(n);
        for (std::size_t q = 0; q < n; ++q) f[q] = delta_[q][a];
        gens.push_back(std::move(f));
    }
    auto compose = [n](const Fn& first, const Fn& then) {
        Fn out(n);
        for (std::size_t q = 0; q < n; ++q) out[q] = then[first[q]];
        return out;
    };
    // closure of the letter functions under composition (non-empty words)
    std::set<Fn> monoid(gens.begin(), gens.end());
    std::vector<Fn> todo(monoid.begin(), monoid.end());
    while (!todo.empty()) {
        Fn f = std::move(todo.back());
        todo.pop_back();
        for (const Fn& g : gens) {
            Fn h = compose(f, g);
            if (monoid.insert(h).second) todo.push_back(std::move(h));
        }
    }
    // aperiodicity: the power sequence of every element stabilizes without
    // entering a cycle of length > 1
    for (const Fn& m : monoid) {
        std::vector<Fn> powers{m};
        while (true) {
            Fn next = compose(powers.back(), m);
            if (next == powers.back()) break; // stabilized: aperiodic element
            if (std::find(powers.begin(), powers.end(), next) != powers.end())
                return false; // proper cycle among powers: a counter exists
            powers.push_back(std::move(next));
        }
    }
    return true;
}

std::string HTransducer::to_dot() const {
    std::vector<std::size_t> order(states_.size());
    for (std::size_t q = 0; q < order.size(); ++q) order[q] = q;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return order_by_length_then_lex(states_[a], states_[b]);
    });
    std::vector<std::size_t> node_id(states_.size());
    for (std::size_t i = 0; i < order.size(); ++i) node_id[order[i]] = i;

    std::ostringstream out;
    out << "digraph transducer {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  __init [shape=point, label=\"\"];\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t q = order[i];
        out << "  n" << i << " [label=\"" << dot_escape(display_name(states_[q])) << "\\nF="
            << final_[q] << "\"];\n";
    }
    out << "  __init -> n" << node_id[initial_] << ";\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t q = order[i];
        for (std::size_t a = 0; a < alphabet_.size(); ++a) {
            out << "  n" << i << " -> n" << node_id[delta_[q][a]] << " [label=\""
                << alphabet_.letter(a) << " / " << dot_escape(label_summary(lambda_[q][a]))
                << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

bool same_structure(const HTransducer& a, const HTransducer& b) {
    if (a.alphabet() != b.alphabet()) return false;
    if (a.state_count() != b.state_count()) return false;
    for (const auto& name : a.state_names())
        if (!b.has_state(name)) return false;
    if (a.state_name(a.initial()) != b.state_name(b.initial())) return false;
    for (std::size_t q = 0; q < a.state_count(); ++q) {
        std::size_t r = b.state_index(a.state_name(q));
        if (a.final_at(q) != b.final_at(r)) return false;
        for (std::size_t l = 0; l < a.alphabet().size(); ++l) {
            if (a.state_name(a.delta(q, l)) != b.state_name(b.delta(r, l))) return false;
            if (!semantically_equal(a.lambda(q, l), b.lambda(r, l))) return false;
        }
    }
    return true;
}

LinRep transducer_to_linrep(const HTransducer& t) {
    const Alphabet& alphabet = t.alphabet();
    std::size_t n = t.state_count();
    std::size_t letters = alphabet.size();

    // one linear representation per transition label; Zero labels get none
    std::vector<std::vector<LinRep>> label_reps(n);
    std::vector<std::vector<std::size_t>> offset(n, std::vector<std::size_t>(letters, 0));
    std::size_t dim = n;
    for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t a = 0; a < letters; ++a) {
            const Series& s = t.lambda(q, a);
            offset[q][a] = dim;
            if (s.variant() == Series::Variant::Zero) continue;
            Series lin = s.as_linear();
            label_reps[q].push_back(lin.linrep());
            dim += lin.linrep().dim();
        }
    }
    // re-walk to map (q,a) -> index into label_reps[q]
    std::vector<std::vector<int>> rep_index(n, std::vector<int>(letters, -1));
    for (std::size_t q = 0; q < n; ++q) {
        int next = 0;
        for (std::size_t a = 0; a < letters; ++a)
            if (t.lambda(q, a).variant() != Series::Variant::Zero) rep_index[q][a] = next++;
    }

    RatVector init(dim, Rat(0));
    init[t.initial()] = 1;
    RatVector fin(dim, Rat(0));
    for (std::size_t q = 0; q < n; ++q) fin[q] = Rat(t.final_at(q));
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t a = 0; a < letters; ++a)
            if (rep_index[q][a] >= 0) {
                const LinRep& rep = label_reps[q][rep_index[q][a]];
                for (std::size_t i = 0; i < rep.dim(); ++i)
                    fin[offset[q][a] + i] = rep.final_vector()[i];
            }

    std::vector<RatMatrix> trans(letters, RatMatrix(dim, RatVector(dim, Rat(0))));
    for (std::size_t b = 0; b < letters; ++b) {
        RatMatrix& m = trans[b];
        for (std::size_t q = 0; q < n; ++q) {
            // machine part: move along delta and spawn the label of the
            // transition just taken
            m[q][t.delta(q, b)] += 1;
            if (rep_index[q][b] >= 0) {
                const LinRep& rep = label_reps[q][rep_index[q][b]];
                for (std::size_t i = 0; i < rep.dim(); ++i)
                    m[q][offset[q][b] + i] += rep.init()[i];
            }
            // label blocks evolve under their own transition matrices
            for (std::size_t a = 0; a < letters; ++a)
                if (rep_index[q][a] >= 0) {
                    const LinRep& rep = label_reps[q][rep_index[q][a]];
                    const RatMatrix& inner = rep.transition(b);
                    for (std::size_t i = 0; i < rep.dim(); ++i)
                        for (std::size_t j = 0; j < rep.dim(); ++j)
                            m[offset[q][a] + i][offset[q][a] + j] = inner[i][j];
                }
        }
    }
    return LinRep(alphabet, std::move(init), std::move(trans), std::move(fin));
}

} // namespace respoly
