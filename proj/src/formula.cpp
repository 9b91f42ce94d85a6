#include "respoly/formula.hpp"

#include "respoly/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace respoly {

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    const Alphabet& alphabet;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw parse_error("formula: expected '" + std::string(1, c) + "' at offset " +
                              std::to_string(pos));
        ++pos;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos) throw parse_error("formula: expected identifier at offset " + std::to_string(pos));
        return std::string(text.substr(start, pos - start));
    }

    unsigned long number() {
        std::string tok = ident();
        if (!std::all_of(tok.begin(), tok.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw parse_error("formula: expected a number, got '" + tok + "'");
        return std::stoul(tok);
    }

    FormulaPtr formula() {
        std::string head = ident();
        auto node = std::make_shared<FOFormula>();
        if (head == "true" || head == "false") {
            node->kind = head == "true" ? FOFormula::Kind::True : FOFormula::Kind::False;
            return node;
        }
        expect('(');
        if (head == "atom") {
            node->kind = FOFormula::Kind::LetterAtom;
            std::string letter = ident();
            if (letter.size() != 1 || !alphabet.contains(letter[0]))
                throw parse_error("formula: unknown letter '" + letter + "'");
            node->letter = letter[0];
            expect(',');
            node->var = ident();
        } else if (head == "lt" || head == "eq") {
            node->kind = head == "lt" ? FOFormula::Kind::Less : FOFormula::Kind::Equal;
            node->var = ident();
            expect(',');
            node->var2 = ident();
        } else if (head == "mod") {
            node->kind = FOFormula::Kind::ModAtom;
            node->var = ident();
            expect(',');
            node->residue = number();
            expect(',');
            node->modulus = number();
            if (node->modulus == 0) throw parse_error("formula: modulus must be >= 1");
            if (node->residue >= node->modulus)
                throw parse_error("formula: residue must be below the modulus");
        } else if (head == "and" || head == "or") {
            node->kind = head == "and" ? FOFormula::Kind::And : FOFormula::Kind::Or;
            node->children.push_back(formula());
            while (peek() == ',') {
                expect(',');
                node->children.push_back(formula());
            }
            if (node->children.size() < 2)
                throw parse_error("formula: '" + head + "' needs at least two operands");
        } else if (head == "not") {
            node->kind = FOFormula::Kind::Not;
            node->children.push_back(formula());
        } else if (head == "implies") {
            node->kind = FOFormula::Kind::Implies;
            node->children.push_back(formula());
            expect(',');
            node->children.push_back(formula());
        } else if (head == "exists" || head == "forall") {
            node->kind = head == "exists" ? FOFormula::Kind::Exists : FOFormula::Kind::Forall;
            node->var = ident();
            expect(',');
            node->children.push_back(formula());
        } else {
            throw parse_error("formula: unknown connective '" + head + "'");
        }
        expect(')');
        return node;
    }
};

void collect_free(const FormulaPtr& f, std::set<std::string>& bound,
                  std::vector<std::string>& out, std::set<std::string>& seen) {
    auto use = [&](const std::string& v) {
        if (bound.count(v) || seen.count(v)) return;
        seen.insert(v);
        out.push_back(v);
    };
    switch (f->kind) {
    case FOFormula::Kind::True:
    case FOFormula::Kind::False:
        break;
    case FOFormula::Kind::LetterAtom:
    case FOFormula::Kind::ModAtom:
        use(f->var);
        break;
    case FOFormula::Kind::Less:
    case FOFormula::Kind::Equal:
        use(f->var);
        use(f->var2);
        break;
    case FOFormula::Kind::Exists:
    case FOFormula::Kind::Forall: {
        if (bound.count(f->var))
            throw parse_error("formula: quantifier rebinds variable '" + f->var + "'");
        bound.insert(f->var);
        collect_free(f->children[0], bound, out, seen);
        bound.erase(f->var);
        break;
    }
    default:
        for (const auto& c : f->children) collect_free(c, bound, out, seen);
    }
}

bool holds(const FOFormula& f, std::string_view w, std::map<std::string, std::size_t>& env) {
    switch (f.kind) {
    case FOFormula::Kind::True:
        return true;
    case FOFormula::Kind::False:
        return false;
    case FOFormula::Kind::LetterAtom:
        return w[env.at(f.var)] == f.letter;
    case FOFormula::Kind::Less:
        return env.at(f.var) < env.at(f.var2);
    case FOFormula::Kind::Equal:
        return env.at(f.var) == env.at(f.var2);
    case FOFormula::Kind::ModAtom:
        return env.at(f.var) % f.modulus == f.residue;
    case FOFormula::Kind::And:
        for (const auto& c : f.children)
            if (!holds(*c, w, env)) return false;
        return true;
    case FOFormula::Kind::Or:
        for (const auto& c : f.children)
            if (holds(*c, w, env)) return true;
        return false;
    case FOFormula::Kind::Not:
        return !holds(*f.children[0], w, env);
    case FOFormula::Kind::Implies:
        return !holds(*f.children[0], w, env) || holds(*f.children[1], w, env);
    case FOFormula::Kind::Exists:
    case FOFormula::Kind::Forall: {
        bool want = f.kind == FOFormula::Kind::Exists;
        for (std::size_t p = 0; p < w.size(); ++p) {
            env[f.var] = p;
            bool v = holds(*f.children[0], w, env);
            if (v == want) {
                env.erase(f.var);
                return want;
            }
        }
        env.erase(f.var);
        return !want;
    }
    }
    return false;
}

} // namespace

FormulaPtr parse_formula(std::string_view text, const Alphabet& alphabet) {
    Parser p{text, 0, alphabet};
    FormulaPtr f = p.formula();
    p.skip_ws();
    if (p.pos != text.size())
        throw parse_error("formula: trailing input at offset " + std::to_string(p.pos));
    free_variables(f); // rejects quantifiers that rebind a name in scope
    return f;
}

std::vector<std::string> free_variables(const FormulaPtr& f) {
    std::set<std::string> bound, seen;
    std::vector<std::string> out;
    collect_free(f, bound, out, seen);
    return out;
}

Int count_valuations(const FormulaPtr& f, const std::vector<std::string>& vars,
                     std::string_view w) {
    std::size_t k = vars.size();
    std::size_t n = w.size();
    if (k == 0) {
        std::map<std::string, std::size_t> env;
        return holds(*f, w, env) ? 1 : 0;
    }
    if (n == 0) return 0;
    Int count{0};
    std::vector<std::size_t> tuple(k, 0);
    std::map<std::string, std::size_t> env;
    while (true) {
        for (std::size_t i = 0; i < k; ++i) env[vars[i]] = tuple[i];
        if (holds(*f, w, env)) ++count;
        std::size_t i = 0;
        while (i < k && ++tuple[i] == n) tuple[i++] = 0;
        if (i == k) break;
    }
    return count;
}

std::string formula_to_string(const FormulaPtr& f) {
    switch (f->kind) {
    case FOFormula::Kind::True:
        return "true";
    case FOFormula::Kind::False:
        return "false";
    case FOFormula::Kind::LetterAtom:
        return std::string("atom(") + f->letter + "," + f->var + ")";
    case FOFormula::Kind::Less:
        return "lt(" + f->var + "," + f->var2 + ")";
    case FOFormula::Kind::Equal:
        return "eq(" + f->var + "," + f->var2 + ")";
    case FOFormula::Kind::ModAtom:
        return "mod(" + f->var + "," + std::to_string(f->residue) + "," +
               std::to_string(f->modulus) + ")";
    case FOFormula::Kind::And:
    case FOFormula::Kind::Or: {
        std::string out = f->kind == FOFormula::Kind::And ? "and(" : "or(";
        for (std::size_t i = 0; i < f->children.size(); ++i) {
            if (i) out += ",";
            out += formula_to_string(f->children[i]);
        }
        return out + ")";
    }
    case FOFormula::Kind::Not:
        return "not(" + formula_to_string(f->children[0]) + ")";
    case FOFormula::Kind::Implies:
        return "implies(" + formula_to_string(f->children[0]) + "," +
               formula_to_string(f->children[1]) + ")";
    case FOFormula::Kind::Exists:
    case FOFormula::Kind::Forall:
        return std::string(f->kind == FOFormula::Kind::Exists ? "exists(" : "forall(") + f->var +
               "," + formula_to_string(f->children[0]) + ")";
    }
    return "";
}

} // namespace respoly
