#include "respoly/json_io.hpp"

#include "respoly/errors.hpp"

#include <algorithm>
#include <limits>

namespace respoly {

using nlohmann::json;

namespace {

constexpr std::int64_t kMaxSafe = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kMinSafe = std::numeric_limits<std::int64_t>::min();

bool fits_int64(const Int& v) { return v >= kMinSafe && v <= kMaxSafe; }

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw parse_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t to_size(const json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw parse_error(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

} // namespace

json int_to_json(const Int& v) {
    if (fits_int64(v)) return v.convert_to<std::int64_t>();
    return v.str();
}

Int json_to_int(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) {
        Rat r = parse_rational(j.get<std::string>());
        return to_integer(r);
    }
    throw parse_error("expected an integer (number or decimal string)");
}

json rat_to_json(const Rat& r) {
    if (is_integer(r) && fits_int64(numerator(r))) return numerator(r).convert_to<std::int64_t>();
    return format_rational(r);
}

Rat json_to_rat(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Rat(Int(j.get<std::uint64_t>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw parse_error("expected a rational (number or \"p/q\" string)");
}

json alphabet_to_json(const Alphabet& alphabet) {
    json out = json::array();
    for (char c : alphabet.letters()) out.push_back(std::string(1, c));
    return out;
}

Alphabet alphabet_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw parse_error("alphabet must be a non-empty array");
    std::string letters;
    for (const auto& e : j) {
        if (!e.is_string() || e.get<std::string>().size() != 1)
            throw parse_error("alphabet entries must be single-character strings");
        letters += e.get<std::string>();
    }
    return Alphabet(letters);
}

json series_to_json(const Series& s) {
    json out;
    switch (s.variant()) {
    case Series::Variant::Zero:
        out["kind"] = "zero";
        out["alphabet"] = alphabet_to_json(s.alphabet());
        return out;
    case Series::Variant::Unary: {
        const UnaryQP& g = s.unary_qp();
        out["kind"] = "unary-qp";
        json prefix = json::array();
        for (const Int& v : g.prefix()) prefix.push_back(int_to_json(v));
        out["prefix"] = std::move(prefix);
        out["period"] = g.period();
        json polys = json::array();
        for (const RationalPoly& p : g.tail()) {
            json coeffs = json::array();
            for (const Rat& c : p.coefficients()) coeffs.push_back(format_rational(c));
            polys.push_back(std::move(coeffs));
        }
        out["polys"] = std::move(polys);
        return out;
    }
    case Series::Variant::Linear: {
        const LinRep& rep = s.linrep();
        out["kind"] = "linrep";
        out["alphabet"] = alphabet_to_json(rep.alphabet());
        out["dim"] = rep.dim();
        json init = json::array(), fin = json::array();
        for (const Rat& v : rep.init()) init.push_back(rat_to_json(v));
        for (const Rat& v : rep.final_vector()) fin.push_back(rat_to_json(v));
        out["init"] = std::move(init);
        out["final"] = std::move(fin);
        json trans = json::object();
        for (std::size_t a = 0; a < rep.alphabet().size(); ++a) {
            json matrix = json::array();
            for (const RatVector& row : rep.transition(a)) {
                json jrow = json::array();
                for (const Rat& v : row) jrow.push_back(rat_to_json(v));
                matrix.push_back(std::move(jrow));
            }
            trans[std::string(1, rep.alphabet().letter(a))] = std::move(matrix);
        }
        out["trans"] = std::move(trans);
        return out;
    }
    case Series::Variant::Counting: {
        if (!s.counting_prefix().empty())
            throw unsupported_variant("residuals of counting series have no serial form");
        out["kind"] = "counting";
        out["alphabet"] = alphabet_to_json(s.alphabet());
        out["vars"] = s.vars();
        out["formula"] = formula_to_string(s.formula());
        out["coeff"] = int_to_json(s.coeff());
        return out;
    }
    }
    throw unsupported_variant("unknown series variant");
}

Series series_from_json(const json& j, const std::optional<Alphabet>& fallback) {
    std::string kind = require(j, "kind").get<std::string>();
    if (kind == "zero") {
        Alphabet alphabet =
            j.contains("alphabet") ? alphabet_from_json(j.at("alphabet"))
                                   : fallback.value_or(Alphabet("a"));
        return Series::zero(std::move(alphabet));
    }
    if (kind == "unary-qp") {
        Alphabet alphabet = fallback.value_or(Alphabet("a"));
        std::vector<Int> prefix;
        for (const auto& e : require(j, "prefix")) prefix.push_back(json_to_int(e));
        std::size_t period = to_size(require(j, "period"), "period");
        if (period < 1) throw parse_error("period must be at least 1");
        const json& polys = require(j, "polys");
        if (!polys.is_array() || polys.size() != period)
            throw parse_error("polys must list one coefficient array per residue class");
        std::vector<RationalPoly> tail;
        for (const auto& coeffs : polys) {
            std::vector<Rat> c;
            for (const auto& e : coeffs) c.push_back(json_to_rat(e));
            tail.emplace_back(std::move(c));
        }
        return Series::unary(std::move(alphabet), UnaryQP(std::move(prefix), period, std::move(tail)));
    }
    if (kind == "linrep") {
        Alphabet alphabet = alphabet_from_json(require(j, "alphabet"));
        std::size_t dim = to_size(require(j, "dim"), "dim");
        if (dim < 1) throw parse_error("dim must be at least 1");
        auto read_vector = [&](const json& arr, const char* what) {
            if (!arr.is_array() || arr.size() != dim)
                throw parse_error(std::string(what) + " must have length dim");
            RatVector v;
            for (const auto& e : arr) v.push_back(json_to_rat(e));
            return v;
        };
        RatVector init = read_vector(require(j, "init"), "init");
        RatVector fin = read_vector(require(j, "final"), "final");
        const json& trans = require(j, "trans");
        std::vector<RatMatrix> matrices;
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            std::string key(1, alphabet.letter(a));
            if (!trans.contains(key))
                throw parse_error("trans is missing letter '" + key + "'");
            const json& m = trans.at(key);
            if (!m.is_array() || m.size() != dim)
                throw parse_error("trans matrices must be dim x dim");
            RatMatrix matrix;
            for (const auto& row : m) matrix.push_back(read_vector(row, "trans row"));
            matrices.push_back(std::move(matrix));
        }
        return Series::linear(LinRep(std::move(alphabet), std::move(init), std::move(matrices),
                                     std::move(fin)));
    }
    if (kind == "counting") {
        Alphabet alphabet = alphabet_from_json(require(j, "alphabet"));
        std::vector<std::string> vars;
        for (const auto& e : require(j, "vars")) vars.push_back(e.get<std::string>());
        FormulaPtr formula = parse_formula(require(j, "formula").get<std::string>(), alphabet);
        Int coeff = j.contains("coeff") ? json_to_int(j.at("coeff")) : Int(1);
        return Series::counting(std::move(alphabet), std::move(vars), std::move(formula),
                                std::move(coeff));
    }
    throw parse_error("unknown series kind '" + kind + "'");
}

json transducer_to_json(const HTransducer& t) {
    std::vector<std::string> order = t.state_names();
    std::sort(order.begin(), order.end(), [](const std::string& a, const std::string& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    json out;
    out["alphabet"] = alphabet_to_json(t.alphabet());
    out["states"] = order;
    out["initial"] = t.state_name(t.initial());
    json delta = json::object(), lambda = json::object(), fin = json::object();
    for (const auto& name : order) {
        std::size_t q = t.state_index(name);
        json drow = json::object(), lrow = json::object();
        for (std::size_t a = 0; a < t.alphabet().size(); ++a) {
            std::string key(1, t.alphabet().letter(a));
            drow[key] = t.state_name(t.delta(q, a));
            lrow[key] = series_to_json(t.lambda(q, a));
        }
        delta[name] = std::move(drow);
        lambda[name] = std::move(lrow);
        fin[name] = int_to_json(t.final_at(q));
    }
    out["delta"] = std::move(delta);
    out["lambda"] = std::move(lambda);
    out["final"] = std::move(fin);
    return out;
}

HTransducer transducer_from_json(const json& j) {
    Alphabet alphabet = alphabet_from_json(require(j, "alphabet"));
    std::vector<std::string> states;
    for (const auto& e : require(j, "states")) states.push_back(e.get<std::string>());
    if (states.empty()) throw parse_error("transducer needs at least one state");
    std::string initial = require(j, "initial").get<std::string>();
    auto index_of = [&](const std::string& name) -> std::size_t {
        auto it = std::find(states.begin(), states.end(), name);
        if (it == states.end()) throw parse_error("unknown state '" + name + "'");
        return static_cast<std::size_t>(it - states.begin());
    };
    const json& delta = require(j, "delta");
    const json& lambda = require(j, "lambda");
    const json& fin = require(j, "final");
    std::vector<std::vector<std::size_t>> dvec;
    std::vector<std::vector<Series>> lvec;
    std::vector<Int> fvec;
    for (const auto& name : states) {
        if (!delta.contains(name) || !lambda.contains(name) || !fin.contains(name))
            throw parse_error("delta/lambda/final must cover state '" + name + "'");
        std::vector<std::size_t> drow;
        std::vector<Series> lrow;
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            std::string key(1, alphabet.letter(a));
            if (!delta.at(name).contains(key) || !lambda.at(name).contains(key))
                throw parse_error("state '" + name + "' is missing letter '" + key + "'");
            drow.push_back(index_of(delta.at(name).at(key).get<std::string>()));
            lrow.push_back(series_from_json(lambda.at(name).at(key), alphabet));
        }
        dvec.push_back(std::move(drow));
        lvec.push_back(std::move(lrow));
        fvec.push_back(json_to_int(fin.at(name)));
    }
    return HTransducer(std::move(alphabet), std::move(states), index_of(initial), std::move(dvec),
                       std::move(lvec), std::move(fvec));
}

json trace_to_json(const BuildTrace& trace) {
    json steps = json::array();
    for (const TraceStep& s : trace.steps) {
        json step;
        step["chosen"] = s.chosen;
        step["branch"] = s.branch;
        step["Q"] = s.q_states;
        step["O"] = s.o_words;
        steps.push_back(std::move(step));
    }
    return json{{"steps", std::move(steps)}};
}

json wqo_report_to_json(const WqoReport& rep) {
    json out;
    out["mode"] = std::string(probe_mode_name(rep.mode));
    out["max_len"] = rep.max_len;
    out["verdict"] = rep.verdict;
    out["witness"] = rep.witness;
    out["antichain_sizes"] = rep.antichain_sizes;
    return out;
}

json aperiodicity_report_to_json(const AperiodicityReport& rep) {
    json out;
    out["mode"] = "aperiodicity";
    out["u"] = rep.u;
    out["w"] = rep.w;
    out["n_max"] = rep.n_max;
    out["verdict"] = rep.found ? "nondecreasing-from-threshold" : "no-threshold-up-to-bound";
    out["n0"] = rep.found ? json(rep.n0) : json(nullptr);
    return out;
}

} // namespace respoly
