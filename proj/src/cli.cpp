#include "respoly/cli.hpp"

#include "respoly/builder.hpp"
#include "respoly/errors.hpp"
#include "respoly/gallery.hpp"
#include "respoly/json_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace respoly {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw parse_error("malformed JSON in '" + path + "': " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write '" + path + "'");
    out << content;
}

struct Options {
    std::string input;
    std::string word, u, v;
    std::string klass = "npoly";
    std::string mode = "prefix-chain";
    std::string policy = "shortlex";
    std::string dot, trace;
    std::string target;      // positional: transducer file / gallery name
    std::string golden_key;  // positional: gallery golden name
    int k = 1;
    std::uint64_t fuel = 10000;
    std::size_t max_states = 1024;
    std::size_t max_len = 0;
    std::size_t n_max = 0;
    bool pretty = false;
};

void emit(std::ostream& out, const json& j, bool pretty) {
    out << (pretty ? j.dump(2) : j.dump()) << "\n";
}

int cmd_eval(const Options& o, std::ostream& out) {
    Series f = series_from_json(read_json_file(o.input));
    emit(out, int_to_json(f.eval(o.word)), o.pretty);
    return 0;
}

int cmd_derive(const Options& o, std::ostream& out) {
    Series f = series_from_json(read_json_file(o.input));
    emit(out, series_to_json(derivative(f, o.u, o.v)), o.pretty);
    return 0;
}

int cmd_build(const Options& o, std::ostream& out) {
    Series f = series_from_json(read_json_file(o.input));
    if (o.k < 0) throw parse_error("--k must be non-negative");
    BuildConfig cfg;
    cfg.k = static_cast<unsigned>(o.k);
    cfg.fuel = o.fuel;
    cfg.max_states = o.max_states;
    cfg.policy = parse_policy(o.policy);
    BuildOutcome outcome = build_residual_transducer(f, cfg);
    if (!o.trace.empty()) write_text_file(o.trace, trace_to_json(outcome.trace).dump(2) + "\n");
    if (!outcome.ok()) {
        emit(out, json{{"failure", outcome.failure}}, o.pretty);
        return 1;
    }
    if (!o.dot.empty()) write_text_file(o.dot, outcome.transducer->to_dot());
    emit(out, transducer_to_json(*outcome.transducer), o.pretty);
    return 0;
}

int cmd_validate(const Options& o, std::ostream& out) {
    Series f = series_from_json(read_json_file(o.input));
    if (o.k < 0) throw parse_error("--k must be non-negative");
    HTransducer t = transducer_from_json(read_json_file(o.target));
    std::vector<Violation> violations =
        validate_residual_transducer(f, static_cast<unsigned>(o.k), t);
    json list = json::array();
    for (const Violation& v : violations)
        list.push_back(json{{"condition", v.condition}, {"detail", v.detail}});
    emit(out, json{{"valid", violations.empty()}, {"violations", std::move(list)}}, o.pretty);
    return violations.empty() ? 0 : 1;
}

int cmd_check(const Options& o, std::ostream& out) {
    Series f = series_from_json(read_json_file(o.input));
    Flavor flavor = parse_flavor(o.klass);
    bool member = false;
    switch (flavor) {
    case Flavor::Npoly:
        member = member_npoly(f, o.k);
        break;
    case Flavor::Nsf:
        member = member_nsf(f, o.k);
        break;
    case Flavor::Zpoly:
        member = member_zpoly(f, o.k);
        break;
    }
    emit(out, json{{"class", o.klass}, {"level", o.k}, {"member", member}}, o.pretty);
    return member ? 0 : 1;
}

int cmd_counter_free(const Options& o, std::ostream& out) {
    HTransducer t = transducer_from_json(read_json_file(o.input));
    bool cf = t.is_counter_free();
    emit(out, json{{"counter_free", cf}}, o.pretty);
    return cf ? 0 : 1;
}

int cmd_probe_wqo(const Options& o, std::ostream& out) {
    Series f = series_from_json(read_json_file(o.input));
    if (o.k < 0) throw parse_error("--k must be non-negative");
    OrderCtx ctx(std::move(f), static_cast<unsigned>(o.k), parse_flavor(o.klass));
    WqoReport rep = wqo_probe(ctx, parse_probe_mode(o.mode), o.max_len);
    emit(out, wqo_report_to_json(rep), o.pretty);
    return rep.bad() ? 1 : 0;
}

int cmd_probe_aperiodic(const Options& o, std::ostream& out) {
    Series f = series_from_json(read_json_file(o.input));
    if (o.k < 0) throw parse_error("--k must be non-negative");
    OrderCtx ctx(std::move(f), static_cast<unsigned>(o.k), parse_flavor(o.klass));
    AperiodicityReport rep = aperiodicity_probe(ctx, o.u, o.word, o.n_max);
    emit(out, aperiodicity_report_to_json(rep), o.pretty);
    return rep.found ? 0 : 1;
}

int cmd_count(const Options& o, std::ostream& out) {
    Series f = series_from_json(read_json_file(o.input));
    if (f.variant() != Series::Variant::Counting)
        throw unsupported_variant("count needs a counting series as input");
    Word w(f.alphabet(), o.word); // validates the symbols
    emit(out, int_to_json(count_valuations(f.formula(), f.vars(), w.symbols())), o.pretty);
    return 0;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
    HTransducer t = transducer_from_json(read_json_file(o.input));
    std::string dot = t.to_dot();
    if (!o.dot.empty()) {
        write_text_file(o.dot, dot);
        return 0;
    }
    out << dot;
    return 0;
}

int cmd_gallery(const Options& o, std::ostream& out) {
    if (o.target.empty()) {
        emit(out, json{{"entries", gallery_names()}}, o.pretty);
        return 0;
    }
    GalleryEntry entry = gallery_load(o.target);
    if (o.golden_key.empty()) {
        emit(out, series_to_json(entry.series), o.pretty);
        return 0;
    }
    auto it = entry.goldens.find(o.golden_key);
    if (it == entry.goldens.end())
        throw parse_error("gallery entry '" + o.target + "' has no golden '" + o.golden_key +
                          "'");
    emit(out, transducer_to_json(it->second), o.pretty);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact workbench for integer-valued string series"};
    app.name("respoly");
    app.require_subcommand(1);

    Options o;
    int (*handler)(const Options&, std::ostream&) = nullptr;

    auto add_pretty = [&](CLI::App* sub) { sub->add_flag("--pretty", o.pretty, "indent output"); };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", o.input, "JSON spec file")->required();
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate a series on a word");
    add_input(eval);
    eval->add_option("--word", o.word, "input word")->required();
    add_pretty(eval);
    eval->callback([&] { handler = cmd_eval; });

    CLI::App* derive = app.add_subcommand("derive", "derivative between two residuals");
    add_input(derive);
    derive->add_option("--u", o.u, "left residual word");
    derive->add_option("--v", o.v, "right residual word");
    add_pretty(derive);
    derive->callback([&] { handler = cmd_derive; });

    CLI::App* build = app.add_subcommand("build", "construct the residual transducer");
    add_input(build);
    build->add_option("--k", o.k, "level");
    build->add_option("--fuel", o.fuel, "oracle-call budget");
    build->add_option("--max-states", o.max_states, "state budget");
    build->add_option("--policy", o.policy, "worklist policy: shortlex|fifo|lifo");
    build->add_option("--dot", o.dot, "write DOT export here");
    build->add_option("--trace", o.trace, "write the construction trace here");
    add_pretty(build);
    build->callback([&] { handler = cmd_build; });

    CLI::App* validate = app.add_subcommand("validate", "check the residual-transducer conditions");
    add_input(validate);
    validate->add_option("--k", o.k, "level")->required();
    validate->add_option("transducer", o.target, "transducer JSON file")->required();
    add_pretty(validate);
    validate->callback([&] { handler = cmd_validate; });

    CLI::App* check = app.add_subcommand("check", "membership of the series itself");
    add_input(check);
    check->add_option("--class", o.klass, "npoly|nsf|zpoly")->required();
    check->add_option("--k", o.k, "level")->required();
    add_pretty(check);
    check->callback([&] { handler = cmd_check; });

    CLI::App* cfree = app.add_subcommand("counter-free", "transition-monoid aperiodicity");
    add_input(cfree);
    add_pretty(cfree);
    cfree->callback([&] { handler = cmd_counter_free; });

    CLI::App* pwqo = app.add_subcommand("probe-wqo", "bounded bad-sequence search");
    add_input(pwqo);
    pwqo->add_option("--k", o.k, "level")->required();
    pwqo->add_option("--class", o.klass, "npoly|nsf|zpoly");
    pwqo->add_option("--mode", o.mode, "prefix-chain|full");
    pwqo->add_option("--max-len", o.max_len, "word-length bound")->required();
    add_pretty(pwqo);
    pwqo->callback([&] { handler = cmd_probe_wqo; });

    CLI::App* aper = app.add_subcommand("probe-aperiodic", "pumped-chain threshold search");
    add_input(aper);
    aper->add_option("--k", o.k, "level")->required();
    aper->add_option("--class", o.klass, "npoly|nsf|zpoly");
    aper->add_option("--u", o.u, "base word");
    aper->add_option("--word", o.word, "pump word")->required();
    aper->add_option("--n-max", o.n_max, "pump-count bound")->required();
    add_pretty(aper);
    aper->callback([&] { handler = cmd_probe_aperiodic; });

    CLI::App* count = app.add_subcommand("count", "satisfying valuations of a counting series");
    add_input(count);
    count->add_option("--word", o.word, "input word")->required();
    add_pretty(count);
    count->callback([&] { handler = cmd_count; });

    CLI::App* xdot = app.add_subcommand("export-dot", "DOT export of a transducer");
    add_input(xdot);
    xdot->add_option("--dot", o.dot, "output file (default: stdout)");
    add_pretty(xdot);
    xdot->callback([&] { handler = cmd_export_dot; });

    CLI::App* gal = app.add_subcommand("gallery", "list or dump curated fixtures");
    gal->add_option("name", o.target, "entry name");
    gal->add_option("golden", o.golden_key, "golden transducer name");
    add_pretty(gal);
    gal->callback([&] { handler = cmd_gallery; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        return handler(o, out);
    } catch (const oracle_unavailable& e) {
        err << "oracle unavailable: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace respoly
