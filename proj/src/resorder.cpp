#include "respoly/resorder.hpp"

#include "respoly/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

namespace respoly {

Flavor parse_flavor(std::string_view name) {
    if (name == "npoly") return Flavor::Npoly;
    if (name == "nsf") return Flavor::Nsf;
    if (name == "zpoly") return Flavor::Zpoly;
    throw parse_error("unknown class '" + std::string(name) + "' (expected npoly, nsf or zpoly)");
}

std::string_view flavor_name(Flavor flavor) {
    switch (flavor) {
    case Flavor::Npoly:
        return "npoly";
    case Flavor::Nsf:
        return "nsf";
    case Flavor::Zpoly:
        return "zpoly";
    }
    return "?";
}

Series derivative(const Series& f, std::string_view u, std::string_view v) {
    if (f.variant() == Series::Variant::Counting)
        throw unsupported_variant("derivatives need a unary or linear representation");
    return f.residual(u).subtract(f.residual(v));
}

namespace {

bool level_zero_class(const Series& g) { return g.is_zero(); }

const UnaryQP* unary_or_null(const Series& g) {
    return g.variant() == Series::Variant::Unary ? &g.unary_qp() : nullptr;
}

} // namespace

bool member_npoly(const Series& g, int j) {
    if (j <= -1) return level_zero_class(g);
    if (g.variant() == Series::Variant::Zero) return true;
    if (const UnaryQP* u = unary_or_null(g)) {
        UnaryQP n = u->normalized();
        return n.degree() <= j && n.is_nonnegative_everywhere();
    }
    throw oracle_unavailable("npoly membership at level >= 0 needs a unary representation");
}

bool member_zpoly(const Series& g, int j) {
    if (j <= -1) return level_zero_class(g);
    if (g.variant() == Series::Variant::Zero) return true;
    if (const UnaryQP* u = unary_or_null(g)) return u->normalized().degree() <= j;
    throw oracle_unavailable("zpoly membership at level >= 0 needs a unary representation");
}

bool member_nsf(const Series& g, int j) {
    if (j <= -1) return level_zero_class(g);
    if (g.variant() == Series::Variant::Zero) return true;
    if (const UnaryQP* u = unary_or_null(g)) {
        UnaryQP n = u->normalized();
        if (n.degree() > j || !n.is_nonnegative_everywhere()) return false;
        if (n.period() != 1) return false; // modular counting is not star-free
        const RationalPoly& p = n.tail()[0];
        if (p.is_zero()) return true;
        if (p.degree() == 0) return p.coefficient(0) >= 0;
        return p.leading() > 0; // admits a shift with non-negative coefficients
    }
    throw oracle_unavailable("nsf membership at level >= 0 needs a unary representation");
}

OrderCtx::OrderCtx(Series f, unsigned k, Flavor flavor)
    : f_(std::move(f)), k_(k), flavor_(flavor) {
    if (f_.variant() == Series::Variant::Counting)
        throw oracle_unavailable("residual comparison needs a unary or linear representation");
    bool one_letter = f_.alphabet().size() == 1;
    if (!one_letter) {
        if (k_ != 0)
            throw oracle_unavailable("levels k >= 1 are decided only over one-letter alphabets");
        if (flavor_ == Flavor::Nsf)
            throw oracle_unavailable("the star-free ordering is decided only over one-letter alphabets");
    }
    if (k_ >= 1 && f_.variant() == Series::Variant::Linear)
        throw oracle_unavailable("levels k >= 1 need an explicit unary representation");
}

bool OrderCtx::res_below(std::string_view v, std::string_view u) const {
    Series d = derivative(f_, u, v);
    int level = static_cast<int>(k_) - 1;
    switch (flavor_) {
    case Flavor::Npoly:
        return member_npoly(d, level);
    case Flavor::Nsf:
        return member_nsf(d, level);
    case Flavor::Zpoly:
        return member_zpoly(d, level);
    }
    return false;
}

bool OrderCtx::res_equiv(std::string_view u, std::string_view v) const {
    return member_zpoly(derivative(f_, u, v), static_cast<int>(k_) - 1);
}

ProbeMode parse_probe_mode(std::string_view name) {
    if (name == "prefix-chain") return ProbeMode::PrefixChain;
    if (name == "full") return ProbeMode::Full;
    throw parse_error("unknown probe mode '" + std::string(name) +
                      "' (expected prefix-chain or full)");
}

std::string_view probe_mode_name(ProbeMode mode) {
    return mode == ProbeMode::PrefixChain ? "prefix-chain" : "full";
}

namespace {

struct BelowCache {
    const OrderCtx& ctx;
    std::map<std::pair<std::string, std::string>, bool> memo;

    bool operator()(const std::string& v, const std::string& u) {
        auto key = std::make_pair(v, u);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool r = ctx.res_below(v, u);
        memo.emplace(std::move(key), r);
        return r;
    }
};

// Longest subsequence of 0..m-1 with no related pair (i < j with rel[i][j]).
std::vector<std::size_t> longest_bad_subsequence(const std::vector<std::vector<bool>>& rel,
                                                 std::size_t target) {
    std::size_t m = rel.size();
    std::vector<std::size_t> best, cur;
    std::function<void(std::size_t)> extend = [&](std::size_t start) {
        if (cur.size() > best.size()) best = cur;
        if (best.size() >= target) return;
        for (std::size_t j = start; j < m; ++j) {
            if (cur.size() + (m - j) <= best.size()) break;
            bool compatible = true;
            for (std::size_t i : cur)
                if (rel[i][j]) {
                    compatible = false;
                    break;
                }
            if (compatible) {
                cur.push_back(j);
                extend(j + 1);
                cur.pop_back();
                if (best.size() >= target) return;
            }
        }
    };
    extend(0);
    return best;
}

} // namespace

WqoReport wqo_probe(const OrderCtx& ctx, ProbeMode mode, std::size_t max_len) {
    const Alphabet& alphabet = ctx.f().alphabet();
    BelowCache below{ctx, {}};
    WqoReport rep;
    rep.mode = mode;
    rep.max_len = max_len;

    std::vector<std::string> layer{""};
    bool stop = false;
    if (mode == ProbeMode::PrefixChain) {
        std::vector<std::string> best;
        for (std::size_t len = 0; len <= max_len; ++len) {
            if (len > 0) {
                std::vector<std::string> next;
                next.reserve(layer.size() * alphabet.size());
                for (const auto& w : layer)
                    for (std::size_t a = 0; a < alphabet.size(); ++a)
                        next.push_back(w + alphabet.letter(a));
                layer = std::move(next);
            }
            for (const auto& u : layer) {
                std::size_t m = u.size() + 1; // prefixes of u, shortest first
                std::vector<std::string> chain(m);
                for (std::size_t i = 0; i < m; ++i) chain[i] = u.substr(0, i);
                std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = i + 1; j < m; ++j) rel[i][j] = below(chain[i], chain[j]);
                auto bad = longest_bad_subsequence(rel, std::max<std::size_t>(max_len, 1));
                if (bad.size() > best.size()) {
                    best.clear();
                    for (std::size_t i : bad) best.push_back(chain[i]);
                }
                if (best.size() >= max_len) {
                    stop = true;
                    break;
                }
            }
            rep.antichain_sizes.push_back(best.size());
            if (stop) break;
        }
        rep.witness = std::move(best);
    } else {
        std::vector<std::string> kept; // no kept predecessor lies below a later entry
        for (std::size_t len = 0; len <= max_len; ++len) {
            if (len > 0) {
                std::vector<std::string> next;
                next.reserve(layer.size() * alphabet.size());
                for (const auto& w : layer)
                    for (std::size_t a = 0; a < alphabet.size(); ++a)
                        next.push_back(w + alphabet.letter(a));
                layer = std::move(next);
            }
            for (const auto& u : layer) {
                bool dominated = false;
                for (const auto& v : kept)
                    if (below(v, u)) {
                        dominated = true;
                        break;
                    }
                if (!dominated) kept.push_back(u);
                if (kept.size() >= max_len) {
                    stop = true;
                    break;
                }
            }
            rep.antichain_sizes.push_back(kept.size());
            if (stop) break;
        }
        rep.witness = std::move(kept);
    }
    rep.verdict = rep.witness.size() >= max_len ? "bad-chain" : "no-bad-sequence-up-to-bound";
    return rep;
}

AperiodicityReport aperiodicity_probe(const OrderCtx& ctx, std::string_view u,
                                      std::string_view w, std::size_t n_max) {
    if (w.empty()) throw parse_error("aperiodicity probe needs a non-empty pump word");
    AperiodicityReport rep;
    rep.u = std::string(u);
    rep.w = std::string(w);
    rep.n_max = n_max;

    std::string lower = rep.u; // u w^n
    std::size_t threshold = 0; // one past the last violated index
    for (std::size_t n = 0; n < n_max; ++n) {
        std::string upper = lower + rep.w;
        if (!ctx.res_below(lower, upper)) threshold = n + 1;
        lower = upper;
    }
    if (threshold < n_max) {
        rep.found = true;
        rep.n0 = threshold;
    }
    return rep;
}

} // namespace respoly
