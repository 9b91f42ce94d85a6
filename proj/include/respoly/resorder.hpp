#pragma once

#include "respoly/series.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace respoly {

enum class Flavor { Npoly, Nsf, Zpoly };

Flavor parse_flavor(std::string_view name); // "npoly" | "nsf" | "zpoly"
std::string_view flavor_name(Flavor flavor);

// w |-> f(uw) - f(vw).
Series derivative(const Series& f, std::string_view u, std::string_view v);

// Membership of g in the class at level j >= -1; level -1 is the class {0}.
// npoly: degree <= j and non-negative everywhere; zpoly: degree <= j;
// nsf: npoly plus period 1 and a tail polynomial that is zero, a
// non-negative constant, or has positive leading coefficient.
// Throws oracle_unavailable where no decision procedure applies
// (non-unary representations at level >= 0).
bool member_npoly(const Series& g, int j);
bool member_nsf(const Series& g, int j);
bool member_zpoly(const Series& g, int j);

// Fixes a function f, a level k and a flavor; compares words by testing the
// derivative of their residuals against the flavor class at level k-1.
// Supported: any alphabet at k=0 (npoly/zpoly), one-letter alphabets at any
// level when f has an explicit unary representation.
class OrderCtx {
public:
    OrderCtx(Series f, unsigned k, Flavor flavor);

    const Series& f() const { return f_; }
    unsigned k() const { return k_; }
    Flavor flavor() const { return flavor_; }

    // v below u: f|u - f|v lies in the class at level k-1.
    bool res_below(std::string_view v, std::string_view u) const;
    // derivative in the zpoly class at level k-1 (symmetric).
    bool res_equiv(std::string_view u, std::string_view v) const;

private:
    Series f_;
    unsigned k_;
    Flavor flavor_;
};

enum class ProbeMode { PrefixChain, Full };

ProbeMode parse_probe_mode(std::string_view name); // "prefix-chain" | "full"
std::string_view probe_mode_name(ProbeMode mode);

// Bounded search for bad sequences (no i < j with w_i below w_j).
// prefix-chain: scans the prefix chains of all words up to max_len and
// reports the longest bad subsequence found. full: keeps every enumerated
// word not dominated by a kept predecessor and reports the growth of that
// set per word length. Both stop early once a bad sequence of length
// max_len appears; the verdict only ever speaks about words up to the bound.
struct WqoReport {
    ProbeMode mode = ProbeMode::PrefixChain;
    std::size_t max_len = 0;
    std::string verdict; // "no-bad-sequence-up-to-bound" | "bad-chain"
    std::vector<std::string> witness;              // longest bad sequence found
    std::vector<std::size_t> antichain_sizes;      // per processed word length
    bool bad() const { return verdict == "bad-chain"; }
};

WqoReport wqo_probe(const OrderCtx& ctx, ProbeMode mode, std::size_t max_len);

// Bounded search for the least n0 <= n_max with u w^n below u w^(n+1) for
// every n0 <= n < n_max. found=false means no such threshold below the
// bound was observed (a semi-decision either way).
struct AperiodicityReport {
    std::string u, w;
    std::size_t n_max = 0;
    bool found = false;
    std::size_t n0 = 0; // meaningful only when found
};

AperiodicityReport aperiodicity_probe(const OrderCtx& ctx, std::string_view u,
                                      std::string_view w, std::size_t n_max);

} // namespace respoly
