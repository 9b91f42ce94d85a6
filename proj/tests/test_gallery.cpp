#include "doctest.h"

#include "respoly/builder.hpp"
#include "respoly/errors.hpp"
#include "respoly/gallery.hpp"

#include "helpers.hpp"

#include <string>
#include <vector>

using namespace respoly;
using testutil::an;

TEST_CASE("the registry lists the curated entries") {
    REQUIRE(gallery_names() ==
            std::vector<std::string>{"badexko", "badexok", "choose2", "count-ab", "identity",
                                     "parity", "zero"});
    REQUIRE_THROWS_AS(gallery_load("does-not-exist"), parse_error);
}

TEST_CASE("every entry loads with its classifications verified") {
    for (const std::string& name : gallery_names()) {
        CAPTURE(name);
        GalleryEntry entry = gallery_load(name);
        REQUIRE(entry.name == name);
        // load already re-checks each classification against the oracles;
        // re-run them here as well
        for (const GalleryClassification& c : entry.classes) {
            bool got = c.flavor == Flavor::Npoly   ? member_npoly(entry.series, c.level)
                       : c.flavor == Flavor::Nsf   ? member_nsf(entry.series, c.level)
                                                   : member_zpoly(entry.series, c.level);
            REQUIRE(got == c.member);
        }
    }
}

TEST_CASE("the documented value tables hold") {
    Series badexok = gallery_load("badexok").series;
    REQUIRE(badexok.eval("") == Int(1));
    for (std::size_t n = 1; n <= 200; ++n) REQUIRE(badexok.eval(an(n)) == Int(n - 1));

    Series badexko = gallery_load("badexko").series;
    std::vector<Int> head = {Int(1), Int(0), Int(1), Int(0), Int(1), Int(2), Int(3)};
    for (std::size_t n = 0; n < head.size(); ++n) REQUIRE(badexko.eval(an(n)) == head[n]);
    for (std::size_t n = 3; n <= 200; ++n) REQUIRE(badexko.eval(an(n)) == Int(n - 3));

    Series choose2 = gallery_load("choose2").series;
    for (std::size_t n = 0; n <= 50; ++n)
        REQUIRE(choose2.eval(an(n)) == Int(n * (n - (n ? 1 : 0)) / 2));

    Series parity = gallery_load("parity").series;
    for (std::size_t n = 0; n <= 20; ++n) REQUIRE(parity.eval(an(n)) == Int(n % 2));

    Series identity = gallery_load("identity").series;
    for (std::size_t n = 0; n <= 20; ++n) REQUIRE(identity.eval(an(n)) == Int(n));

    REQUIRE(gallery_load("zero").series.eval(an(17)) == Int(0));
}

TEST_CASE("count-ab's two representations agree exhaustively") {
    GalleryEntry entry = gallery_load("count-ab");
    REQUIRE(entry.series.variant() == Series::Variant::Counting);
    REQUIRE(entry.alt_series.has_value());
    REQUIRE(entry.alt_series->variant() == Series::Variant::Linear);

    std::size_t checked = 0;
    for (const std::string& w : words_up_to(Alphabet("ab"), 8)) {
        Int na = 0, nb = 0;
        for (char c : w) (c == 'a' ? na : nb)++;
        REQUIRE(entry.series.eval(w) == na * nb);
        REQUIRE(entry.alt_series->eval(w) == na * nb);
        ++checked;
    }
    REQUIRE(checked == 511);
}

TEST_CASE("goldens validate against their series") {
    for (const std::string& name : gallery_names()) {
        GalleryEntry entry = gallery_load(name);
        for (const auto& [key, golden] : entry.goldens) {
            if (key.rfind("residual-k", 0) != 0) continue; // 'alt' is knowingly non-canonical
            CAPTURE(name);
            CAPTURE(key);
            unsigned k = static_cast<unsigned>(std::stoul(key.substr(10)));
            REQUIRE(validate_residual_transducer(entry.series, k, golden).empty());
        }
    }
}
