#include "respoly/gallery.hpp"

#include "respoly/errors.hpp"
#include "respoly/json_io.hpp"

#include <algorithm>

namespace respoly {

namespace detail {
struct RawGalleryEntry {
    const char* name;
    const char* text;
};
const RawGalleryEntry* gallery_raw_entries();
std::size_t gallery_raw_entry_count();
} // namespace detail

std::vector<std::string> gallery_names() {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < detail::gallery_raw_entry_count(); ++i)
        out.push_back(detail::gallery_raw_entries()[i].name);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool run_oracle(Flavor flavor, const Series& s, int level) {
    switch (flavor) {
    case Flavor::Npoly:
        return member_npoly(s, level);
    case Flavor::Nsf:
        return member_nsf(s, level);
    case Flavor::Zpoly:
        return member_zpoly(s, level);
    }
    return false;
}

} // namespace

GalleryEntry gallery_load(const std::string& name) {
    const detail::RawGalleryEntry* raw = nullptr;
    for (std::size_t i = 0; i < detail::gallery_raw_entry_count(); ++i)
        if (name == detail::gallery_raw_entries()[i].name) {
            raw = &detail::gallery_raw_entries()[i];
            break;
        }
    if (!raw) throw parse_error("unknown gallery entry '" + name + "'");

    nlohmann::json j = nlohmann::json::parse(raw->text);
    Series series = series_from_json(j.at("series"));
    std::optional<Series> alt;
    if (j.contains("alt_series")) alt = series_from_json(j.at("alt_series"));

    std::vector<GalleryClassification> classes;
    for (const auto& c : j.value("classes", nlohmann::json::array())) {
        GalleryClassification gc{parse_flavor(c.at("class").get<std::string>()),
                                 c.at("level").get<int>(), c.at("member").get<bool>()};
        if (run_oracle(gc.flavor, series, gc.level) != gc.member)
            throw error("gallery entry '" + name + "' misclassified as " +
                        std::string(flavor_name(gc.flavor)) + "[" + std::to_string(gc.level) +
                        "]=" + (gc.member ? "true" : "false"));
        classes.push_back(gc);
    }

    std::map<std::string, HTransducer> goldens;
    const nlohmann::json golden_specs = j.value("goldens", nlohmann::json::object());
    for (const auto& [key, value] : golden_specs.items())
        goldens.emplace(key, transducer_from_json(value));

    if (alt && alt->alphabet() != series.alphabet())
        throw error("gallery entry '" + name + "' mixes alphabets");

    return GalleryEntry{j.at("name").get<std::string>(), std::move(series), std::move(alt),
                        std::move(classes), std::move(goldens)};
}

} // namespace respoly
