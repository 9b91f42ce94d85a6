#pragma once

#include "respoly/resorder.hpp"
#include "respoly/series.hpp"
#include "respoly/transducer.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace respoly {

struct GalleryClassification {
    Flavor flavor;
    int level;
    bool member;
};

struct GalleryEntry {
    std::string name;
    Series series;
    std::optional<Series> alt_series; // second representation, when one exists
    std::vector<GalleryClassification> classes;
    std::map<std::string, HTransducer> goldens;
};

// Curated fixtures compiled into the binary from data/gallery/*.json.
// Loading re-verifies every documented classification against the
// membership oracles where they apply.
std::vector<std::string> gallery_names();
GalleryEntry gallery_load(const std::string& name); // throws parse_error when unknown

} // namespace respoly
