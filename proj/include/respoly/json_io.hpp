#pragma once

#include "respoly/builder.hpp"
#include "respoly/resorder.hpp"
#include "respoly/series.hpp"
#include "respoly/transducer.hpp"

#include "json.hpp"

#include <optional>

namespace respoly {

// Integers and rationals appear as JSON numbers when they fit in 64 bits
// and as decimal / "p/q" strings otherwise; both forms are accepted on input.
nlohmann::json int_to_json(const Int& v);
Int json_to_int(const nlohmann::json& j);
nlohmann::json rat_to_json(const Rat& r);
Rat json_to_rat(const nlohmann::json& j);

nlohmann::json alphabet_to_json(const Alphabet& alphabet);
Alphabet alphabet_from_json(const nlohmann::json& j);

// {"kind":"unary-qp"|"linrep"|"counting"|"zero", ...}. Kinds without an
// alphabet field take `fallback` (default: the one-letter alphabet "a").
nlohmann::json series_to_json(const Series& s);
Series series_from_json(const nlohmann::json& j,
                        const std::optional<Alphabet>& fallback = std::nullopt);

nlohmann::json transducer_to_json(const HTransducer& t);
HTransducer transducer_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const BuildTrace& trace);
nlohmann::json wqo_report_to_json(const WqoReport& rep);
nlohmann::json aperiodicity_report_to_json(const AperiodicityReport& rep);

} // namespace respoly
