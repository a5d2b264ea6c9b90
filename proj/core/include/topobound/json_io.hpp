#pragma once

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>

#include "topobound/bounds.hpp"
#include "topobound/complex.hpp"
#include "topobound/homology.hpp"
#include "topobound/label.hpp"
#include "topobound/set_system.hpp"

namespace topobound {

/// Tagged terms: {"atom":3}, {"signed":[label,1]}, {"set":[...]},
/// {"pair":[a,b]}, {"pole":"south"} (with "level" above 1).
nlohmann::json label_to_json(const Label& label);
Label label_from_json(const nlohmann::json& j);

/// {"vertices": [labels], "facets": [[vertex indices]]}.
nlohmann::json complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const nlohmann::json& j, std::size_t cap = kDefaultFaceCap);

/// {"n": int, "sets": [[int, ...], ...]}, elements 1-based.
nlohmann::json set_system_to_json(const SetSystem& system);
SetSystem set_system_from_json(const nlohmann::json& j);
/// Throws ParseError on malformed text.
SetSystem parse_set_system(const std::string& text);

nlohmann::json interval_to_json(const IndexInterval& interval);
nlohmann::json betti_to_json(const BettiProfile& betti);

nlohmann::json report_to_json(const BoundsReport& report);
std::string report_csv_header();
std::string report_csv_row(const BoundsReport& report);

}  // namespace topobound
