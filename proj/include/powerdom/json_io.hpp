#pragma once

#include <json.hpp>

#include "powerdom/bounds.hpp"
#include "powerdom/propagation.hpp"
#include "powerdom/solver.hpp"
#include "powerdom/trails.hpp"
#include "powerdom/tree_analysis.hpp"

namespace powerdom {

// Rationals serialize as {"num": .., "den": ..}; vertex sets as sorted ID arrays.
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const ObservationTrace& trace);
nlohmann::json to_json(const GammaResult& result);
nlohmann::json to_json(const BoundsReport& report);
nlohmann::json to_json(const MonotoneTrail& trail);
nlohmann::json to_json(const TreeCertificate& cert);

}  // namespace powerdom
