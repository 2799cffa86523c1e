#pragma once

// JSON interchange for drawings, reports, finger-move specs and six-point
// configurations. Rationals are strings "p/q" (or "p"). Output preserves
// insertion order so serialization is deterministic.

#include "wulab/checks.hpp"
#include "wulab/constructions.hpp"
#include "wulab/space3.hpp"

#include <json.hpp>

#include <stdexcept>

namespace wulab::io {

using Json = nlohmann::ordered_json;

/// Malformed input: wrong shape, bad label, unknown edge.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);  // string or integer

Json point_to_json(const Point2& p);
Point2 point_from_json(const Json& j);

Json polyline_to_json(const Polyline& p);
Polyline polyline_from_json(const Json& j);
Json closed_polyline_to_json(const ClosedPolyline& p);  // {"closed": true, "points": [...]}
ClosedPolyline closed_polyline_from_json(const Json& j);

/// "1-2" for edge e.
std::string edge_key(const Graph& g, std::size_t e);
/// Edge index from "u-v" in either order.
std::size_t edge_from_key(const Graph& g, std::string_view key);

Json graph_to_json(const Graph& g);
/// {"kind": ..., "params": {...}} or {"vertices": [...], "edges": [[u, v], ...]}.
Graph graph_from_json(const Json& j);

Json drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const Json& j);

Json to_json(const Drawing& d, const ViolationReport& r);
Json to_json(const Drawing& d, const GeneralPositionReport& r);
Json to_json(const Drawing& d, const InvariantProfile& p);
Json to_json(const Graph& g, const InvariantProfile& p);
Json wu_to_json(const std::vector<std::pair<std::string, long>>& wu);
Json to_json(const TheoremReport& r);

Json finger_move_to_json(const Drawing& d, const FingerMoveSpec& s);
FingerMoveSpec finger_move_from_json(const Drawing& d, const Json& j);

Json point3_to_json(const Point3& p);
Point3 point3_from_json(const Json& j);
Json six_config_to_json(const SixConfig& c);
SixConfig six_config_from_json(const Json& j);
Json to_json(const CgsReport& r);

Json to_json(const CheckReport& r);
Json to_json(const ExplorationResult& r);

/// {"error": message, "witness": [x, y] | null}
Json error_to_json(const std::exception& e);

/// Optional "cycles" member: array of cycle strings.
std::optional<std::vector<Cycle>> cycles_from_json(const Graph& g, const Json& j);

}  // namespace wulab::io
