#pragma once

#include <string>

#include <json.hpp>

#include "foliage/boundary.hpp"
#include "foliage/braid.hpp"
#include "foliage/disc.hpp"
#include "foliage/hplane.hpp"
#include "foliage/insert.hpp"

namespace foliage {

using json = nlohmann::json;

json to_json(const Letter& l);
json to_json(const BraidWord& w);
json to_json(const Permutation& p);
json to_json(const BoundaryWord& bw);
json to_json(const VertexString& V);
json to_json(const Saddle& s, const VertexString& V);
json to_json(const SaddleCode& c);  // boundaryWord included when the code has one
json to_json(const BoundaryPoint& p, const VertexString& V);
json to_json(const BoundaryCode& bc);
json to_json(const Necklace& n);
json to_json(const HalfPlane& h);
json to_json(const ThetaCycle& c);
json to_json(const InsertionArc& a, const VertexString& V, int m);
json to_json(const CycleRecord& r, const CycleReport& rep);

Letter letter_from_json(const json& j);
BraidWord word_from_json(const json& j);
Permutation permutation_from_json(const json& j);
BoundaryWord boundary_word_from_json(const json& j);
VertexString vertex_string_from_json(const json& j);
Saddle saddle_from_json(const json& j, const VertexString& V);
SaddleCode code_from_json(const json& j);
BoundaryPoint point_from_json(const json& j, const VertexString& V);
BoundaryCode boundary_code_from_json(const json& j);
Necklace necklace_from_json(const json& j);
HalfPlane half_plane_from_json(const json& j);
ThetaCycle cycle_from_json(const json& j);
InsertionArc arc_from_json(const json& j, const VertexString& V);

// A JSON document, or bracket notation when the text does not start with '{'.
SaddleCode read_code(const std::string& text);

// The cycle of G that traces the given code; aa signs are ignored.
ThetaCycle theta_cycle(const HalfPlaneGraph& G, const SaddleCode& c);

std::string render_film(const HalfPlaneGraph& G, const ThetaCycle& c);
std::string export_gml(const SaddleCode& c);
std::string export_gml(const HalfPlaneGraph& G, const ThetaCycle& c);

}  // namespace foliage
