#pragma once

#include <json.hpp>

#include "asurj/construct.hpp"
#include "asurj/verify.hpp"

namespace asurj {

// Bit-stable JSON: fixed field order (ordered_json), rationals as "p/q"
// strings, exponent vectors as integer arrays, no floats in exact objects.
// All files carry "format": 1.
using Json = nlohmann::ordered_json;

Json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j);

Json to_json(const PolyMap& f);
PolyMap polymap_from_json(const Json& j);

Json to_json(const TriangularAuto& a);
TriangularAuto triauto_from_json(const Json& j);

// ZSpec w_polys serialize as canonical polynomial text; input accepts either
// text or the structural MultiPoly form.
Json to_json(const ZSpec& spec);
ZSpec zspec_from_json(const Json& j);

Json to_json(const ConstructionBundle& b);
// Revalidates every bundle invariant; throws on corrupt files.
ConstructionBundle bundle_from_json(const Json& j);

Json to_json(const AuditReport& r);  // elapsed excluded: reruns byte-identical

Json points_to_json(const std::vector<std::vector<Rational>>& points);
std::vector<std::vector<Rational>> points_from_json(const Json& j);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace asurj
