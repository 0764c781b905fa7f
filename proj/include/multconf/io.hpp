#pragma once

#include <json.hpp>

#include "multconf/covering.hpp"

namespace multconf {

// On-disk envelope: {"version": 1, "kind": ..., "payload": ...} with kind
// one of structure | covering | map | glue-spec | report. Serialization is
// canonical: sorted object keys, element arrays in structure order.
struct Document {
    int version = 1;
    std::string kind;
    nlohmann::json payload;
};

Document parse_document(const std::string& text);
std::string serialize_document(const Document& d);

// structure payload: {name, points: [id...], lines: [{id, points: [...]}...]}
// plus an optional "layers" block carrying construction coordinates.
Document to_document(const IncidenceStructure& s);
Document to_document(const Layered& s);
IncidenceStructure structure_from_document(const Document& d);
Layered layered_from_document(const Document& d);  // cycle 0 when no layers

// covering payload: {blocks: [{index, points: [...], lines: [...]}...]}
Document to_document(const Covering& c);
Covering covering_from_document(const Document& d);

// tack payload: {pairs: [[point, line]...]}
Document to_document(const TackRelation& t);
TackRelation tack_from_document(const Document& d);

// map payload: {kind, dualizing, point_part: {src: dst}, line_part: {src: dst}}
Document to_document(const StructureMap& f);
StructureMap map_from_document(const Document& d, IncidenceStructure source,
                               IncidenceStructure target);

Document report_document(const nlohmann::json& payload);

// Levi graph in DOT: points as circles, lines as squares, one edge per
// flag, deterministic order.
std::string export_levi_dot(const IncidenceStructure& s);

}  // namespace multconf
