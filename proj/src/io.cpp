#include "multconf/io.hpp"

namespace multconf {

using nlohmann::json;

namespace {

const json& require_field(const json& obj, const std::string& key) {
    if (!obj.is_object() || !obj.contains(key))
        throw FormatError("missing field \"" + key + "\"");
    return obj.at(key);
}

std::string require_string(const json& obj, const std::string& key) {
    const json& v = require_field(obj, key);
    if (!v.is_string())
        throw FormatError("field \"" + key + "\" must be a string");
    return v.get<std::string>();
}

}  // namespace

Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    Document d;
    const json& v = require_field(j, "version");
    if (!v.is_number_integer() || v.get<int>() != 1)
        throw FormatError("unsupported document version");
    d.version = v.get<int>();
    d.kind = require_string(j, "kind");
    static const char* kinds[] = {"structure", "covering", "map", "glue-spec", "report"};
    if (std::find(std::begin(kinds), std::end(kinds), d.kind) == std::end(kinds))
        throw FormatError("unknown document kind: " + d.kind);
    d.payload = require_field(j, "payload");
    return d;
}

std::string serialize_document(const Document& d) {
    json j;
    j["version"] = d.version;
    j["kind"] = d.kind;
    j["payload"] = d.payload;
    return j.dump(2) + "\n";
}

namespace {

json structure_payload(const IncidenceStructure& s) {
    json p;
    p["name"] = s.name();
    p["points"] = s.points();
    json lines = json::array();
    for (const Id& l : s.lines()) {
        json jl;
        jl["id"] = l;
        jl["points"] = s.row(l);
        lines.push_back(std::move(jl));
    }
    p["lines"] = std::move(lines);
    return p;
}

}  // namespace

Document to_document(const IncidenceStructure& s) {
    return Document{1, "structure", structure_payload(s)};
}

Document to_document(const Layered& s) {
    Document d{1, "structure", structure_payload(s.structure)};
    if (s.cycle > 0) {
        json layers;
        layers["cycle"] = s.cycle;
        json jp = json::object(), jl = json::object();
        for (const Id& p : s.structure.points()) {
            const LayerTag& t = s.tag(p);
            jp[p] = json{{"layer", t.layer}, {"origin", t.origin}};
        }
        for (const Id& l : s.structure.lines()) {
            const LayerTag& t = s.tag(l);
            jl[l] = json{{"layer", t.layer}, {"origin", t.origin}};
        }
        layers["points"] = std::move(jp);
        layers["lines"] = std::move(jl);
        d.payload["layers"] = std::move(layers);
    }
    return d;
}

IncidenceStructure structure_from_document(const Document& d) {
    if (d.kind != "structure")
        throw FormatError("expected a structure document, got " + d.kind);
    const json& p = d.payload;
    IncidenceStructure s;
    s.set_name(require_string(p, "name"));
    const json& pts = require_field(p, "points");
    if (!pts.is_array())
        throw FormatError("\"points\" must be an array");
    try {
        for (const json& jp : pts) {
            if (!jp.is_string())
                throw FormatError("point ids must be strings");
            s.add_point(jp.get<std::string>());
        }
        const json& lns = require_field(p, "lines");
        if (!lns.is_array())
            throw FormatError("\"lines\" must be an array");
        for (const json& jl : lns)
            s.add_line(require_string(jl, "id"));
        for (const json& jl : lns) {
            Id l = require_string(jl, "id");
            const json& row = require_field(jl, "points");
            if (!row.is_array())
                throw FormatError("line \"" + l + "\": \"points\" must be an array");
            for (const json& jp : row)
                s.add_flag(jp.get<std::string>(), l);
        }
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed structure payload: ") + e.what());
    }
    return s;
}

Layered layered_from_document(const Document& d) {
    Layered out;
    out.structure = structure_from_document(d);
    if (!d.payload.contains("layers"))
        return out;
    const json& layers = d.payload.at("layers");
    const json& cyc = require_field(layers, "cycle");
    if (!cyc.is_number_integer() || cyc.get<int>() < 2)
        throw FormatError("\"layers.cycle\" must be an integer >= 2");
    out.cycle = cyc.get<int>();
    auto read = [&](const char* key, bool is_point) {
        const json& m = require_field(layers, key);
        if (!m.is_object())
            throw FormatError(std::string("\"layers.") + key + "\" must be an object");
        for (auto it = m.begin(); it != m.end(); ++it) {
            bool known = is_point ? out.structure.has_point(it.key())
                                  : out.structure.has_line(it.key());
            if (!known)
                throw FormatError("layer tag for unknown element " + it.key());
            const json& t = it.value();
            int layer = require_field(t, "layer").get<int>();
            if (layer < 0 || layer >= out.cycle)
                throw FormatError("layer out of range for " + it.key());
            out.tags[it.key()] = {layer, require_string(t, "origin")};
        }
    };
    read("points", true);
    read("lines", false);
    for (const Id& p : out.structure.points())
        if (!out.tags.count(p))
            throw FormatError("missing layer tag for point " + p);
    for (const Id& l : out.structure.lines())
        if (!out.tags.count(l))
            throw FormatError("missing layer tag for line " + l);
    return out;
}

Document to_document(const Covering& c) {
    json blocks = json::array();
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
        json b;
        b["index"] = i;
        b["points"] = c.blocks[i].points;
        b["lines"] = c.blocks[i].lines;
        blocks.push_back(std::move(b));
    }
    json p;
    p["blocks"] = std::move(blocks);
    return Document{1, "covering", std::move(p)};
}

Covering covering_from_document(const Document& d) {
    if (d.kind != "covering")
        throw FormatError("expected a covering document, got " + d.kind);
    const json& blocks = require_field(d.payload, "blocks");
    if (!blocks.is_array())
        throw FormatError("\"blocks\" must be an array");
    Covering c;
    c.blocks.resize(blocks.size());
    try {
        for (const json& b : blocks) {
            const json& idx = require_field(b, "index");
            if (!idx.is_number_unsigned() || idx.get<std::size_t>() >= c.blocks.size())
                throw FormatError("block index out of range");
            Substructure& sub = c.blocks[idx.get<std::size_t>()];
            for (const json& p : require_field(b, "points"))
                sub.points.push_back(p.get<std::string>());
            for (const json& l : require_field(b, "lines"))
                sub.lines.push_back(l.get<std::string>());
        }
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed covering payload: ") + e.what());
    }
    return c;
}

Document to_document(const TackRelation& t) {
    json pairs = json::array();
    for (const auto& [p, l] : t.pairs())
        pairs.push_back(json::array({p, l}));
    json payload;
    payload["pairs"] = std::move(pairs);
    return Document{1, "report", std::move(payload)};
}

TackRelation tack_from_document(const Document& d) {
    TackRelation t;
    for (const json& pair : require_field(d.payload, "pairs")) {
        if (!pair.is_array() || pair.size() != 2)
            throw FormatError("tack pairs must be [point, line] arrays");
        t.add(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    return t;
}

Document to_document(const StructureMap& f) {
    json p;
    p["kind"] = to_string(f.kind());
    p["dualizing"] = f.dualizing();
    json pp = json::object(), lp = json::object();
    for (const auto& [src, dst] : f.point_part())
        pp[src] = dst;
    for (const auto& [src, dst] : f.line_part())
        lp[src] = dst;
    p["point_part"] = std::move(pp);
    p["line_part"] = std::move(lp);
    return Document{1, "map", std::move(p)};
}

StructureMap map_from_document(const Document& d, IncidenceStructure source,
                               IncidenceStructure target) {
    if (d.kind != "map")
        throw FormatError("expected a map document, got " + d.kind);
    MapKind kind = map_kind_from_string(require_string(d.payload, "kind"));
    bool dualizing = kind == MapKind::Correlation;
    if (d.payload.contains("dualizing"))
        dualizing = d.payload.at("dualizing").get<bool>();
    StructureMap f(kind, dualizing, std::move(source), std::move(target));
    try {
        const json& pp = require_field(d.payload, "point_part");
        for (const auto& [src, dst] : pp.items())
            f.set_point_image(src, dst.get<std::string>());
        const json& lp = require_field(d.payload, "line_part");
        for (const auto& [src, dst] : lp.items())
            f.set_line_image(src, dst.get<std::string>());
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed map payload: ") + e.what());
    }
    return f;
}

Document report_document(const nlohmann::json& payload) {
    return Document{1, "report", payload};
}

std::string export_levi_dot(const IncidenceStructure& s) {
    auto quote = [](const Id& x) {
        std::string out = "\"";
        for (char c : x) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::string dot = "graph " + quote(s.name()) + " {\n";
    for (const Id& p : s.points())
        dot += "  " + quote(p) + " [shape=circle];\n";
    for (const Id& l : s.lines())
        dot += "  " + quote(l) + " [shape=square];\n";
    for (const Id& l : s.lines())
        for (const Id& p : s.row(l))
            dot += "  " + quote(p) + " -- " + quote(l) + ";\n";
    dot += "}\n";
    return dot;
}

}  // namespace multconf
