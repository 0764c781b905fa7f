#include <doctest.h>

#include "fixtures.hpp"
#include "multconf/io.hpp"

using namespace multconf;
using namespace multconf::testing;

TEST_CASE("a structure document round-trips") {
    Document d = to_document(segment());
    std::string text = serialize_document(d);
    Document back = parse_document(text);
    CHECK(serialize_document(back) == text);
    CHECK(structure_from_document(back) == segment());
}

TEST_CASE("serialization is a projection: serialize . parse . serialize = serialize") {
    for (const Document& d : {to_document(ht_config(3)), to_document(multiply_dual(6, segment())),
                              to_document(layer_covering(multiply_dual(6, segment())))}) {
        std::string once = serialize_document(d);
        std::string twice = serialize_document(parse_document(once));
        CHECK(once == twice);
    }
}

TEST_CASE("duplicate ids are rejected by name") {
    std::string text = R"({"version":1,"kind":"structure","payload":
        {"name":"bad","points":["a","a"],"lines":[]}})";
    try {
        structure_from_document(parse_document(text));
        FAIL("expected a FormatError");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("a") != std::string::npos);
    }
}

TEST_CASE("a flag referencing an unknown point is a format error") {
    std::string text = R"({"version":1,"kind":"structure","payload":
        {"name":"bad","points":["a"],"lines":[{"id":"c","points":["a","zz"]}]}})";
    CHECK_THROWS_AS(structure_from_document(parse_document(text)), FormatError);
}

TEST_CASE("version and kind are validated") {
    CHECK_THROWS_AS(parse_document(R"({"version":2,"kind":"structure","payload":{}})"),
                    FormatError);
    CHECK_THROWS_AS(parse_document(R"({"version":1,"kind":"banana","payload":{}})"),
                    FormatError);
    CHECK_THROWS_AS(parse_document("not json at all"), FormatError);
}

TEST_CASE("golden file: the multiplied segment re-serializes byte-identically") {
    std::string golden = slurp(std::string(MULTCONF_GOLDEN_DIR) + "/mdual6segment.json");
    CHECK(serialize_document(to_document(multiply_dual(6, segment()))) == golden);
    CHECK(serialize_document(parse_document(golden)) == golden);
}

TEST_CASE("layer metadata round-trips") {
    Layered m = multiply_dual(4, ht_config(3));
    Layered back = layered_from_document(parse_document(serialize_document(to_document(m))));
    CHECK(back.structure == m.structure);
    CHECK(back.cycle == m.cycle);
    for (const auto& [id, tag] : m.tags) {
        CHECK(back.tag(id).layer == tag.layer);
        CHECK(back.tag(id).origin == tag.origin);
    }
}

TEST_CASE("a plain structure document has no layers") {
    Layered plain = layered_from_document(parse_document(serialize_document(to_document(segment()))));
    CHECK(plain.cycle == 0);
    CHECK(plain.tags.empty());
}

TEST_CASE("coverings and maps round-trip") {
    Layered m = multiply_dual(6, segment());
    Covering c = layer_covering(m);
    Covering cback = covering_from_document(parse_document(serialize_document(to_document(c))));
    REQUIRE(cback.blocks.size() == c.blocks.size());
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
        CHECK(cback.blocks[i].points == c.blocks[i].points);
        CHECK(cback.blocks[i].lines == c.blocks[i].lines);
    }

    StructureMap k = builtin_correlation(m);
    Document kd = to_document(k);
    StructureMap kback = map_from_document(kd, m.structure, m.structure);
    CHECK(kback.kind() == MapKind::Correlation);
    CHECK(check_map(kback));
    for (const Id& p : m.structure.points())
        CHECK(kback.map_point(p) == k.map_point(p));
}

TEST_CASE("tack relations round-trip") {
    Layered m = multiply_dual(6, segment());
    TackRelation t = canonical_tack(m);
    TackRelation back = tack_from_document(parse_document(serialize_document(to_document(t))));
    CHECK(back == t);
}

TEST_CASE("DOT export shapes and counts") {
    std::string seg = export_levi_dot(segment());
    CHECK(seg.find("\"a\" [shape=circle];") != std::string::npos);
    CHECK(seg.find("\"c\" [shape=square];") != std::string::npos);

    auto count = [](const std::string& text, const std::string& needle) {
        std::size_t n = 0, at = 0;
        while ((at = text.find(needle, at)) != std::string::npos) {
            ++n;
            at += needle.size();
        }
        return n;
    };
    CHECK(count(seg, "shape=") == 3);
    CHECK(count(seg, " -- ") == 2);

    Layered m = multiply_dual(6, segment());
    std::string dot = export_levi_dot(m.structure);
    CHECK(count(dot, "shape=") == 18);
    CHECK(count(dot, " -- ") == m.structure.flag_count());

    IncidenceStructure f = projective_plane(2);
    std::string fdot = export_levi_dot(f);
    CHECK(count(fdot, "shape=") == 14);
    CHECK(count(fdot, " -- ") == 21);
}

TEST_CASE("DOT export is deterministic") {
    CHECK(export_levi_dot(ht_config(3)) == export_levi_dot(ht_config(3)));
}
