#include <doctest.h>

#include "fixtures.hpp"
#include "multconf/covering.hpp"

using namespace multconf;
using namespace multconf::testing;

namespace {

Substructure whole(const IncidenceStructure& s) {
    return Substructure{s.points(), s.lines()};
}

void check_tack_is_matching(const IncidenceStructure& host, const TackRelation& t) {
    std::unordered_map<Id, int> pc, lc;
    for (const auto& [p, l] : t.pairs()) {
        CHECK(host.incident(p, l));
        ++pc[p];
        ++lc[l];
    }
    for (const Id& p : host.points())
        CHECK(pc[p] == 1);
    for (const Id& l : host.lines())
        CHECK(lc[l] == 1);
}

}  // namespace

TEST_CASE("the full structure is closed") {
    IncidenceStructure f = fano();
    CHECK(is_closed(f, whole(f)));
}

TEST_CASE("closedness of a line with a subset of its points") {
    Layered m = multiply_dual(4, fano());
    const Id l = m.structure.lines().front();
    const auto& row = m.structure.row(l);
    REQUIRE(row.size() >= 3);
    // Two points plus their joining line: closed exactly when no other
    // host line carries two of them, which the uniqueness condition grants.
    Substructure two{{row[0], row[1]}, {l}};
    CHECK(is_closed(m.structure, two));
    // Without the line the two points force it in.
    Substructure bare{{row[0], row[1]}, {}};
    CHECK_FALSE(is_closed(m.structure, bare));
}

TEST_CASE("closed hull basics") {
    IncidenceStructure f = fano();
    Substructure empty = closed_hull(f, {}, {});
    CHECK(empty.points.empty());
    CHECK(empty.lines.empty());

    const Id l = f.lines().front();
    const auto& row = f.row(l);
    Substructure hull = closed_hull(f, {row[0], row[1]}, {});
    CHECK(hull.lines == std::vector<Id>{l});
    CHECK(hull.points == std::vector<Id>{row[0], row[1]});
}

TEST_CASE("a layer block is its own hull") {
    Layered m = multiply_dual(6, segment());
    Covering layers = layer_covering(m);
    for (const Substructure& b : layers.blocks) {
        Substructure hull = closed_hull(m.structure, b.points, b.lines);
        CHECK(hull.points == b.points);
        CHECK(hull.lines == b.lines);
        CHECK(is_closed(m.structure, b));
    }
}

TEST_CASE("canonical tack of the multiplied segment") {
    Layered m = multiply_dual(6, segment());
    TackRelation t = canonical_tack(m);
    CHECK(t.pairs().size() == 9);
    check_tack_is_matching(m.structure, t);
    for (const auto& [p, l] : t.pairs())
        CHECK(m.tag(p).layer != m.tag(l).layer);
}

TEST_CASE("both collinearity forms agree on construction outputs") {
    for (const Layered& m : {multiply_dual(6, segment()), multiply_dual(4, fano())}) {
        auto by_tack = baer_from_tack(m.structure, canonical_tack(m));
        auto by_coords = baer_coordinate(m);
        CHECK(by_tack == by_coords);
        CHECK_FALSE(by_tack.empty());
    }
}

TEST_CASE("covering recovery returns the layers") {
    Layered m = multiply_dual(6, segment());
    Covering got = covering_from_tack(m.structure, canonical_tack(m));
    Covering want = layer_covering(m);
    REQUIRE(got.blocks.size() == want.blocks.size());
    for (std::size_t i = 0; i < got.blocks.size(); ++i) {
        CHECK(got.blocks[i].points == want.blocks[i].points);
        CHECK(got.blocks[i].lines == want.blocks[i].lines);
    }
}

TEST_CASE("covering recovery on a correlative multiply") {
    auto pol = find_involutive_correlation(fano());
    REQUIRE(pol.has_value());
    Layered m = multiply_correlative(3, *pol, pol->source());
    Covering c = covering_from_tack(m.structure, canonical_tack(m));
    REQUIRE(c.blocks.size() == 3);
    for (const Substructure& b : c.blocks) {
        CHECK(is_closed(m.structure, b));
        CHECK(find_isomorphism(extract(m.structure, b), fano()).has_value());
    }
}

TEST_CASE("covering recovery requires a connected host") {
    IncidenceStructure s = two_segments();
    TackRelation empty;
    CHECK_THROWS_AS(covering_from_tack(s, empty), FalsifiedError);
}

TEST_CASE("rank reconstruction works iff the base parameters differ") {
    Layered seg = multiply_dual(6, segment());
    CHECK(tack_rank(seg.structure) == canonical_tack(seg));

    // Equal parameters select every flag, which is not the tack relation.
    Layered fan = multiply_dual(4, fano());
    TackRelation all = tack_rank(fan.structure);
    CHECK(all.pairs().size() == fan.structure.flag_count());
    CHECK_FALSE(all == canonical_tack(fan));
}

TEST_CASE("rank reconstruction also covers the dualized segment") {
    IncidenceStructure base = dual(segment());
    Layered m = multiply_dual(6, base);
    CHECK(tack_rank(m.structure) == canonical_tack(m));
}

TEST_CASE("triangle-completion reconstruction on projective planes") {
    for (int k : {4, 6}) {
        for (int p : {2, 3}) {
            Layered m = multiply_dual(k, projective_plane(p));
            CHECK(tack1(m.structure) == canonical_tack(m));
        }
    }
}

TEST_CASE("triangle-completion relation only ever contains flags") {
    Layered m = multiply_dual(4, projective_plane(2));
    TackRelation t = tack1(m.structure);
    for (const auto& [p, l] : t.pairs())
        CHECK(m.structure.incident(p, l));
}

TEST_CASE("a plane point relates to no line in the unique-missing-line sense") {
    // Every two lines of a projective plane meet, so no point has exactly
    // one missing line.
    CHECK(corr_rel(fano()).empty());
}

TEST_CASE("unique-missing-line reconstruction on the claimed bases") {
    for (int k : {4, 6}) {
        Layered g = multiply_dual(k, grassmannian(2, 6));
        CHECK(tack2(g.structure) == canonical_tack(g));
        Layered h = multiply_dual(k, ht_config(3));
        CHECK(tack2(h.structure) == canonical_tack(h));
    }
    Layered h5 = multiply_dual(4, ht_config(5));
    CHECK(tack2(h5.structure) == canonical_tack(h5));
}

TEST_CASE("recovered blocks of glue outputs are the layers") {
    auto pol = find_involutive_correlation(fano());
    REQUIRE(pol.has_value());
    IncidenceStructure f = pol->source();
    GlueSpec spec{{f, f, f}, {*pol, *pol, *pol}};
    Layered g = glue(spec);
    Covering got = covering_from_tack(g.structure, canonical_tack(g));
    Covering want = layer_covering(g);
    REQUIRE(got.blocks.size() == want.blocks.size());
    for (std::size_t i = 0; i < got.blocks.size(); ++i) {
        CHECK(got.blocks[i].points == want.blocks[i].points);
        CHECK(got.blocks[i].lines == want.blocks[i].lines);
    }
}

TEST_CASE("an invalid tack relation is rejected with a witness") {
    Layered m = multiply_dual(4, fano());
    // All flags tacked: no tack-free lines anywhere.
    CHECK_THROWS_AS(covering_from_tack(m.structure, tack_rank(m.structure)), FalsifiedError);
}
