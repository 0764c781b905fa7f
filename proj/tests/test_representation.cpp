#include <doctest.h>

#include "fixtures.hpp"
#include "multconf/representation.hpp"

using namespace multconf;
using namespace multconf::testing;

namespace {

StructureMap fano_polarity() {
    auto c = find_involutive_correlation(projective_plane(2));
    REQUIRE(c.has_value());
    return *c;
}

// Coordinate rotation of PG(2,2); a fixed nontrivial collineation.
StructureMap fano_rotation() {
    IncidenceStructure f = projective_plane(2);
    auto permute = [](const Id& id) {
        std::string inner = id.substr(1, id.size() - 2);
        std::array<std::string, 3> part;
        std::size_t from = 0;
        for (int i = 0; i < 3; ++i) {
            std::size_t colon = inner.find(':', from);
            part[i] = inner.substr(from, colon == std::string::npos ? colon : colon - from);
            from = colon + 1;
        }
        return id.front() + part[1] + ":" + part[2] + ":" + part[0] + id.back();
    };
    StructureMap g(MapKind::Isomorphism, false, f, f);
    for (const Id& p : f.points())
        g.set_point_image(p, permute(p));
    for (const Id& l : f.lines())
        g.set_line_image(l, permute(l));
    REQUIRE(check_map(g));
    return g;
}

// The shear x -> x, y -> x+y, z -> z of PG(2,2); lines transform by the
// inverse transpose so that incidence is preserved.
StructureMap fano_shear() {
    IncidenceStructure f = projective_plane(2);
    auto split = [](const Id& id) {
        std::string inner = id.substr(1, id.size() - 2);
        std::array<int, 3> v{};
        std::size_t from = 0;
        for (int i = 0; i < 3; ++i) {
            std::size_t colon = inner.find(':', from);
            v[i] = inner[from] - '0';
            from = colon + 1;
        }
        return v;
    };
    auto join = [](char open, char close, const std::array<int, 3>& v) {
        std::string s(1, open);
        s += std::to_string(v[0]) + ":" + std::to_string(v[1]) + ":" + std::to_string(v[2]);
        return s + close;
    };
    StructureMap g(MapKind::Isomorphism, false, f, f);
    for (const Id& p : f.points()) {
        auto v = split(p);
        g.set_point_image(p, join('(', ')', {v[0], v[0] ^ v[1], v[2]}));
    }
    for (const Id& l : f.lines()) {
        auto v = split(l);
        g.set_line_image(l, join('[', ']', {v[0] ^ v[1], v[1], v[2]}));
    }
    REQUIRE(check_map(g));
    return g;
}

// The identity-renaming correlation of a structure onto its dual.
StructureMap renaming_correlation(const IncidenceStructure& s, const IncidenceStructure& d) {
    StructureMap f(MapKind::Correlation, true, s, d);
    for (const Id& p : s.points())
        f.set_point_image(p, p);
    for (const Id& l : s.lines())
        f.set_line_image(l, l);
    REQUIRE(check_map(f));
    return f;
}

}  // namespace

TEST_CASE("rebuild from a blind rank covering of the multiplied segment") {
    Layered m = multiply_dual(6, segment());
    Covering c = covering_from_tack(m.structure, tack_rank(m.structure));
    RebuildResult res = rebuild(m.structure, c);
    CHECK(res.verdict);
    CHECK(check_map(res.delta));
    CHECK(res.rebuilt.structure.points().size() == 9);
}

TEST_CASE("rebuild the correlative multiply from its layer covering") {
    StructureMap pol = fano_polarity();
    Layered m = multiply_correlative(3, pol, pol.source());
    RebuildResult res = rebuild(m.structure, layer_covering(m));
    CHECK(res.verdict);
    CHECK(find_isomorphism(m.structure, res.rebuilt.structure).has_value());
}

TEST_CASE("rebuild a glue of plane copies with differing correlations") {
    StructureMap pol = fano_polarity();
    StructureMap rot = fano_rotation();
    StructureMap twisted = compose(pol, rot);
    StructureMap twisted2 = compose(pol, compose(rot, rot));
    GlueSpec spec{{pol.source(), pol.source(), pol.source()}, {pol, twisted, twisted2}};
    Layered g = glue(spec);
    RebuildResult res = rebuild(g.structure, layer_covering(g));
    CHECK(res.verdict);
}

TEST_CASE("rebuild refuses a covering that fails the conditions") {
    Layered m = multiply_dual(6, segment());
    Covering c = layer_covering(m);
    c.blocks[0].points.push_back(c.blocks[1].points.front());
    CHECK_THROWS_AS(rebuild(m.structure, c), FalsifiedError);
}

TEST_CASE("self-duality of a glued plane cycle") {
    StructureMap pol = fano_polarity();
    IncidenceStructure f = pol.source();
    GlueSpec spec{{f, f, f, f}, {pol, pol, pol, pol}};
    std::vector<StructureMap> xis{pol, pol, pol, pol};
    StructureMap kappa = glue_selfdual_correlation(spec, xis);
    CHECK(check_map(kappa));
    CHECK(kappa.kind() == MapKind::Correlation);
}

TEST_CASE("a perturbed family fails the compatibility equation with its index") {
    StructureMap pol = fano_polarity();
    IncidenceStructure f = pol.source();
    GlueSpec spec{{f, f, f, f}, {pol, pol, pol, pol}};
    StructureMap twisted = compose(pol, fano_rotation());
    std::vector<StructureMap> xis{pol, twisted, pol, twisted};
    CHECK_THROWS_AS(glue_selfdual_correlation(spec, xis), FalsifiedError);
}

TEST_CASE("the dualisation multiply self-duality is the glued special case") {
    IncidenceStructure f = projective_plane(2);
    IncidenceStructure fd = dual(f);
    StructureMap fwd = renaming_correlation(f, fd);
    StructureMap bwd = renaming_correlation(fd, f);
    GlueSpec spec{{f, fd, f, fd}, {fwd, bwd, fwd, bwd}};
    Layered g = glue(spec);

    Layered m = multiply_dual(4, f);
    REQUIRE(g.structure == m.structure);

    StructureMap pol = fano_polarity();
    // xi_1 and xi_3 act on the dual copy; the polarity reads transposed.
    StructureMap pold(MapKind::Correlation, true, fd, fd);
    for (const auto& [l, img] : pol.line_part())
        pold.set_point_image(l, img);
    for (const auto& [p, img] : pol.point_part())
        pold.set_line_image(p, img);
    REQUIRE(check_map(pold));
    std::vector<StructureMap> xis{pol, pold, pol, pold};

    StructureMap kappa = glue_selfdual_correlation(spec, xis);
    StructureMap builtin = builtin_correlation(m);
    CHECK(check_map(kappa));
    CHECK(check_map(builtin));
    // The two self-dualities differ by an automorphism of the structure.
    StructureMap difference = compose(inverse(builtin), kappa);
    CHECK(difference.kind() == MapKind::Isomorphism);
    CHECK(check_map(difference));
}

TEST_CASE("even collapse onto the dualisation multiply") {
    StructureMap pol = fano_polarity();
    IncidenceStructure f = pol.source();

    SUBCASE("involutive polarity cycle") {
        GlueSpec spec{{f, f, f, f}, {pol, pol, pol, pol}};
        IsoWitness w = collapse_even(spec);
        CHECK(check_map(w.map));
        // Layer zero stays put.
        for (const Id& p : f.points())
            CHECK(w.map.map_point(layered_point_id(0, p)) == layered_point_id(0, p));
    }

    SUBCASE("twisted pair cycle") {
        StructureMap twisted = compose(pol, fano_rotation());
        StructureMap back = inverse(twisted);
        GlueSpec spec{{f, f, f, f}, {twisted, back, twisted, back}};
        IsoWitness w = collapse_even(spec);
        CHECK(check_map(w.map));
    }

    SUBCASE("segment cycle against the dualisation multiply") {
        IncidenceStructure s = segment();
        IncidenceStructure sd = dual(s);
        StructureMap fwd = renaming_correlation(s, sd);
        StructureMap bwd = renaming_correlation(sd, s);
        GlueSpec spec{{s, sd, s, sd}, {fwd, bwd, fwd, bwd}};
        IsoWitness w = collapse_even(spec);
        CHECK(check_map(w.map));
        CHECK(w.target.structure == multiply_dual(4, s).structure);
    }

    SUBCASE("a cycle that does not compose to the identity is rejected") {
        StructureMap twisted = compose(pol, fano_rotation());
        GlueSpec spec{{f, f, f, f}, {pol, pol, pol, twisted}};
        CHECK_THROWS_AS(collapse_even(spec), FalsifiedError);
    }
}

TEST_CASE("odd collapse onto the correlative multiply") {
    StructureMap pol = fano_polarity();
    IncidenceStructure f = pol.source();

    SUBCASE("constant polarity cycle") {
        GlueSpec spec{{f, f, f}, {pol, pol, pol}};
        IsoWitness w = collapse_odd(spec);
        CHECK(check_map(w.map));
        for (const Id& p : f.points())
            CHECK(w.map.map_point(layered_point_id(0, p)) == layered_point_id(0, p));
    }

    SUBCASE("mixed cycle with an involutive composite") {
        // Conjugating by a shear (not orthogonal for the standard form)
        // yields an involutive polarity distinct from the original.
        StructureMap shear = fano_shear();
        StructureMap conj = compose(inverse(shear), compose(pol, shear));
        REQUIRE(check_map(conj));
        REQUIRE(is_involutive(conj));
        bool differs = false;
        for (const Id& p : f.points())
            if (conj.map_point(p) != pol.map_point(p))
                differs = true;
        REQUIRE(differs);
        GlueSpec spec{{f, f, f}, {pol, conj, pol}};
        IsoWitness w = collapse_odd(spec);
        CHECK(check_map(w.map));
    }

    SUBCASE("a non-involutive composite is rejected") {
        StructureMap twisted = compose(pol, fano_rotation());
        REQUIRE_FALSE(is_involutive(twisted));
        GlueSpec spec{{f, f, f}, {twisted, pol, pol}};
        if (!is_involutive(compose(pol, compose(pol, twisted)))) {
            CHECK_THROWS_AS(collapse_odd(spec), FalsifiedError);
        }
    }
}

TEST_CASE("proof maps and the generic search agree") {
    Layered m = multiply_dual(6, segment());
    Covering c = covering_from_tack(m.structure, tack_rank(m.structure));
    RebuildResult res = rebuild(m.structure, c);
    REQUIRE(res.verdict);
    CHECK(find_isomorphism(m.structure, res.rebuilt.structure).has_value());
}
