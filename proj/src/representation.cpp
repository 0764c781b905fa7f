#include "multconf/representation.hpp"

namespace multconf {

namespace {
int mod(int a, int k) {
    return ((a % k) + k) % k;
}

// alpha_i = phi_0^-1 ... phi_{i-1}^-1 (rightmost applied first), index 0
// giving the identity of the first structure.
std::vector<StructureMap> inverse_chain(const GlueSpec& spec) {
    std::vector<StructureMap> alpha;
    alpha.push_back(identity_map(spec.structures[0]));
    for (int i = 1; i < spec.k(); ++i)
        alpha.push_back(compose(alpha.back(), inverse(spec.correlations[i - 1])));
    return alpha;
}
}  // namespace

RebuildResult rebuild(const IncidenceStructure& host, const Covering& c) {
    ConditionReport rep = check_conditions(host, c);
    if (!rep.all_pass()) {
        for (std::size_t i = 0; i < rep.pass.size(); ++i)
            if (!rep.pass[i])
                throw FalsifiedError("condition (" + std::to_string(i + 1) +
                                     ") fails: " + rep.witness[i].value_or(""));
    }

    RhoStructure r = rho(host, c);
    Covering normal;
    normal.blocks.resize(c.blocks.size());
    for (std::size_t i = 0; i < c.blocks.size(); ++i)
        normal.blocks[r.relabel[i]] = c.blocks[i];

    std::vector<StructureMap> phis = build_correlations(host, normal);

    GlueSpec spec;
    for (const Substructure& b : normal.blocks)
        spec.structures.push_back(extract(host, b));
    spec.correlations = phis;

    RebuildResult out;
    out.correlations = std::move(phis);
    out.rebuilt = glue(spec);

    StructureMap delta(MapKind::Isomorphism, false, host, out.rebuilt.structure);
    for (std::size_t i = 0; i < normal.blocks.size(); ++i) {
        for (const Id& a : normal.blocks[i].points)
            delta.set_point_image(a, layered_point_id(static_cast<int>(i), a));
        for (const Id& l : normal.blocks[i].lines)
            delta.set_line_image(l, layered_line_id(static_cast<int>(i), l));
    }
    out.witness = check_map_witness(delta);
    out.verdict = !out.witness.has_value();
    out.delta = std::move(delta);
    return out;
}

StructureMap glue_selfdual_correlation(const GlueSpec& spec,
                                       const std::vector<StructureMap>& xis) {
    validate_glue_spec(spec);
    int k = spec.k();
    if (static_cast<int>(xis.size()) != k)
        throw std::invalid_argument("one xi per cycle index required");
    for (int i = 0; i < k; ++i) {
        const StructureMap& xi = xis[i];
        if (xi.kind() != MapKind::Correlation || !(xi.source() == spec.structures[i]) ||
            !(xi.target() == spec.structures[mod(-i, k)]))
            throw std::invalid_argument("xi_" + std::to_string(i) +
                                        " is not a correlation onto the opposite block");
        if (!check_map(xi))
            throw FalsifiedError("xi_" + std::to_string(i) + " fails verification");
    }

    // Compatibility, evaluated on every line of m_{i-1}.
    for (int i = 0; i < k; ++i) {
        const StructureMap& phi_prev = spec.correlations[mod(i - 1, k)];
        const StructureMap& phi_opp = spec.correlations[mod(-i, k)];
        const StructureMap& xi_prev = xis[mod(i - 1, k)];
        for (const Id& m : spec.structures[mod(i - 1, k)].lines()) {
            Id lhs = phi_opp.map_line(xis[i].map_point(phi_prev.map_line(m)));
            if (lhs != xi_prev.map_line(m))
                throw FalsifiedError("self-duality compatibility fails at i=" +
                                     std::to_string(i) + " on line " + m);
        }
    }

    Layered glued = glue(spec);
    StructureMap kappa(MapKind::Correlation, true, glued.structure, glued.structure);
    for (const Id& p : glued.structure.points()) {
        const LayerTag& t = glued.tag(p);
        kappa.set_point_image(p, layered_line_id(mod(-t.layer, k), xis[t.layer].map_point(t.origin)));
    }
    for (const Id& l : glued.structure.lines()) {
        const LayerTag& t = glued.tag(l);
        kappa.set_line_image(l, layered_point_id(mod(-t.layer, k), xis[t.layer].map_line(t.origin)));
    }
    if (auto why = check_map_witness(kappa))
        throw FalsifiedError("assembled self-duality fails verification: " + *why);
    return kappa;
}

IsoWitness collapse_even(const GlueSpec& spec) {
    validate_glue_spec(spec);
    int k = spec.k();
    if (k % 2 != 0)
        throw std::invalid_argument("collapse_even requires an even cycle");

    StructureMap total = spec.correlations[0];
    for (int i = 1; i < k; ++i)
        total = compose(spec.correlations[i], total);
    for (const Id& p : spec.structures[0].points())
        if (total.map_point(p) != p)
            throw FalsifiedError("correlation cycle does not compose to the identity at point " +
                                 p);
    for (const Id& l : spec.structures[0].lines())
        if (total.map_line(l) != l)
            throw FalsifiedError("correlation cycle does not compose to the identity at line " +
                                 l);

    Layered source = glue(spec);
    std::vector<StructureMap> alpha = inverse_chain(spec);

    IsoWitness w{multiply_dual(k, spec.structures[0]), {}};
    StructureMap sigma(MapKind::Isomorphism, false, source.structure, w.target.structure);
    for (const Id& p : source.structure.points()) {
        const LayerTag& t = source.tag(p);
        sigma.set_point_image(p, layered_point_id(t.layer, alpha[t.layer].map_point(t.origin)));
    }
    for (const Id& l : source.structure.lines()) {
        const LayerTag& t = source.tag(l);
        sigma.set_line_image(l, layered_line_id(t.layer, alpha[t.layer].map_line(t.origin)));
    }
    if (auto why = check_map_witness(sigma))
        throw FalsifiedError("collapse map fails verification: " + *why);
    w.map = std::move(sigma);
    return w;
}

IsoWitness collapse_odd(const GlueSpec& spec) {
    validate_glue_spec(spec);
    int k = spec.k();
    if (k % 2 == 0)
        throw std::invalid_argument("collapse_odd requires an odd cycle");

    StructureMap kappa = spec.correlations[0];
    for (int i = 1; i < k; ++i)
        kappa = compose(spec.correlations[i], kappa);
    if (!is_involutive(kappa))
        throw FalsifiedError("correlation cycle composite is not involutive");

    Layered source = glue(spec);
    std::vector<StructureMap> alpha = inverse_chain(spec);
    // beta_i = phi_{k-1} ... phi_i, ending back at the first structure.
    std::vector<StructureMap> beta(k, identity_map(spec.structures[0]));
    beta[k - 1] = spec.correlations[k - 1];
    for (int i = k - 2; i >= 0; --i)
        beta[i] = compose(beta[i + 1], spec.correlations[i]);

    IsoWitness w{multiply_correlative(k, kappa, spec.structures[0]), {}};
    StructureMap delta(MapKind::Isomorphism, false, source.structure, w.target.structure);
    for (const Id& p : source.structure.points()) {
        const LayerTag& t = source.tag(p);
        const StructureMap& route = t.layer % 2 == 0 ? alpha[t.layer] : beta[t.layer];
        delta.set_point_image(p, layered_point_id(t.layer, route.map_point(t.origin)));
    }
    for (const Id& l : source.structure.lines()) {
        const LayerTag& t = source.tag(l);
        const StructureMap& route = t.layer % 2 == 0 ? alpha[t.layer] : beta[t.layer];
        delta.set_line_image(l, layered_line_id(t.layer, route.map_line(t.origin)));
    }
    if (auto why = check_map_witness(delta))
        throw FalsifiedError("collapse map fails verification: " + *why);
    w.map = std::move(delta);
    return w;
}

}  // namespace multconf
