#include "multconf/multiply.hpp"

namespace multconf {

const LayerTag& Layered::tag(const Id& x) const {
    auto it = tags.find(x);
    if (it == tags.end())
        throw std::invalid_argument("no layer metadata for element " + x);
    return it->second;
}

Id layered_point_id(int layer, const Id& origin) {
    return "(" + std::to_string(layer) + "," + origin + ")";
}

Id layered_line_id(int layer, const Id& origin) {
    return "[" + std::to_string(layer) + "," + origin + "]";
}

namespace {
int mod(int a, int k) {
    return ((a % k) + k) % k;
}
}  // namespace

Layered multiply_correlative(int k, const StructureMap& kappa0, const IncidenceStructure& m0) {
    if (k <= 2)
        throw std::invalid_argument("multiply_correlative requires k > 2");
    if (kappa0.kind() != MapKind::Correlation || !(kappa0.source() == m0) ||
        !(kappa0.target() == m0) || !check_map(kappa0))
        throw std::invalid_argument("multiply_correlative requires a self-correlation of the base");

    Layered out;
    out.cycle = k;
    out.structure.set_name("mcor(" + std::to_string(k) + "," + m0.name() + ")");
    for (int i = 0; i < k; ++i)
        for (const Id& a : m0.points()) {
            Id id = layered_point_id(i, a);
            out.structure.add_point(id);
            out.tags[id] = {i, a};
        }
    for (int i = 0; i < k; ++i)
        for (const Id& l : m0.lines()) {
            Id id = layered_line_id(i, l);
            out.structure.add_line(id);
            out.tags[id] = {i, l};
        }
    for (int j = 0; j < k; ++j)
        for (const Id& l : m0.lines()) {
            Id line = layered_line_id(j, l);
            for (const Id& a : m0.row(l))
                out.structure.add_flag(layered_point_id(j, a), line);
            out.structure.add_flag(layered_point_id(mod(j + 1, k), kappa0.map_line(l)), line);
        }
    return out;
}

Layered multiply_dual(int k, const IncidenceStructure& m0) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("multiply_dual requires an even k >= 4");

    Layered out;
    out.cycle = k;
    out.structure.set_name("mdual(" + std::to_string(k) + "," + m0.name() + ")");
    auto layer_points = [&](int i) -> const std::vector<Id>& {
        return i % 2 == 0 ? m0.points() : m0.lines();
    };
    auto layer_lines = [&](int i) -> const std::vector<Id>& {
        return i % 2 == 0 ? m0.lines() : m0.points();
    };
    for (int i = 0; i < k; ++i)
        for (const Id& a : layer_points(i)) {
            Id id = layered_point_id(i, a);
            out.structure.add_point(id);
            out.tags[id] = {i, a};
        }
    for (int i = 0; i < k; ++i)
        for (const Id& b : layer_lines(i)) {
            Id id = layered_line_id(i, b);
            out.structure.add_line(id);
            out.tags[id] = {i, b};
        }
    for (int j = 0; j < k; ++j) {
        for (const Id& b : layer_lines(j)) {
            Id line = layered_line_id(j, b);
            // Inherited flags: on even layers b is a line of the base, on
            // odd layers b is a base point and the roles flip.
            if (j % 2 == 0) {
                for (const Id& a : m0.row(b))
                    out.structure.add_flag(layered_point_id(j, a), line);
            } else {
                for (const Id& a : m0.pencil(b))
                    out.structure.add_flag(layered_point_id(j, a), line);
            }
            // The extra point (j+1, b).
            out.structure.add_flag(layered_point_id(mod(j + 1, k), b), line);
        }
    }
    return out;
}

StructureMap builtin_correlation(const Layered& s) {
    if (s.cycle == 0)
        throw std::invalid_argument("builtin_correlation needs construction coordinates");
    StructureMap f(MapKind::Correlation, true, s.structure, s.structure);
    for (const Id& p : s.structure.points()) {
        const LayerTag& t = s.tag(p);
        f.set_point_image(p, layered_line_id(mod(1 - t.layer, s.cycle), t.origin));
    }
    for (const Id& l : s.structure.lines()) {
        const LayerTag& t = s.tag(l);
        f.set_line_image(l, layered_point_id(mod(1 - t.layer, s.cycle), t.origin));
    }
    return f;
}

IsoWitness shift_iso(const Layered& s, const IncidenceStructure& m0) {
    IsoWitness w{multiply_dual(s.cycle, dual(m0)), {}};
    StructureMap f(MapKind::Isomorphism, false, s.structure, w.target.structure);
    for (const Id& p : s.structure.points()) {
        const LayerTag& t = s.tag(p);
        f.set_point_image(p, layered_point_id(mod(t.layer + 1, s.cycle), t.origin));
    }
    for (const Id& l : s.structure.lines()) {
        const LayerTag& t = s.tag(l);
        f.set_line_image(l, layered_line_id(mod(t.layer + 1, s.cycle), t.origin));
    }
    w.map = std::move(f);
    return w;
}

IsoWitness parity_iso(const Layered& s, const StructureMap& kappa0) {
    if (s.cycle % 2 != 0)
        throw std::invalid_argument("parity_iso requires an even cycle");
    if (!is_involutive(kappa0))
        throw std::invalid_argument("parity_iso requires an involutive correlation");
    const IncidenceStructure& m0 = kappa0.source();
    IsoWitness w{multiply_correlative(s.cycle, kappa0, m0), {}};
    StructureMap f(MapKind::Isomorphism, false, s.structure, w.target.structure);
    for (const Id& p : s.structure.points()) {
        const LayerTag& t = s.tag(p);
        // Odd layers carry base lines; kappa0 turns them back into points.
        Id origin = t.layer % 2 == 0 ? t.origin : kappa0.map_line(t.origin);
        f.set_point_image(p, layered_point_id(t.layer, origin));
    }
    for (const Id& l : s.structure.lines()) {
        const LayerTag& t = s.tag(l);
        Id origin = t.layer % 2 == 0 ? t.origin : kappa0.map_point(t.origin);
        f.set_line_image(l, layered_line_id(t.layer, origin));
    }
    w.map = std::move(f);
    return w;
}

void validate_glue_spec(const GlueSpec& spec) {
    int k = spec.k();
    if (k < 2)
        throw std::invalid_argument("glue requires at least two structures");
    if (static_cast<int>(spec.correlations.size()) != k)
        throw std::invalid_argument("glue requires one correlation per structure");
    for (int i = 0; i < k; ++i) {
        const StructureMap& phi = spec.correlations[i];
        if (phi.kind() != MapKind::Correlation)
            throw std::invalid_argument("glue correlation " + std::to_string(i) +
                                        " has the wrong kind");
        if (!(phi.source() == spec.structures[i]) ||
            !(phi.target() == spec.structures[(i + 1) % k]))
            throw std::invalid_argument("glue correlation " + std::to_string(i) +
                                        " breaks the chain");
        if (auto why = check_map_witness(phi))
            throw FalsifiedError("glue correlation " + std::to_string(i) +
                                 " is not a correlation: " + *why);
        if (!is_connected(spec.structures[i]))
            throw std::invalid_argument("glue structure " + std::to_string(i) +
                                        " is not connected");
    }
}

Layered glue(const GlueSpec& spec) {
    validate_glue_spec(spec);
    int k = spec.k();
    Layered out;
    out.cycle = k;
    out.structure.set_name("glue(" + std::to_string(k) + ")");
    for (int i = 0; i < k; ++i)
        for (const Id& a : spec.structures[i].points()) {
            Id id = layered_point_id(i, a);
            out.structure.add_point(id);
            out.tags[id] = {i, a};
        }
    for (int i = 0; i < k; ++i)
        for (const Id& m : spec.structures[i].lines()) {
            Id id = layered_line_id(i, m);
            out.structure.add_line(id);
            out.tags[id] = {i, m};
        }
    for (int j = 0; j < k; ++j)
        for (const Id& m : spec.structures[j].lines()) {
            Id line = layered_line_id(j, m);
            for (const Id& a : spec.structures[j].row(m))
                out.structure.add_flag(layered_point_id(j, a), line);
            out.structure.add_flag(
                layered_point_id(mod(j + 1, k), spec.correlations[j].map_line(m)), line);
        }
    return out;
}

StructureMap canonical_embedding(const Layered& s, int layer, const IncidenceStructure& m0) {
    if (layer < 0 || layer >= s.cycle)
        throw std::invalid_argument("canonical_embedding: layer out of range");
    bool odd = layer % 2 != 0;
    StructureMap f(MapKind::Embedding, odd, m0, s.structure);
    for (const Id& a : m0.points())
        f.set_point_image(a, odd ? layered_line_id(layer, a) : layered_point_id(layer, a));
    for (const Id& l : m0.lines())
        f.set_line_image(l, odd ? layered_point_id(layer, l) : layered_line_id(layer, l));
    return f;
}

}  // namespace multconf
