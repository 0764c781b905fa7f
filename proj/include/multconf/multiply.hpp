#pragma once

#include <unordered_map>
#include <vector>

#include "multconf/morphisms.hpp"

namespace multconf {

// Construction coordinates: which cyclic layer an element came from and
// its id in its layer of origin. Optional metadata; stripping it leaves a
// plain structure for blind-recovery runs.
struct LayerTag {
    int layer = 0;
    Id origin;
    bool operator==(const LayerTag& o) const { return layer == o.layer && origin == o.origin; }
};

struct Layered {
    IncidenceStructure structure;
    int cycle = 0;
    std::unordered_map<Id, LayerTag> tags;  // one entry per point and per line

    const LayerTag& tag(const Id& x) const;
};

// Composite identifiers rendered textually: points "(i,a)", lines "[i,l]".
Id layered_point_id(int layer, const Id& origin);
Id layered_line_id(int layer, const Id& origin);

// Correlative multiplying: k cyclic copies of m0 chained by a self
// correlation kappa0, each line picking up one extra point from the next
// layer: (i,a) I [j,l] iff i=j and a I0 l, or i=j+1 and a = kappa0(l).
// Requires k > 2; kappa0 need not be involutive.
Layered multiply_correlative(int k, const StructureMap& kappa0, const IncidenceStructure& m0);

// Dualisation multiplying: cyclic alternation of m0 and its dual; even
// layers carry the points of m0 and the lines of m0, odd layers swap the
// roles. (i,a) I [j,b] iff i=j and the inherited incidence holds, or
// i=j+1 and a=b. Requires k even, k >= 4.
Layered multiply_dual(int k, const IncidenceStructure& m0);

// The involutive self-correlation (i,x) -> [1-i,x], [i,y] -> (1-i,y) every
// dualisation multiply carries.
StructureMap builtin_correlation(const Layered& s);

// The shift (i,a) -> (i+1,a), an isomorphism onto the dualisation multiply
// of the dual structure.
struct IsoWitness {
    Layered target;
    StructureMap map;
};
IsoWitness shift_iso(const Layered& s, const IncidenceStructure& m0);

// For k even and kappa0 an involutive self-correlation of m0: the layer
// parity map (i,x) -> (i,x) / (i,kappa0(x)) onto the correlative multiply.
IsoWitness parity_iso(const Layered& s, const StructureMap& kappa0);

// Generalized gluing: a cycle of structures joined by correlations
// phi_i : m_i -> m_{i+1}; every line [j,m] picks up the extra point
// (j+1, phi_j''(m)).
struct GlueSpec {
    std::vector<IncidenceStructure> structures;
    std::vector<StructureMap> correlations;  // correlations[i]: structures[i] -> structures[i+1 mod k]
    int k() const { return static_cast<int>(structures.size()); }
};

// Validates the spec (kinds, chain endpoints, connectivity, check_map).
void validate_glue_spec(const GlueSpec& spec);

Layered glue(const GlueSpec& spec);

// The canonical closed embedding of the base structure into layer i of a
// dualisation multiply: sort-preserving for even i, dualizing for odd i.
StructureMap canonical_embedding(const Layered& s, int layer, const IncidenceStructure& m0);

}  // namespace multconf
