#pragma once

#include <set>
#include <utility>
#include <vector>

#include "multconf/multiply.hpp"

namespace multconf {

// A point set and a line set inside a host structure.
struct Substructure {
    std::vector<Id> points;  // host insertion order
    std::vector<Id> lines;
};

// An indexed family of substructures whose union is the whole host.
struct Covering {
    std::vector<Substructure> blocks;
};

// A set of incident (point, line) pairs of the host: the extra-point
// relation or one of its definable reconstructions.
class TackRelation {
public:
    void add(const Id& p, const Id& l);
    bool contains(const Id& p, const Id& l) const;
    const std::vector<std::pair<Id, Id>>& pairs() const { return pairs_; }
    bool operator==(const TackRelation& o) const;

private:
    std::vector<std::pair<Id, Id>> pairs_;
    std::set<std::pair<Id, Id>> index_;
};

// Both closure conditions, exhaustively: two distinct inside points force
// their joining lines in, two distinct inside lines force their meeting
// points in.
bool is_closed(const IncidenceStructure& host, const Substructure& sub);

// Least closed substructure containing the seeds (fixpoint iteration).
Substructure closed_hull(const IncidenceStructure& host, const std::vector<Id>& seed_points,
                         const std::vector<Id>& seed_lines);

// The standalone structure induced on a substructure (host ids kept,
// flags restricted to inside pairs).
IncidenceStructure extract(const IncidenceStructure& host, const Substructure& sub);

// The construction-coordinate extra-point relation: the cross-layer flags
// (layer of the point = layer of the line + 1).
TackRelation canonical_tack(const Layered& s);

// The covering a construction carries: one block per layer.
Covering layer_covering(const Layered& s);

// Same-layer collinearity expressed without coordinates: p and q share a
// line that tacks neither. Reflexive pairs (p,p) appear iff p lies on some
// non-tack line. Returned as index-normalized point pairs.
std::set<std::pair<Id, Id>> baer_from_tack(const IncidenceStructure& host,
                                           const TackRelation& tack);

// The coordinate form: same layer and some common line.
std::set<std::pair<Id, Id>> baer_coordinate(const Layered& s);

// Blocks are the transitive-closure classes of the tack-free collinearity
// relation; each line joins the class holding all of its non-tack points.
// Block indices are normalized along the induced successor cycle, starting
// from the block of the first host point. Throws FalsifiedError when the
// classes fail to cover, a line straddles classes, a class is not closed,
// or the successor relation is not a single cycle.
Covering covering_from_tack(const IncidenceStructure& host, const TackRelation& tack);

// Flags whose point degree equals their line size (the rank reconstruction).
TackRelation tack_rank(const IncidenceStructure& host);

// The triangle-completion reconstruction: p tacks l iff p I l and some
// other q on l exists such that every line through q (other than l) that
// meets one line through p misses every other line through p.
TackRelation tack1(const IncidenceStructure& host);

// a is related to l iff a is off l and exactly one line through a misses l.
std::vector<std::pair<Id, Id>> corr_rel(const IncidenceStructure& host);

// The unique-missing-line reconstruction: p tacks l iff p I l and some
// point a off all lines through p satisfies corr_rel(a, l).
TackRelation tack2(const IncidenceStructure& host);

}  // namespace multconf
