#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "multconf/incidence.hpp"

namespace multconf {

enum class MapKind { Isomorphism, Correlation, Embedding };

std::string to_string(MapKind k);
MapKind map_kind_from_string(const std::string& s);

// A typed pair of maps between incidence structures.
//
//   isomorphism  - bijective, points to points and lines to lines
//   correlation  - bijective, points to lines and lines to points
//   embedding    - injective; sort-preserving unless `dualizing` is set,
//                  in which case points go to lines and lines to points
//
// A correlation with source == target is a self-duality; source and
// target may also differ.
class StructureMap {
public:
    StructureMap() = default;
    StructureMap(MapKind kind, bool dualizing, IncidenceStructure source,
                 IncidenceStructure target)
        : kind_(kind), dualizing_(dualizing), source_(std::move(source)),
          target_(std::move(target)) {
        if (kind_ == MapKind::Correlation)
            dualizing_ = true;
        if (kind_ == MapKind::Isomorphism)
            dualizing_ = false;
    }

    MapKind kind() const { return kind_; }
    bool dualizing() const { return dualizing_; }
    const IncidenceStructure& source() const { return source_; }
    const IncidenceStructure& target() const { return target_; }

    void set_point_image(const Id& src, const Id& dst) { point_part_[src] = dst; }
    void set_line_image(const Id& src, const Id& dst) { line_part_[src] = dst; }

    // Image of a source point (a target point, or a target line when
    // dualizing) and of a source line. Throw on unmapped elements.
    const Id& map_point(const Id& p) const;
    const Id& map_line(const Id& l) const;

    const std::unordered_map<Id, Id>& point_part() const { return point_part_; }
    const std::unordered_map<Id, Id>& line_part() const { return line_part_; }

    bool total() const;

private:
    MapKind kind_ = MapKind::Isomorphism;
    bool dualizing_ = false;
    IncidenceStructure source_, target_;
    std::unordered_map<Id, Id> point_part_, line_part_;
};

// Verifies a map against its declared kind: totality (precondition, throws),
// injectivity, bijectivity for isomorphism/correlation, sort correctness,
// and the flag biconditional (a I l iff the image pair is a target flag,
// transposed when dualizing).
bool check_map(const StructureMap& f);

// Like check_map but reports why it failed.
std::optional<std::string> check_map_witness(const StructureMap& f);

StructureMap identity_map(const IncidenceStructure& s);

// Deterministic isomorphism search on the bipartite flag graph: iterated
// degree/colour refinement over the disjoint union, then backtracking with
// smallest-cell-first branching and lexicographic tie-breaking. Points map
// to points, lines to lines. Returns nullopt when no isomorphism exists
// (complete at desk scale).
std::optional<StructureMap> find_isomorphism(const IncidenceStructure& s,
                                             const IncidenceStructure& t);

// find_isomorphism(s, dual(s)) repackaged as a self-correlation of s.
std::optional<StructureMap> find_correlation(const IncidenceStructure& s);

// Backtracking search for an involutive self-correlation (point part and
// line part mutually inverse). Deterministic.
std::optional<StructureMap> find_involutive_correlation(const IncidenceStructure& s);

// For a self-correlation f of s: line_part(point_part(p)) == p for all
// points and point_part(line_part(l)) == l for all lines.
bool is_involutive(const StructureMap& f);

// f after g (apply g first). Requires g.target == f.source.
// Kind arithmetic: composing bijective maps yields a correlation iff
// exactly one factor dualizes; any embedding factor makes an embedding.
StructureMap compose(const StructureMap& f, const StructureMap& g);

// Inverse of a bijective map.
StructureMap inverse(const StructureMap& f);

}  // namespace multconf
