#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "multconf/common.hpp"

namespace multconf {

// A finite incidence structure: disjoint ordered sets of points and lines
// and a set of flags (incident point-line pairs). Iteration order over
// points and lines is insertion order; all operations are deterministic.
// Immutable by convention once built (every algorithm takes const&).
class IncidenceStructure {
public:
    IncidenceStructure() = default;

    void set_name(std::string name) { name_ = std::move(name); }
    const std::string& name() const { return name_; }

    void add_point(const Id& p);
    void add_line(const Id& l);
    void add_flag(const Id& p, const Id& l);  // idempotent

    bool has_point(const Id& p) const { return point_index_.count(p) != 0; }
    bool has_line(const Id& l) const { return line_index_.count(l) != 0; }
    bool has_element(const Id& x) const { return has_point(x) || has_line(x); }
    bool incident(const Id& p, const Id& l) const;

    const std::vector<Id>& points() const { return points_; }
    const std::vector<Id>& lines() const { return lines_; }

    // Lines through a point / points on a line, in flag insertion order.
    const std::vector<Id>& pencil(const Id& p) const;
    const std::vector<Id>& row(const Id& l) const;

    std::size_t point_index(const Id& p) const;
    std::size_t line_index(const Id& l) const;

    std::size_t flag_count() const { return flag_count_; }
    // All flags in line-major order (line insertion order, then row order).
    std::vector<std::pair<Id, Id>> flags() const;

    // Structural equality: same point and line sequences, same flag set.
    // Names are not compared.
    bool operator==(const IncidenceStructure& other) const;
    bool operator!=(const IncidenceStructure& other) const { return !(*this == other); }

private:
    std::string name_;
    std::vector<Id> points_, lines_;
    std::unordered_map<Id, std::size_t> point_index_, line_index_;
    std::vector<std::vector<Id>> pencils_;  // per point
    std::vector<std::vector<Id>> rows_;     // per line
    std::unordered_set<std::uint64_t> flag_keys_;
    std::size_t flag_count_ = 0;
};

// Convenience constructor from a line list; each line's point list defines
// its flags (the interchange-format shape).
IncidenceStructure make_structure(const std::string& name,
                                  const std::vector<Id>& points,
                                  const std::vector<std::pair<Id, std::vector<Id>>>& lines);

struct PlsReport {
    bool is_uniqueness = false;   // two distinct points share at most one line
    bool every_line_ge2 = false;  // every line carries at least two points
    bool every_point_ge2 = false; // every point lies on at least two lines
    bool is_pls() const { return is_uniqueness && every_line_ge2 && every_point_ge2; }
};

// Exhaustive partial-linear-space check. Never fails; it reports.
PlsReport validate(const IncidenceStructure& s);

// Points and lines swap roles, flags transposed, identifiers preserved.
IncidenceStructure dual(const IncidenceStructure& s);

// Degree of a point or size of a line.
std::size_t rank(const IncidenceStructure& s, const Id& x);

// True iff some line carries both a and b. collinear(a,a) is true iff a
// lies on some line.
bool collinear(const IncidenceStructure& s, const Id& a, const Id& b);

// The unique common point of two distinct lines, or nullopt if they are
// disjoint. Throws FalsifiedError if they share two or more points.
std::optional<Id> line_meet(const IncidenceStructure& s, const Id& k, const Id& m);

// Connected components of the bipartite flag graph, as lists of element
// ids (points and lines mixed), deterministic order.
std::vector<std::vector<Id>> connected_components(const IncidenceStructure& s);
bool is_connected(const IncidenceStructure& s);

// The substructure on all points q != p collinear with p, keeping the
// lines of s that carry at least two such points, flags restricted.
IncidenceStructure neighborhood(const IncidenceStructure& s, const Id& p);

// For every triangle (a,b,c) and every point d on the side through a,b,
// c is collinear with d. Triangles are non-degenerate: pairwise distinct,
// pairwise collinear, not all on one line. Requires uniqueness.
bool is_shultenian(const IncidenceStructure& s);

}  // namespace multconf
