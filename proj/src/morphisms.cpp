#include "multconf/morphisms.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace multconf {

std::string to_string(MapKind k) {
    switch (k) {
        case MapKind::Isomorphism: return "isomorphism";
        case MapKind::Correlation: return "correlation";
        case MapKind::Embedding: return "embedding";
    }
    return "?";
}

MapKind map_kind_from_string(const std::string& s) {
    if (s == "isomorphism") return MapKind::Isomorphism;
    if (s == "correlation") return MapKind::Correlation;
    if (s == "embedding") return MapKind::Embedding;
    throw FormatError("unknown map kind: " + s);
}

const Id& StructureMap::map_point(const Id& p) const {
    auto it = point_part_.find(p);
    if (it == point_part_.end())
        throw std::invalid_argument("map is not total on point " + p);
    return it->second;
}

const Id& StructureMap::map_line(const Id& l) const {
    auto it = line_part_.find(l);
    if (it == line_part_.end())
        throw std::invalid_argument("map is not total on line " + l);
    return it->second;
}

bool StructureMap::total() const {
    for (const Id& p : source_.points())
        if (!point_part_.count(p))
            return false;
    for (const Id& l : source_.lines())
        if (!line_part_.count(l))
            return false;
    return true;
}

std::optional<std::string> check_map_witness(const StructureMap& f) {
    const auto& src = f.source();
    const auto& tgt = f.target();
    if (!f.total())
        throw std::invalid_argument("check_map: map parts are not total on the source");

    const bool dual = f.dualizing();
    auto point_image_ok = [&](const Id& img) {
        return dual ? tgt.has_line(img) : tgt.has_point(img);
    };
    auto line_image_ok = [&](const Id& img) {
        return dual ? tgt.has_point(img) : tgt.has_line(img);
    };

    std::unordered_set<Id> seen;
    for (const Id& p : src.points()) {
        const Id& img = f.map_point(p);
        if (!point_image_ok(img))
            return "point " + p + " maps to " + img + ", which is not in the expected sort";
        if (!seen.insert(img).second)
            return "point part is not injective at " + img;
    }
    seen.clear();
    for (const Id& l : src.lines()) {
        const Id& img = f.map_line(l);
        if (!line_image_ok(img))
            return "line " + l + " maps to " + img + ", which is not in the expected sort";
        if (!seen.insert(img).second)
            return "line part is not injective at " + img;
    }

    if (f.kind() != MapKind::Embedding) {
        std::size_t want_pts = dual ? tgt.lines().size() : tgt.points().size();
        std::size_t want_lns = dual ? tgt.points().size() : tgt.lines().size();
        if (src.points().size() != want_pts || src.lines().size() != want_lns)
            return "map parts are injective but not onto the target sorts";
    }

    // Flag biconditional, exhaustively over all source pairs.
    for (const Id& p : src.points()) {
        const Id& pi = f.map_point(p);
        for (const Id& l : src.lines()) {
            const Id& li = f.map_line(l);
            bool before = src.incident(p, l);
            bool after = dual ? tgt.incident(li, pi) : tgt.incident(pi, li);
            if (before != after)
                return "flag mismatch at (" + p + "," + l + ")";
        }
    }
    return std::nullopt;
}

bool check_map(const StructureMap& f) {
    return !check_map_witness(f).has_value();
}

StructureMap identity_map(const IncidenceStructure& s) {
    StructureMap f(MapKind::Isomorphism, false, s, s);
    for (const Id& p : s.points())
        f.set_point_image(p, p);
    for (const Id& l : s.lines())
        f.set_line_image(l, l);
    return f;
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

// Disjoint-union view of two structures as one bipartite graph. Vertices of
// s come first (points, then lines); t follows with the same layout.
struct SearchGraph {
    std::vector<std::vector<int>> adj;
    int s_points = 0, s_lines = 0, t_points = 0, t_lines = 0;
    int s_total() const { return s_points + s_lines; }
    int total() const { return s_total() + t_points + t_lines; }
    bool in_s(int v) const { return v < s_total(); }
};

SearchGraph build_graph(const IncidenceStructure& s, const IncidenceStructure& t) {
    SearchGraph g;
    g.s_points = static_cast<int>(s.points().size());
    g.s_lines = static_cast<int>(s.lines().size());
    g.t_points = static_cast<int>(t.points().size());
    g.t_lines = static_cast<int>(t.lines().size());
    g.adj.resize(g.total());
    auto wire = [&g](const IncidenceStructure& x, int base_p, int base_l) {
        for (std::size_t li = 0; li < x.lines().size(); ++li) {
            for (const Id& p : x.row(x.lines()[li])) {
                int pv = base_p + static_cast<int>(x.point_index(p));
                int lv = base_l + static_cast<int>(li);
                g.adj[pv].push_back(lv);
                g.adj[lv].push_back(pv);
            }
        }
    };
    wire(s, 0, g.s_points);
    wire(t, g.s_total(), g.s_total() + g.t_points);
    return g;
}

// One-dimensional colour refinement to a fixpoint. New colour ids are
// assigned by sorted signature order, so the result is deterministic.
void refine(const SearchGraph& g, std::vector<int>& colour) {
    int n = g.total();
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> sig_to_colour;
        std::vector<std::pair<int, std::vector<int>>> sigs(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> neigh;
            neigh.reserve(g.adj[v].size());
            for (int w : g.adj[v])
                neigh.push_back(colour[w]);
            std::sort(neigh.begin(), neigh.end());
            sigs[v] = {colour[v], std::move(neigh)};
            sig_to_colour.emplace(sigs[v], 0);
        }
        int next = 0;
        for (auto& [sig, c] : sig_to_colour)
            c = next++;
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            int c = sig_to_colour[sigs[v]];
            if (c != colour[v])
                changed = true;
            colour[v] = c;
        }
        if (!changed)
            return;
    }
}

// Each colour class must hold equally many s- and t-vertices.
bool balanced(const SearchGraph& g, const std::vector<int>& colour) {
    std::map<int, int> delta;
    for (int v = 0; v < g.total(); ++v)
        delta[colour[v]] += g.in_s(v) ? 1 : -1;
    for (auto& [c, d] : delta)
        if (d != 0)
            return false;
    return true;
}

bool search(const SearchGraph& g, std::vector<int> colour, std::vector<int>& out) {
    refine(g, colour);
    if (!balanced(g, colour))
        return false;

    // Locate the smallest non-singleton cell; branch on its first s-vertex.
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < g.total(); ++v)
        cells[colour[v]].push_back(v);
    int pick_colour = -1;
    std::size_t pick_size = 0;
    for (auto& [c, vs] : cells) {
        if (vs.size() > 2 && (pick_colour == -1 || vs.size() < pick_size)) {
            pick_colour = c;
            pick_size = vs.size();
        }
    }
    if (pick_colour == -1) {
        // Discrete partition: every cell is one s-vertex and one t-vertex.
        out.assign(g.s_total(), -1);
        for (auto& [c, vs] : cells) {
            int sv = g.in_s(vs[0]) ? vs[0] : vs[1];
            int tv = g.in_s(vs[0]) ? vs[1] : vs[0];
            out[sv] = tv - g.s_total();
        }
        // Verify flags; the colour classes already guarantee the sorts.
        for (int v = 0; v < g.s_total(); ++v) {
            for (int w : g.adj[v]) {
                int iv = out[v] + g.s_total();
                int iw = out[w] + g.s_total();
                if (std::find(g.adj[iv].begin(), g.adj[iv].end(), iw) == g.adj[iv].end())
                    return false;
            }
        }
        return true;
    }

    const auto& cell = cells[pick_colour];
    int sv = *std::find_if(cell.begin(), cell.end(), [&](int v) { return g.in_s(v); });
    int fresh = g.total() + 1;  // larger than any refined colour id
    for (int tv : cell) {
        if (g.in_s(tv))
            continue;
        std::vector<int> branch = colour;
        branch[sv] = fresh;
        branch[tv] = fresh;
        if (search(g, std::move(branch), out))
            return true;
    }
    return false;
}

}  // namespace

std::optional<StructureMap> find_isomorphism(const IncidenceStructure& s,
                                             const IncidenceStructure& t) {
    if (s.points().size() != t.points().size() || s.lines().size() != t.lines().size() ||
        s.flag_count() != t.flag_count())
        return std::nullopt;

    SearchGraph g = build_graph(s, t);
    std::vector<int> colour(g.total());
    for (int v = 0; v < g.total(); ++v) {
        bool is_point = g.in_s(v) ? v < g.s_points : (v - g.s_total()) < g.t_points;
        colour[v] = is_point ? 0 : 1;
    }
    std::vector<int> out;
    if (!search(g, std::move(colour), out))
        return std::nullopt;

    StructureMap f(MapKind::Isomorphism, false, s, t);
    for (int v = 0; v < g.s_points; ++v)
        f.set_point_image(s.points()[v], t.points()[out[v]]);
    for (int v = 0; v < g.s_lines; ++v)
        f.set_line_image(s.lines()[v], t.lines()[out[g.s_points + v] - g.t_points]);
    return f;
}

std::optional<StructureMap> find_correlation(const IncidenceStructure& s) {
    auto iso = find_isomorphism(s, dual(s));
    if (!iso)
        return std::nullopt;
    // Points of dual(s) are the lines of s with the same ids, so the parts
    // re-read directly as a self-correlation.
    StructureMap f(MapKind::Correlation, true, s, s);
    for (const auto& [p, img] : iso->point_part())
        f.set_point_image(p, img);
    for (const auto& [l, img] : iso->line_part())
        f.set_line_image(l, img);
    return f;
}

std::optional<StructureMap> find_involutive_correlation(const IncidenceStructure& s) {
    const auto& pts = s.points();
    const auto& lns = s.lines();
    if (pts.size() != lns.size())
        return std::nullopt;
    std::size_t n = pts.size();
    std::vector<int> to_line(n, -1);   // point index -> line index
    std::vector<int> to_point(n, -1);  // line index -> point index (the inverse)

    // Consistency of the partial assignment with the flag condition
    // a I l  =>  c_inv(l) I c(a), checked wherever both sides are decided.
    auto consistent = [&](std::size_t pi) {
        const Id& p = pts[pi];
        for (const Id& l0 : s.pencil(p)) {
            int q = to_point[s.line_index(l0)];
            if (q >= 0 && !s.incident(pts[q], lns[to_line[pi]]))
                return false;
        }
        const Id& l = lns[to_line[pi]];
        for (const Id& a : s.row(l)) {
            int la = to_line[s.point_index(a)];
            if (la >= 0 && !s.incident(p, lns[la]))
                return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> assign = [&](std::size_t pi) {
        if (pi == n)
            return true;
        for (std::size_t li = 0; li < n; ++li) {
            if (to_point[li] >= 0)
                continue;
            if (s.pencil(pts[pi]).size() != s.row(lns[li]).size())
                continue;
            to_line[pi] = static_cast<int>(li);
            to_point[li] = static_cast<int>(pi);
            if (consistent(pi) && assign(pi + 1))
                return true;
            to_line[pi] = -1;
            to_point[li] = -1;
        }
        return false;
    };
    if (!assign(0))
        return std::nullopt;

    StructureMap f(MapKind::Correlation, true, s, s);
    for (std::size_t i = 0; i < n; ++i) {
        f.set_point_image(pts[i], lns[to_line[i]]);
        f.set_line_image(lns[i], pts[to_point[i]]);
    }
    if (!check_map(f) || !is_involutive(f))
        return std::nullopt;
    return f;
}

bool is_involutive(const StructureMap& f) {
    if (f.kind() != MapKind::Correlation)
        throw std::invalid_argument("is_involutive expects a correlation");
    if (!(f.source() == f.target()))
        throw std::invalid_argument("is_involutive expects a self-correlation");
    for (const Id& p : f.source().points())
        if (f.map_line(f.map_point(p)) != p)
            return false;
    for (const Id& l : f.source().lines())
        if (f.map_point(f.map_line(l)) != l)
            return false;
    return true;
}

StructureMap compose(const StructureMap& f, const StructureMap& g) {
    if (!(g.target() == f.source()))
        throw std::invalid_argument("compose: target of inner map differs from source of outer map");
    bool dual = f.dualizing() != g.dualizing();
    MapKind kind;
    if (f.kind() == MapKind::Embedding || g.kind() == MapKind::Embedding)
        kind = MapKind::Embedding;
    else
        kind = dual ? MapKind::Correlation : MapKind::Isomorphism;
    StructureMap h(kind, dual, g.source(), f.target());
    for (const Id& p : g.source().points()) {
        const Id& mid = g.map_point(p);
        h.set_point_image(p, g.dualizing() ? f.map_line(mid) : f.map_point(mid));
    }
    for (const Id& l : g.source().lines()) {
        const Id& mid = g.map_line(l);
        h.set_line_image(l, g.dualizing() ? f.map_point(mid) : f.map_line(mid));
    }
    return h;
}

StructureMap inverse(const StructureMap& f) {
    if (f.kind() == MapKind::Embedding)
        throw std::invalid_argument("inverse: embeddings are not invertible");
    StructureMap h(f.kind(), f.dualizing(), f.target(), f.source());
    if (f.dualizing()) {
        for (const auto& [l, img] : f.line_part())
            h.set_point_image(img, l);
        for (const auto& [p, img] : f.point_part())
            h.set_line_image(img, p);
    } else {
        for (const auto& [p, img] : f.point_part())
            h.set_point_image(img, p);
        for (const auto& [l, img] : f.line_part())
            h.set_line_image(img, l);
    }
    return h;
}

}  // namespace multconf
