#include "multconf/covering.hpp"

#include <algorithm>
#include <numeric>

namespace multconf {

void TackRelation::add(const Id& p, const Id& l) {
    if (index_.emplace(p, l).second)
        pairs_.emplace_back(p, l);
}

bool TackRelation::contains(const Id& p, const Id& l) const {
    return index_.count({p, l}) != 0;
}

bool TackRelation::operator==(const TackRelation& o) const {
    return index_ == o.index_;
}

bool is_closed(const IncidenceStructure& host, const Substructure& sub) {
    std::unordered_set<Id> pts(sub.points.begin(), sub.points.end());
    std::unordered_set<Id> lns(sub.lines.begin(), sub.lines.end());
    for (const Id& l : host.lines()) {
        std::size_t inside = 0;
        for (const Id& p : host.row(l))
            inside += pts.count(p);
        if (inside >= 2 && !lns.count(l))
            return false;
    }
    for (const Id& p : host.points()) {
        std::size_t inside = 0;
        for (const Id& l : host.pencil(p))
            inside += lns.count(l);
        if (inside >= 2 && !pts.count(p))
            return false;
    }
    return true;
}

Substructure closed_hull(const IncidenceStructure& host, const std::vector<Id>& seed_points,
                         const std::vector<Id>& seed_lines) {
    std::unordered_set<Id> pts(seed_points.begin(), seed_points.end());
    std::unordered_set<Id> lns(seed_lines.begin(), seed_lines.end());
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Id& l : host.lines()) {
            if (lns.count(l))
                continue;
            std::size_t inside = 0;
            for (const Id& p : host.row(l))
                inside += pts.count(p);
            if (inside >= 2) {
                lns.insert(l);
                grew = true;
            }
        }
        for (const Id& p : host.points()) {
            if (pts.count(p))
                continue;
            std::size_t inside = 0;
            for (const Id& l : host.pencil(p))
                inside += lns.count(l);
            if (inside >= 2) {
                pts.insert(p);
                grew = true;
            }
        }
    }
    Substructure out;
    for (const Id& p : host.points())
        if (pts.count(p))
            out.points.push_back(p);
    for (const Id& l : host.lines())
        if (lns.count(l))
            out.lines.push_back(l);
    return out;
}

IncidenceStructure extract(const IncidenceStructure& host, const Substructure& sub) {
    IncidenceStructure s;
    s.set_name(host.name() + "|block");
    std::unordered_set<Id> pts(sub.points.begin(), sub.points.end());
    for (const Id& p : host.points())
        if (pts.count(p))
            s.add_point(p);
    std::unordered_set<Id> lns(sub.lines.begin(), sub.lines.end());
    for (const Id& l : host.lines())
        if (lns.count(l))
            s.add_line(l);
    for (const Id& l : s.lines())
        for (const Id& p : host.row(l))
            if (pts.count(p))
                s.add_flag(p, l);
    return s;
}

TackRelation canonical_tack(const Layered& s) {
    if (s.cycle == 0)
        throw std::invalid_argument("canonical_tack needs construction coordinates");
    TackRelation t;
    for (const auto& [p, l] : s.structure.flags())
        if (s.tag(p).layer == (s.tag(l).layer + 1) % s.cycle)
            t.add(p, l);
    return t;
}

Covering layer_covering(const Layered& s) {
    if (s.cycle == 0)
        throw std::invalid_argument("layer_covering needs construction coordinates");
    Covering c;
    c.blocks.resize(s.cycle);
    for (const Id& p : s.structure.points())
        c.blocks[s.tag(p).layer].points.push_back(p);
    for (const Id& l : s.structure.lines())
        c.blocks[s.tag(l).layer].lines.push_back(l);
    return c;
}

namespace {

std::pair<Id, Id> ordered_pair(const IncidenceStructure& host, const Id& p, const Id& q) {
    return host.point_index(p) <= host.point_index(q) ? std::make_pair(p, q)
                                                      : std::make_pair(q, p);
}

}  // namespace

std::set<std::pair<Id, Id>> baer_from_tack(const IncidenceStructure& host,
                                           const TackRelation& tack) {
    std::set<std::pair<Id, Id>> rel;
    for (const Id& l : host.lines()) {
        std::vector<Id> free;
        for (const Id& p : host.row(l))
            if (!tack.contains(p, l))
                free.push_back(p);
        for (std::size_t i = 0; i < free.size(); ++i)
            for (std::size_t j = i; j < free.size(); ++j)
                rel.insert(ordered_pair(host, free[i], free[j]));
    }
    return rel;
}

std::set<std::pair<Id, Id>> baer_coordinate(const Layered& s) {
    std::set<std::pair<Id, Id>> rel;
    for (const Id& l : s.structure.lines()) {
        const auto& row = s.structure.row(l);
        for (std::size_t i = 0; i < row.size(); ++i)
            for (std::size_t j = i; j < row.size(); ++j)
                if (s.tag(row[i]).layer == s.tag(row[j]).layer)
                    rel.insert(ordered_pair(s.structure, row[i], row[j]));
    }
    return rel;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Covering covering_from_tack(const IncidenceStructure& host, const TackRelation& tack) {
    if (!is_connected(host))
        throw FalsifiedError("covering recovery requires a connected host");

    const auto& pts = host.points();
    UnionFind uf(pts.size());
    std::vector<bool> covered(pts.size(), false);
    for (const Id& l : host.lines()) {
        std::vector<std::size_t> free;
        for (const Id& p : host.row(l))
            if (!tack.contains(p, l))
                free.push_back(host.point_index(p));
        for (std::size_t i : free)
            covered[i] = true;
        for (std::size_t i = 1; i < free.size(); ++i)
            uf.unite(free[0], free[i]);
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (!covered[i])
            throw FalsifiedError("classes fail to cover: point " + pts[i] +
                                 " lies on no tack-free line");

    // Classes in order of first appearance.
    std::unordered_map<std::size_t, std::size_t> root_to_block;
    std::vector<Substructure> blocks;
    std::vector<std::size_t> block_of_point(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::size_t r = uf.find(i);
        auto it = root_to_block.find(r);
        if (it == root_to_block.end())
            it = root_to_block.emplace(r, blocks.size()).first, blocks.emplace_back();
        block_of_point[i] = it->second;
        blocks[it->second].points.push_back(pts[i]);
    }

    // A line joins the class holding all of its tack-free points.
    std::vector<std::size_t> block_of_line(host.lines().size());
    for (std::size_t li = 0; li < host.lines().size(); ++li) {
        const Id& l = host.lines()[li];
        std::size_t target = blocks.size();
        for (const Id& p : host.row(l)) {
            if (tack.contains(p, l))
                continue;
            std::size_t b = block_of_point[host.point_index(p)];
            if (target == blocks.size())
                target = b;
            else if (target != b)
                throw FalsifiedError("line " + l + " has tack-free points in two classes");
        }
        if (target == blocks.size())
            throw FalsifiedError("line " + l + " has no tack-free point");
        block_of_line[li] = target;
        blocks[target].lines.push_back(l);
    }

    for (const Substructure& b : blocks) {
        Substructure hull = closed_hull(host, b.points, b.lines);
        if (hull.points != b.points || hull.lines != b.lines)
            throw FalsifiedError("recovered class is not a closed substructure");
    }

    // Successor cycle over blocks, read off the cross flags.
    std::size_t k = blocks.size();
    if (k < 2)
        throw FalsifiedError("recovered covering has a single block");
    std::vector<std::size_t> succ(k, k);
    for (std::size_t li = 0; li < host.lines().size(); ++li) {
        for (const Id& p : host.row(host.lines()[li])) {
            std::size_t pb = block_of_point[host.point_index(p)];
            if (pb == block_of_line[li])
                continue;
            if (succ[block_of_line[li]] == k)
                succ[block_of_line[li]] = pb;
            else if (succ[block_of_line[li]] != pb)
                throw FalsifiedError("block successor is not functional");
        }
    }
    std::size_t start = block_of_point[0];
    std::vector<std::size_t> order;
    std::vector<bool> seen(k, false);
    std::size_t at = start;
    while (at != k && !seen[at]) {
        seen[at] = true;
        order.push_back(at);
        at = succ[at];
    }
    if (order.size() != k || at != start)
        throw FalsifiedError("block successor is not a single cycle");

    Covering out;
    for (std::size_t b : order)
        out.blocks.push_back(std::move(blocks[b]));
    return out;
}

TackRelation tack_rank(const IncidenceStructure& host) {
    TackRelation t;
    for (const auto& [p, l] : host.flags())
        if (host.pencil(p).size() == host.row(l).size())
            t.add(p, l);
    return t;
}

namespace {

// Line-by-line meeting matrix; the diagonal records non-emptiness, which is
// what the literal evaluation of "k and m share a point" gives for k == m.
std::vector<std::vector<bool>> meet_matrix(const IncidenceStructure& host) {
    std::size_t n = host.lines().size();
    std::vector<std::vector<bool>> meets(n, std::vector<bool>(n, false));
    for (const Id& p : host.points()) {
        const auto& pen = host.pencil(p);
        for (std::size_t i = 0; i < pen.size(); ++i)
            for (std::size_t j = i; j < pen.size(); ++j) {
                std::size_t a = host.line_index(pen[i]);
                std::size_t b = host.line_index(pen[j]);
                meets[a][b] = meets[b][a] = true;
            }
    }
    return meets;
}

}  // namespace

TackRelation tack1(const IncidenceStructure& host) {
    auto meets = meet_matrix(host);
    TackRelation t;
    // Plain quantifier evaluation over line triples (k,m,n); no shortcuts
    // beyond incidence filtering.
    for (const auto& [p, l] : host.flags()) {
        std::size_t li = host.line_index(l);
        std::vector<std::size_t> mp;
        for (const Id& m : host.pencil(p))
            if (m != l)
                mp.push_back(host.line_index(m));
        bool found_q = false;
        for (const Id& q : host.row(l)) {
            if (q == p)
                continue;
            bool ok = true;
            for (const Id& kline : host.pencil(q)) {
                std::size_t ki = host.line_index(kline);
                if (ki == li)
                    continue;
                for (std::size_t mi : mp) {
                    for (std::size_t ni : mp) {
                        if (mi == ni)
                            continue;
                        if (meets[ki][mi] && meets[ki][ni]) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok)
                        break;
                }
                if (!ok)
                    break;
            }
            if (ok) {
                found_q = true;
                break;
            }
        }
        if (found_q)
            t.add(p, l);
    }
    return t;
}

std::vector<std::pair<Id, Id>> corr_rel(const IncidenceStructure& host) {
    auto meets = meet_matrix(host);
    std::vector<std::pair<Id, Id>> rel;
    for (const Id& a : host.points())
        for (const Id& l : host.lines()) {
            if (host.incident(a, l))
                continue;
            std::size_t li = host.line_index(l);
            std::size_t missing = 0;
            for (const Id& m : host.pencil(a))
                if (!meets[li][host.line_index(m)])
                    ++missing;
            if (missing == 1)
                rel.emplace_back(a, l);
        }
    return rel;
}

TackRelation tack2(const IncidenceStructure& host) {
    // corr candidates per line.
    std::vector<std::vector<Id>> corr_of_line(host.lines().size());
    for (const auto& [a, l] : corr_rel(host))
        corr_of_line[host.line_index(l)].push_back(a);

    TackRelation t;
    for (const auto& [p, l] : host.flags()) {
        for (const Id& a : corr_of_line[host.line_index(l)]) {
            if (!collinear(host, p, a)) {
                t.add(p, l);
                break;
            }
        }
    }
    return t;
}

}  // namespace multconf
