#include "multconf/axioms.hpp"

#include <algorithm>
#include <functional>

namespace multconf {

namespace {

struct BlockSets {
    std::vector<std::unordered_set<Id>> pts, lns;
};

BlockSets block_sets(const Covering& c) {
    BlockSets b;
    for (const Substructure& s : c.blocks) {
        b.pts.emplace_back(s.points.begin(), s.points.end());
        b.lns.emplace_back(s.lines.begin(), s.lines.end());
    }
    return b;
}

std::string tuple_witness(std::initializer_list<std::pair<const char*, Id>> parts) {
    std::string s;
    for (const auto& [k, v] : parts) {
        if (!s.empty())
            s += " ";
        s += std::string(k) + "=" + v;
    }
    return s;
}

// Some line through all the given points (repetitions allowed).
bool joined_by_line(const IncidenceStructure& host, std::vector<Id> ds) {
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    if (ds.empty())
        return true;
    for (const Id& n : host.pencil(ds[0])) {
        bool all = true;
        for (std::size_t i = 1; i < ds.size(); ++i)
            if (!host.incident(ds[i], n)) {
                all = false;
                break;
            }
        if (all)
            return true;
    }
    return false;
}

bool met_by_point(const IncidenceStructure& host, std::vector<Id> ms) {
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    if (ms.empty())
        return true;
    for (const Id& p : host.row(ms[0])) {
        bool all = true;
        for (std::size_t i = 1; i < ms.size(); ++i)
            if (!host.incident(p, ms[i])) {
                all = false;
                break;
            }
        if (all)
            return true;
    }
    return false;
}

}  // namespace

ConditionReport check_conditions(const IncidenceStructure& host, const Covering& c) {
    BlockSets b = block_sets(c);
    std::size_t k = c.blocks.size();

    std::unordered_set<Id> union_pts, union_lns;
    for (const Substructure& s : c.blocks) {
        union_pts.insert(s.points.begin(), s.points.end());
        union_lns.insert(s.lines.begin(), s.lines.end());
    }
    for (const Id& p : host.points())
        if (!union_pts.count(p))
            throw FalsifiedError("family does not cover point " + p);
    for (const Id& l : host.lines())
        if (!union_lns.count(l))
            throw FalsifiedError("family does not cover line " + l);
    for (std::size_t i = 0; i < k; ++i)
        if (!is_connected(extract(host, c.blocks[i])))
            throw FalsifiedError("block " + std::to_string(i) + " is not connected");

    ConditionReport rep;
    for (bool& p : rep.pass)
        p = true;
    auto fail = [&rep](int idx, std::string w) {
        if (rep.pass[idx]) {
            rep.pass[idx] = false;
            rep.witness[idx] = std::move(w);
        }
    };

    // (1)/(2): overlapping parts of two blocks must be equal.
    for (std::size_t i = 0; i + 1 < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool meet = std::any_of(c.blocks[i].points.begin(), c.blocks[i].points.end(),
                                    [&](const Id& p) { return b.pts[j].count(p) != 0; });
            if (meet && b.pts[i] != b.pts[j])
                fail(0, "blocks " + std::to_string(i) + "," + std::to_string(j) +
                            " overlap in points without being equal");
            bool meet_l = std::any_of(c.blocks[i].lines.begin(), c.blocks[i].lines.end(),
                                      [&](const Id& l) { return b.lns[j].count(l) != 0; });
            if (meet_l && b.lns[i] != b.lns[j])
                fail(1, "blocks " + std::to_string(i) + "," + std::to_string(j) +
                            " overlap in lines without being equal");
        }

    // (3)/(4): escape flags.
    for (std::size_t i = 0; i < k; ++i) {
        for (const Id& d : c.blocks[i].points) {
            bool escapes = std::any_of(host.pencil(d).begin(), host.pencil(d).end(),
                                       [&](const Id& m) { return !b.lns[i].count(m); });
            if (!escapes)
                fail(2, "i=" + std::to_string(i) + " " + tuple_witness({{"d", d}}));
        }
        for (const Id& m : c.blocks[i].lines) {
            bool escapes = std::any_of(host.row(m).begin(), host.row(m).end(),
                                       [&](const Id& d) { return !b.pts[i].count(d); });
            if (!escapes)
                fail(3, "i=" + std::to_string(i) + " " + tuple_witness({{"m", m}}));
        }
    }

    // (5): every complement is closed.
    for (std::size_t i = 0; i < k; ++i) {
        for (const Id& l : host.lines()) {
            if (!b.lns[i].count(l))
                continue;
            std::size_t outside = 0;
            for (const Id& p : host.row(l))
                outside += !b.pts[i].count(p);
            if (outside >= 2)
                fail(4, "i=" + std::to_string(i) + " line " + l +
                            " joins two complement points");
        }
        for (const Id& p : host.points()) {
            if (!b.pts[i].count(p))
                continue;
            std::size_t outside = 0;
            for (const Id& l : host.pencil(p))
                outside += !b.lns[i].count(l);
            if (outside >= 2)
                fail(4, "i=" + std::to_string(i) + " point " + p +
                            " meets two complement lines");
        }
    }

    // (6): concurrent block lines with external points force a joining line.
    for (std::size_t i = 0; i < k && rep.pass[5]; ++i) {
        for (const Id& p : host.points()) {
            std::vector<Id> in_block;
            for (const Id& m : host.pencil(p))
                if (b.lns[i].count(m))
                    in_block.push_back(m);
            std::vector<std::vector<Id>> outside(in_block.size());
            for (std::size_t mi = 0; mi < in_block.size(); ++mi)
                for (const Id& d : host.row(in_block[mi]))
                    if (!b.pts[i].count(d))
                        outside[mi].push_back(d);
            for (std::size_t m1 = 0; m1 < in_block.size() && rep.pass[5]; ++m1)
                for (std::size_t m2 = m1; m2 < in_block.size() && rep.pass[5]; ++m2)
                    for (std::size_t m3 = m2; m3 < in_block.size() && rep.pass[5]; ++m3)
                        for (const Id& d1 : outside[m1])
                            for (const Id& d2 : outside[m2])
                                for (const Id& d3 : outside[m3])
                                    if (!joined_by_line(host, {d1, d2, d3})) {
                                        fail(5, "i=" + std::to_string(i) +
                                                    tuple_witness({{" p", p},
                                                                   {"m1", in_block[m1]},
                                                                   {"m2", in_block[m2]},
                                                                   {"m3", in_block[m3]},
                                                                   {"d1", d1},
                                                                   {"d2", d2},
                                                                   {"d3", d3}}));
                                    }
        }
    }

    // (7): collinear block points with external lines force a common point.
    for (std::size_t i = 0; i < k && rep.pass[6]; ++i) {
        for (const Id& n : host.lines()) {
            std::vector<Id> in_block;
            for (const Id& d : host.row(n))
                if (b.pts[i].count(d))
                    in_block.push_back(d);
            std::vector<std::vector<Id>> outside(in_block.size());
            for (std::size_t di = 0; di < in_block.size(); ++di)
                for (const Id& m : host.pencil(in_block[di]))
                    if (!b.lns[i].count(m))
                        outside[di].push_back(m);
            for (std::size_t d1 = 0; d1 < in_block.size() && rep.pass[6]; ++d1)
                for (std::size_t d2 = d1; d2 < in_block.size() && rep.pass[6]; ++d2)
                    for (std::size_t d3 = d2; d3 < in_block.size() && rep.pass[6]; ++d3)
                        for (const Id& m1 : outside[d1])
                            for (const Id& m2 : outside[d2])
                                for (const Id& m3 : outside[d3])
                                    if (!met_by_point(host, {m1, m2, m3})) {
                                        fail(6, "i=" + std::to_string(i) +
                                                    tuple_witness({{" n", n},
                                                                   {"d1", in_block[d1]},
                                                                   {"d2", in_block[d2]},
                                                                   {"d3", in_block[d3]},
                                                                   {"m1", m1},
                                                                   {"m2", m2},
                                                                   {"m3", m3}}));
                                    }
        }
    }

    return rep;
}

RhoStructure rho(const IncidenceStructure& host, const Covering& c) {
    BlockSets b = block_sets(c);
    std::size_t k = c.blocks.size();
    if (k < 2)
        throw FalsifiedError("successor relation is empty: a single block admits no j != i");

    std::vector<std::size_t> succ(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        for (const Id& l : c.blocks[j].lines) {
            for (const Id& a : host.row(l)) {
                for (std::size_t i = 0; i < k; ++i) {
                    if (i == j || !b.pts[i].count(a))
                        continue;
                    if (succ[j] == k)
                        succ[j] = i;
                    else if (succ[j] != i)
                        throw FalsifiedError("successor of block " + std::to_string(j) +
                                             " is not unique (" + std::to_string(succ[j]) +
                                             " and " + std::to_string(i) + ")");
                }
            }
        }
        if (succ[j] == k)
            throw FalsifiedError("block " + std::to_string(j) + " has no successor");
    }

    std::vector<std::size_t> indegree(k, 0);
    for (std::size_t j = 0; j < k; ++j)
        ++indegree[succ[j]];
    for (std::size_t i = 0; i < k; ++i)
        if (indegree[i] != 1)
            throw FalsifiedError("successor relation is not a bijection at block " +
                                 std::to_string(i));

    RhoStructure r;
    r.successor = succ;
    r.relabel.assign(k, k);
    std::size_t at = 0;
    for (std::size_t step = 0; step < k; ++step) {
        if (r.relabel[at] != k)
            throw FalsifiedError("successor relation is not a single cycle");
        r.relabel[at] = step;
        at = succ[at];
    }
    if (at != 0)
        throw FalsifiedError("successor relation is not a single cycle");
    r.cycle_length = k;
    return r;
}

TackRelation tack_from_covering(const IncidenceStructure& host, const Covering& c) {
    BlockSets b = block_sets(c);
    std::size_t k = c.blocks.size();
    TackRelation t;
    for (const auto& [p, l] : host.flags()) {
        bool shared = false;
        for (std::size_t i = 0; i < k && !shared; ++i)
            shared = b.pts[i].count(p) && b.lns[i].count(l);
        if (!shared)
            t.add(p, l);
    }
    std::unordered_map<Id, int> pcount, lcount;
    for (const auto& [p, l] : t.pairs()) {
        ++pcount[p];
        ++lcount[l];
    }
    for (const Id& p : host.points())
        if (pcount[p] != 1)
            throw FalsifiedError("extra-point relation is not a bijection: point " + p +
                                 " occurs " + std::to_string(pcount[p]) + " times");
    for (const Id& l : host.lines())
        if (lcount[l] != 1)
            throw FalsifiedError("extra-point relation is not a bijection: line " + l +
                                 " occurs " + std::to_string(lcount[l]) + " times");
    return t;
}

KappaMaps kappa_maps(const IncidenceStructure& host, const Covering& c) {
    KappaMaps m;
    TackRelation tack = tack_from_covering(host, c);
    for (const auto& [p, l] : tack.pairs()) {
        m.point_to_line[p] = l;
        m.line_to_point[l] = p;
    }
    return m;
}

std::vector<StructureMap> build_correlations(const IncidenceStructure& host, const Covering& c) {
    RhoStructure r = rho(host, c);
    TackRelation tack = tack_from_covering(host, c);
    std::unordered_map<Id, Id> tack_point;  // line -> its extra point
    for (const auto& [p, l] : tack.pairs())
        tack_point[l] = p;

    BlockSets b = block_sets(c);
    std::vector<StructureMap> out;
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
        std::size_t nxt = r.successor[i];
        IncidenceStructure src = extract(host, c.blocks[i]);
        IncidenceStructure dst = extract(host, c.blocks[nxt]);

        std::unordered_map<Id, Id> line_image;
        for (const Id& m : c.blocks[i].lines) {
            const Id& tp = tack_point.at(m);
            if (!b.pts[nxt].count(tp))
                throw FalsifiedError("extra point of line " + m + " misses block " +
                                     std::to_string(nxt));
            line_image[m] = tp;
        }

        // Allowed images of each point: target block lines matching the
        // incidence pattern of the tack points of the point's block pencil.
        std::vector<std::vector<Id>> allowed;
        for (const Id& p : c.blocks[i].points) {
            std::vector<Id> cand;
            for (const Id& n : c.blocks[nxt].lines) {
                bool ok = true;
                for (const Id& m : c.blocks[i].lines)
                    if (host.incident(p, m) != host.incident(line_image[m], n)) {
                        ok = false;
                        break;
                    }
                if (ok)
                    cand.push_back(n);
            }
            if (cand.empty())
                throw FalsifiedError("no admissible image line for point " + p + " in block " +
                                     std::to_string(i));
            allowed.push_back(std::move(cand));
        }

        // Deterministic perfect matching over the allowed lists.
        std::size_t np = c.blocks[i].points.size();
        std::unordered_set<Id> used;
        std::vector<Id> image(np);
        std::function<bool(std::size_t)> match = [&](std::size_t at) {
            if (at == np)
                return true;
            for (const Id& n : allowed[at]) {
                if (used.count(n))
                    continue;
                used.insert(n);
                image[at] = n;
                if (match(at + 1))
                    return true;
                used.erase(n);
            }
            return false;
        };
        if (!match(0))
            throw FalsifiedError("block " + std::to_string(i) +
                                 ": point images admit no bijective completion");

        StructureMap phi(MapKind::Correlation, true, src, dst);
        for (std::size_t pi = 0; pi < np; ++pi)
            phi.set_point_image(c.blocks[i].points[pi], image[pi]);
        for (const Id& m : c.blocks[i].lines)
            phi.set_line_image(m, line_image[m]);
        if (auto why = check_map_witness(phi))
            throw FalsifiedError("recovered map for block " + std::to_string(i) +
                                 " is not a correlation: " + *why);
        out.push_back(std::move(phi));
    }
    return out;
}

}  // namespace multconf
