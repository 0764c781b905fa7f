#include "multconf/generators.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace multconf {

bool is_prime(int n) {
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(int p) : p_(p) {
    if (!is_prime(p))
        throw std::invalid_argument("not a prime: " + std::to_string(p));
}

int PrimeField::inv(int a) const {
    a %= p_;
    if (a == 0)
        throw std::invalid_argument("no inverse of 0");
    // Fermat: a^(p-2) mod p.
    int result = 1, base = a, e = p_ - 2;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

IncidenceStructure segment() {
    return make_structure("segment", {"a", "b"}, {{"c", {"a", "b"}}});
}

namespace {

std::string subset_id(const std::vector<int>& sub) {
    std::string s = "{";
    for (std::size_t i = 0; i < sub.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(sub[i]);
    }
    return s + "}";
}

// All m-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int m, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(m);
    for (int i = 0; i < m; ++i)
        cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur[i] == n - m + i + 1)
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < m; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

bool contains(const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

IncidenceStructure grassmannian(int m, int n) {
    if (m < 1 || m >= n)
        throw std::invalid_argument("grassmannian requires 1 <= m < n");
    IncidenceStructure s;
    s.set_name("G_" + std::to_string(m) + "(" + std::to_string(n) + ")");
    auto pts = subsets(m, n);
    auto lns = subsets(m + 1, n);
    for (const auto& p : pts)
        s.add_point(subset_id(p));
    for (const auto& l : lns)
        s.add_line(subset_id(l));
    for (const auto& l : lns)
        for (const auto& p : pts)
            if (contains(l, p))
                s.add_flag(subset_id(p), subset_id(l));
    return s;
}

IncidenceStructure ht_config(int p) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("ht_config requires an odd prime");
    PrimeField f(p);
    IncidenceStructure s;
    s.set_name("HT(" + std::to_string(p) + ")");
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            s.add_point("(" + std::to_string(a) + "," + std::to_string(b) + ")");
    for (int al = 0; al < p; ++al)
        for (int be = 0; be < p; ++be)
            s.add_line("[" + std::to_string(al) + "," + std::to_string(be) + "]");
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int al = 0; al < p; ++al)
                for (int be = 0; be < p; ++be)
                    if (f.mul(a, al) == f.add(b, be))
                        s.add_flag("(" + std::to_string(a) + "," + std::to_string(b) + ")",
                                   "[" + std::to_string(al) + "," + std::to_string(be) + "]");
    return s;
}

AffinePlane affine_plane(int p) {
    if (!is_prime(p))
        throw std::invalid_argument("affine_plane requires a prime");
    PrimeField f(p);
    AffinePlane plane;
    auto& s = plane.structure;
    s.set_name("AG(2," + std::to_string(p) + ")");
    auto pt = [](int x, int y) {
        return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    };
    for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y)
            s.add_point(pt(x, y));
    // Vertical lines x = c, then slope classes y = s*x + b.
    ParallelClass vert{"inf", {}};
    for (int c = 0; c < p; ++c) {
        Id l = "[inf," + std::to_string(c) + "]";
        s.add_line(l);
        vert.lines.push_back(l);
        for (int y = 0; y < p; ++y)
            s.add_flag(pt(c, y), l);
    }
    plane.classes.push_back(vert);
    for (int sl = 0; sl < p; ++sl) {
        ParallelClass cls{std::to_string(sl), {}};
        for (int b = 0; b < p; ++b) {
            Id l = "[" + std::to_string(sl) + "," + std::to_string(b) + "]";
            s.add_line(l);
            cls.lines.push_back(l);
            for (int x = 0; x < p; ++x)
                s.add_flag(pt(x, f.add(f.mul(sl, x), b)), l);
        }
        plane.classes.push_back(cls);
    }
    return plane;
}

IncidenceStructure delete_direction(const AffinePlane& a, const ParallelClass& d) {
    bool known = std::any_of(a.classes.begin(), a.classes.end(), [&](const ParallelClass& c) {
        return c.direction == d.direction && c.lines == d.lines;
    });
    if (!known)
        throw std::invalid_argument("delete_direction: not a parallel class of this plane");
    std::unordered_set<Id> drop(d.lines.begin(), d.lines.end());
    IncidenceStructure s;
    s.set_name(a.structure.name() + " minus " + d.direction);
    for (const Id& p : a.structure.points())
        s.add_point(p);
    for (const Id& l : a.structure.lines())
        if (!drop.count(l))
            s.add_line(l);
    for (const Id& l : s.lines())
        for (const Id& p : a.structure.row(l))
            s.add_flag(p, l);
    return s;
}

IncidenceStructure projective_plane(int p) {
    if (!is_prime(p))
        throw std::invalid_argument("projective_plane requires a prime");
    PrimeField f(p);
    // Normalized homogeneous triples, first nonzero coordinate 1, ordered
    // (1:y:z) by y,z then (0:1:z) then (0:0:1).
    std::vector<std::array<int, 3>> reps;
    for (int y = 0; y < p; ++y)
        for (int z = 0; z < p; ++z)
            reps.push_back({1, y, z});
    for (int z = 0; z < p; ++z)
        reps.push_back({0, 1, z});
    reps.push_back({0, 0, 1});

    auto trip = [](char open, char close, const std::array<int, 3>& v) {
        std::string s(1, open);
        s += std::to_string(v[0]) + ":" + std::to_string(v[1]) + ":" + std::to_string(v[2]);
        s += close;
        return s;
    };

    IncidenceStructure s;
    s.set_name("PG(2," + std::to_string(p) + ")");
    for (const auto& v : reps)
        s.add_point(trip('(', ')', v));
    for (const auto& v : reps)
        s.add_line(trip('[', ']', v));
    for (const auto& a : reps)
        for (const auto& b : reps) {
            int dot = f.add(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])), f.mul(a[2], b[2]));
            if (dot == 0)
                s.add_flag(trip('(', ')', a), trip('[', ']', b));
        }
    return s;
}

}  // namespace multconf
