#pragma once

#include <vector>

#include "multconf/incidence.hpp"

namespace multconf {

// Modular arithmetic over GF(p), p prime. Construction throws on
// composite p.
class PrimeField {
public:
    explicit PrimeField(int p);
    int p() const { return p_; }
    int add(int a, int b) const { return (a + b) % p_; }
    int sub(int a, int b) const { return ((a - b) % p_ + p_) % p_; }
    int mul(int a, int b) const { return (a * b) % p_; }
    int neg(int a) const { return (p_ - a % p_) % p_; }
    int inv(int a) const;  // throws on a == 0 mod p

private:
    int p_;
};

bool is_prime(int n);

// One line c with two points a, b on it. Not a partial linear space.
IncidenceStructure segment();

// Combinatorial Grassmannian on {1..n}: points are the m-subsets, lines
// the (m+1)-subsets, incidence is inclusion. Requires 1 <= m < n.
IncidenceStructure grassmannian(int m, int n);

// Havlicek-Tietze configuration over GF(p), p an odd prime: points (a,b),
// blocks [alpha,beta], incident iff a*alpha = b + beta.
IncidenceStructure ht_config(int p);

// A maximal family of pairwise disjoint lines of an affine plane.
struct ParallelClass {
    std::string direction;   // slope label: "inf", "0", ..., "p-1"
    std::vector<Id> lines;
};

struct AffinePlane {
    IncidenceStructure structure;
    std::vector<ParallelClass> classes;
};

// AG(2,p): p^2 points (x,y), p^2+p lines in p+1 parallel classes.
AffinePlane affine_plane(int p);

// Remove one whole parallel class; d must be a class of a.
IncidenceStructure delete_direction(const AffinePlane& a, const ParallelClass& d);

// PG(2,p) via the one- and two-dimensional subspaces of GF(p)^3.
// Points "(x:y:z)", lines "[a:b:c]", incident iff ax+by+cz = 0.
IncidenceStructure projective_plane(int p);

}  // namespace multconf
