#pragma once

#include <array>
#include <optional>

#include "multconf/covering.hpp"

namespace multconf {

// Per-condition verdicts with one concrete counterexample per failure.
struct ConditionReport {
    std::array<bool, 7> pass{};
    std::array<std::optional<std::string>, 7> witness{};
    bool all_pass() const {
        for (bool b : pass)
            if (!b)
                return false;
        return true;
    }
};

// The seven exchange conditions on a covering by closed substructures:
//   1/2  point parts and line parts of distinct blocks are disjoint
//   3/4  every block point lies on an escaping line and dually
//   5    every block complement is closed
//   6/7  block-external concurrence forces collinearity and dually
// All free variables, including the block index, are read universally.
// Throws FalsifiedError if the family does not cover the host or some
// block is disconnected; otherwise reports.
ConditionReport check_conditions(const IncidenceStructure& host, const Covering& c);

// The block successor relation: block j precedes block i when a line of j
// carries a point of i. Verified to be functional, bijective and a single
// cycle; the relabeling sends it to i -> i+1 (mod k) starting from block 0.
struct RhoStructure {
    std::vector<std::size_t> successor;  // block index -> block index
    std::vector<std::size_t> relabel;    // old index -> normalized index
    std::size_t cycle_length = 0;
};

RhoStructure rho(const IncidenceStructure& host, const Covering& c);

// The extra-point relation a covering induces: incident pairs sharing no
// block. By the condition system it must be a point <-> line bijection;
// throws FalsifiedError with a witness otherwise.
TackRelation tack_from_covering(const IncidenceStructure& host, const Covering& c);

// The bijection packaged as the two mutually inverse maps.
struct KappaMaps {
    std::unordered_map<Id, Id> point_to_line;
    std::unordered_map<Id, Id> line_to_point;
};

KappaMaps kappa_maps(const IncidenceStructure& host, const Covering& c);

// Per block i, the correlation block_i -> block_rho(i): lines go to their
// tack points; points go to the unique block line carrying the tack points
// of their block pencil. Under-determined point images (blocks with
// single-line pencils) are completed by a deterministic matching; every
// returned map passes check_map. Covering blocks must already be indexed
// so that rho(i) = i+1 (as covering_from_tack leaves them).
std::vector<StructureMap> build_correlations(const IncidenceStructure& host, const Covering& c);

}  // namespace multconf
