#pragma once

#include "multconf/axioms.hpp"

namespace multconf {

// Outcome of the reconstruction: the glued structure built from the
// covering's blocks and recovered correlations, the literal renaming map
// onto it, and the verification verdict. verdict true implies the map
// passed check_map as an isomorphism.
struct RebuildResult {
    Layered rebuilt;
    StructureMap delta;
    std::vector<StructureMap> correlations;  // recovered block correlations
    bool verdict = false;
    std::optional<std::string> witness;
};

// The reconstruction pipeline: verify the condition system, normalize the
// block indices along the successor cycle, recover the inter-block
// correlations, glue, and verify a -> (i,a) as an isomorphism. Condition or
// recovery failures propagate as FalsifiedError; a failed final isomorphism
// check is reported in the result.
RebuildResult rebuild(const IncidenceStructure& host, const Covering& c);

// A self-duality of a glue output from a compatible family of correlations
// xi_i : m_i -> m_{-i}. The compatibility equation (checked first, per
// index) is the one that makes (i,x) -> [-i, xi_i(x)] a correlation:
// phi''_{-i} . xi'_i . phi''_{i-1} = xi''_{i-1}.
StructureMap glue_selfdual_correlation(const GlueSpec& spec,
                                       const std::vector<StructureMap>& xis);

// For an even cycle whose correlations compose to the identity: the
// explicit isomorphism onto the dualisation multiply of the first block,
// assembled from the inverse-chain composites.
IsoWitness collapse_even(const GlueSpec& spec);

// For an odd cycle whose composite is an involutive self-correlation of
// the first block: the explicit isomorphism onto the correlative multiply.
IsoWitness collapse_odd(const GlueSpec& spec);

}  // namespace multconf
