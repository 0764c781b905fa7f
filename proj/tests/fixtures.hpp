#pragma once

#include <fstream>
#include <sstream>

#include "multconf/generators.hpp"
#include "multconf/io.hpp"

namespace multconf::testing {

inline std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline IncidenceStructure load_witness(const std::string& file) {
    return structure_from_document(parse_document(slurp(std::string(MULTCONF_DATA_DIR) + "/" + file)));
}

inline IncidenceStructure fano() {
    return projective_plane(2);
}

// Two disjoint copies of the segment, for component tests.
inline IncidenceStructure two_segments() {
    return make_structure("two-segments", {"a1", "b1", "a2", "b2"},
                          {{"c1", {"a1", "b1"}}, {"c2", {"a2", "b2"}}});
}

}  // namespace multconf::testing
