#pragma once

#include <stdexcept>
#include <string>

namespace multconf {

// Element identifiers are opaque strings. Constructed structures use
// composite ids "(i,a)" for points and "[i,l]" for lines, so that the
// explicit isomorphisms of the constructions are literal renamings.
using Id = std::string;

// Thrown when input text or a document violates a schema. CLI exit code 2.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a mathematical claim about the input fails (a relation is not
// a bijection, a covering violates a condition, a map fails verification).
// Carries a human-readable witness. CLI exit code 1.
struct FalsifiedError : std::runtime_error {
    explicit FalsifiedError(const std::string& witness) : std::runtime_error(witness) {}
};

}  // namespace multconf
