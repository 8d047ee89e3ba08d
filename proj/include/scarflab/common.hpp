#pragma once

#include <stdexcept>
#include <string>

namespace scarflab {

// Thrown when an operation would exceed the documented desk-scale caps
// (e.g. witness search on faces larger than the hard cap, enumeration for
// q beyond the supported range).  CLI maps this to exit code 3.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when two code paths that must agree (e.g. the facet route and the
// nonface route of the r=3 membership test) disagree.  Always a bug signal;
// CLI maps this to exit code 1.
class invariant_violation : public std::logic_error {
public:
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace scarflab
