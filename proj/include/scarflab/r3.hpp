#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "scarflab/common.hpp"
#include "scarflab/lattice.hpp"

namespace scarflab {

using bigint = boost::multiprecision::cpp_int;

// Classification of a pair of distinct points of N^3_q against the nine
// Scarf-edge templates and the nine minimal-nonface edge templates (every
// distinct pair matches exactly one).  Indices in template names are
// pairwise distinct.
struct EdgeClass {
    bool is_scarf = false;
    std::string tmpl;  // e.g. "{3e_u, 2e_u+e_j}" or "{3e_a, 3e_b}"
};
EdgeClass edge_type(const Point& a, const Point& b);

// The W_{P,a} simplex: {2e_a+e_j : j in P\{a}}
//   union {e_j+e_k+e_l : j<k<l in [q]\P}
//   union {e_a+e_j+e_k : j<k in [q]\{a}}.
// Requires a in P subseteq [q] (1-based indices); a facet outside the
// U-complex exactly when 2 <= |P| <= q-3.
Face w_facet(const std::vector<int>& P, int a, int q);

struct FacetDescriptor {
    enum class Family { Uq, U_ea, U_2ea, U_eaeb, W };
    Family family;
    int a = 0;           // 1-based, when applicable
    int b = 0;           // 1-based, when applicable
    std::vector<int> P;  // for W
    std::string str() const;
};

// All facets of S_q^3: U_{2e_a} (q >= 1), U_{e_a+e_b} (q >= 2),
// U_{e_a} (q >= 3), U_q (q >= 4), W_{P,a} with 2 <= |P| <= q-3 (q >= 5).
// Realized faces are deduplicated.
std::vector<std::pair<FacetDescriptor, Face>> facets_r3(int q);

struct NonfaceDescriptor {
    std::string tmpl;
    Face face;
};

// All minimal nonfaces of S_q^3: every instance of the nine edge templates
// plus the triangles {2e_a+e_b, e_a+2e_b, e_c+e_d+e_e} on five distinct
// indices.
std::vector<NonfaceDescriptor> minimal_nonfaces_r3(int q);

// Catalog membership, computed by two independent routes:
//   A: the face is contained in some facet of facets_r3(q);
//   B: the face contains no minimal nonface.
// Both are evaluated; disagreement throws invariant_violation.
bool is_face_r3(const Face& face);

// f_i(S_q^3) = number of i-faces, by per-facet subset enumeration with
// global dedup.  q <= 6 (resource_error beyond).  Trailing zeros trimmed.
std::vector<bigint> f_vector_enumerated(int q);

} // namespace scarflab
