#pragma once

#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "scarflab/common.hpp"
#include "scarflab/lattice.hpp"

namespace scarflab {

// a . e_A = sum of a's coordinates over the bitmask A (bit i = index i+1).
int dot_eA(const Point& a, unsigned A);

// Exact projection direction of Prop-style geometry: e_A - (|A|/q) * 1.
std::vector<boost::rational<long long>> project_direction(unsigned A, int q);

// Per-subset bounds of a face: lo[A] = min_i a_i.e_A, hi[A] = max_i a_i.e_A.
struct HalfspaceSystem {
    int q = 0;
    int r = 0;
    std::vector<int> lo;  // indexed by mask 0 .. 2^q - 1
    std::vector<int> hi;
};
HalfspaceSystem halfspace_system(const Face& face);

// All w in N^r_q with lo(A) <= w.e_A <= hi(A) for every A (two-sided
// min-max sandwich); always contains the face's points.
std::vector<Point> polytope_lattice_points(const Face& face);

// A witness that a face is not Scarf: a subset C of the face's vertex
// positions and a point w outside {a_i : i in C} satisfying
// w.e_A <= max_{i in C} a_i.e_A for all A.
struct WitnessReport {
    Point witness;
    std::vector<int> C;  // positions into face.points()
};

// Deterministic search: subsets C in decreasing |C| then lex order on C;
// candidate points scanned in descending vertex order.  Returns the first
// witness found, or nullopt iff the face is Scarf.
// Caps: |face| <= 22 and q <= 12; beyond -> resource_error.
std::optional<WitnessReport> find_witness(const Face& face);

// True iff find_witness finds nothing.  Results for orbit-canonical
// representatives are memoized (edge orbits keyed by normalize_pair; larger
// faces by a shift/pad/permute-canonical form when the reduced q <= 7).
bool is_scarf_face_geometric(const Face& face);

// U_a^r = a + U_q^{r-|a|} = {a + u : u square-free, |u| = r - |a|}.
// Requires |a| < r and r - |a| <= q, else std::domain_error.
Face u_facet(const Point& a, int r);

// All U_a^r with r - q < |a| < r, deduplicated.  When that range is empty
// but N^r_q is nonempty (q = 1, or r = 0), the single-vertex faces are
// returned so the generated complex still covers every generator.
std::vector<Face> u_complex_facets(int q, int r);

} // namespace scarflab
