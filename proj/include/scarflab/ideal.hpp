#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scarflab/common.hpp"
#include "scarflab/lattice.hpp"

namespace scarflab {

// A monomial as a sparse exponent map variable-index -> positive exponent.
// Zero exponents are never stored.
class Monomial {
public:
    Monomial() = default;

    static Monomial unit() { return Monomial{}; }
    static Monomial variable(int v, int e = 1);

    int exponent(int v) const;
    void set_exponent(int v, int e);  // e = 0 erases
    bool is_unit() const { return exp_.empty(); }

    bool divides(const Monomial& m) const;
    Monomial lcm(const Monomial& m) const;
    Monomial product(const Monomial& m) const;
    // Exact quotient *this / m; throws std::domain_error unless m divides.
    Monomial quotient(const Monomial& m) const;

    const std::map<int, int>& exponents() const { return exp_; }
    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& o) const { return exp_ < o.exp_; }

    // Rendering with a caller-supplied variable namer, e.g. "x_12^3*x_2".
    std::string str(const std::vector<std::string>& varnames) const;

private:
    std::map<int, int> exp_;
};

struct MonomialIdeal {
    int nvars = 0;
    std::vector<std::string> varnames;  // size nvars
    std::vector<Monomial> gens;
    bool minimal = false;  // when set, no generator divides another
};

// Name of the extremal-ideal variable x_A for a nonempty bitmask A over [q],
// e.g. mask 0b101 -> "x_13".
std::string extremal_varname(unsigned mask, int q);

// E_q in S_q = k[x_A : emptyset != A subseteq [q]]; variable index of x_A is
// mask A - 1 (masks 1 .. 2^q - 1).  Generator i is eps_i = prod_{i in A} x_A.
// q > 16 -> resource_error (2^q - 1 variables).
MonomialIdeal extremal_ideal(int q);

// eps^a for a in N^r_q: exponent of x_A is a . e_A.
Monomial extremal_power_generator(int q, int r, const Point& a);

// E_q^r with generators eps^a for a in enumerate_points(q, r) (in that order).
MonomialIdeal extremal_power_ideal(int q, int r);

// A face of the Taylor complex of an ideal: strictly increasing generator
// indices.
using IndexFace = std::vector<int>;

// Coordinatewise max of the labels of the face's generators; empty -> unit.
Monomial lcm_label(const MonomialIdeal& ideal, const IndexFace& face);

// Local label-uniqueness test: (a) no generator outside the face divides the
// face's lcm label, and (b) removing any single vertex strictly changes the
// label.  Faces sharing a label are closed under union, so any duplicate
// label forces a single-vertex extension with equal label (violating (a)) or
// a single-vertex deletion with equal label (violating (b)); hence the local
// test equals global label-uniqueness.  Requires a minimal generating set.
bool is_scarf_face_by_labels(const MonomialIdeal& ideal, const IndexFace& face);

// All label-unique faces with at most dim_cap + 1 vertices, built by
// extending Scarf k-faces one vertex at a time (sound: the Scarf complex is
// simplicial).  Includes the empty face.  Guarded against explosion.
std::vector<IndexFace> scarf_complex_bruteforce(const MonomialIdeal& ideal,
                                                int dim_cap = -1);

// Generators of I dividing m.
MonomialIdeal restrict_ideal(const MonomialIdeal& ideal, const Monomial& m);

// Boundary entry: column face sigma maps to row face tau = sigma minus one
// vertex with coefficient sign * (m_sigma / m_tau).
struct BoundaryEntry {
    int row = 0;   // index into the (k-1)-vertex basis
    int sign = 0;  // +1 or -1
    Monomial quotient;
};

// Homogenized chain complex of a subset-closed set of faces.  basis[k] lists
// the k-vertex faces (k >= 0; basis[0] = {empty face}); boundary[k] gives,
// per column (a k-vertex face), its signed entries into basis[k-1].
// Signs alternate by vertex position within the face.
struct ChainComplexRep {
    std::vector<std::vector<IndexFace>> basis;
    std::vector<std::vector<std::vector<BoundaryEntry>>> boundary;  // [k][col]

    // d o d = 0, checked exactly: for every k and every column, the signed
    // integer coefficients accumulated per (k-2)-row all cancel.
    bool d_squared_is_zero() const;
    // True iff some boundary entry with k >= 2 has quotient 1 (a nonzero
    // constant), i.e. the resolution is non-minimal.
    bool has_constant_entry() const;
};

// Builds the homogenized chain complex; throws std::domain_error if the face
// set is not closed under subsets.
ChainComplexRep homogenized_chain_complex(const std::vector<IndexFace>& faces,
                                          const MonomialIdeal& ideal);

} // namespace scarflab
