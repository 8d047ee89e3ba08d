#pragma once

#include <cstdint>
#include <vector>

#include "scarflab/common.hpp"

namespace scarflab {

// A lattice point a in N^r_q: q nonnegative coordinates summing to r.
using Point = std::vector<int>;

// Sum of coordinates |a|.
int weight(const Point& a);

// Partition form lambda(a): coordinates sorted non-increasingly, trailing
// zeros dropped.  lambda((2,3,3,1)) = (3,3,2,1).
std::vector<int> partition_form(const Point& a);

// Three-way comparison under the total order >= of the vertex order:
//   a > b  iff  lambda(a) >_lex lambda(b), or lambda(a) = lambda(b) and
//   a >_lex b  (standard lexicographic order, first index may differ).
// Returns +1 if a > b, 0 if equal, -1 if a < b.  Requires equal q and r.
int compare_points(const Point& a, const Point& b);

// A face of the Taylor complex: distinct Points with common (q, r), stored
// strictly descending under the vertex order.
class Face {
public:
    Face() = default;

    // Sorts descending, removes duplicates, validates common (q, r).
    static Face of(std::vector<Point> pts);

    const std::vector<Point>& points() const { return pts_; }
    bool empty() const { return pts_.empty(); }
    std::size_t size() const { return pts_.size(); }
    int q() const;  // 0 for the empty face
    int r() const;  // 0 for the empty face

    bool operator==(const Face& o) const { return pts_ == o.pts_; }

private:
    std::vector<Point> pts_;
};

// Three-way comparison of faces: lexicographic on the descending vertex
// sequences; a proper prefix compares smaller.  Returns +1 / 0 / -1.
int compare_faces(const Face& s, const Face& t);

// All of N^r_q exactly once, sorted descending under the vertex order.
// Length C(q+r-1, r).
std::vector<Point> enumerate_points(int q, int r);

// Face transformations (each preserves Scarf-ness).
// pi maps index i (0-based) to pi[i]; the image point b satisfies
// b[pi[i]] = a[i].
Face permute(const Face& f, const std::vector<int>& pi);
Face pad_right(const Face& f, int p);  // append p zero coordinates
Face pad_left(const Face& f, int p);   // prepend p zero coordinates
// Adds v to every point; v may have negative entries but every resulting
// coordinate must stay >= 0, otherwise std::domain_error.  Changes r by |v|.
Face shift(const Face& f, const std::vector<int>& v);

// Canonical representative of the orbit of an edge {a, b} under shift and
// permutation: subtract the meet a/\b from both, take partition forms, put
// the lexicographically larger partition first.  r' = r - |a/\b|.
struct PairNormalForm {
    std::vector<int> first;   // partition form, >=_lex second
    std::vector<int> second;  // partition form
    int r = 0;                // shift residual r'

    bool operator==(const PairNormalForm&) const = default;
    bool operator<(const PairNormalForm& o) const;
};
PairNormalForm normalize_pair(const Point& a, const Point& b);

} // namespace scarflab
