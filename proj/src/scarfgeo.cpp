#include "scarflab/scarfgeo.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

namespace scarflab {

int dot_eA(const Point& a, unsigned A) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (A >> i & 1u) s += a[i];
    return s;
}

std::vector<boost::rational<long long>> project_direction(unsigned A, int q) {
    if (q < 1) throw std::domain_error("project_direction: q must be >= 1");
    const long long sz = std::popcount(A);
    std::vector<boost::rational<long long>> v;
    v.reserve(q);
    for (int i = 0; i < q; ++i) {
        boost::rational<long long> e(A >> i & 1u ? 1 : 0);
        v.push_back(e - boost::rational<long long>(sz, q));
    }
    return v;
}

HalfspaceSystem halfspace_system(const Face& face) {
    if (face.empty())
        throw std::domain_error("halfspace_system: empty face");
    HalfspaceSystem sys;
    sys.q = face.q();
    sys.r = face.r();
    const unsigned top = 1u << sys.q;
    sys.lo.assign(top, 0);
    sys.hi.assign(top, 0);
    for (unsigned A = 0; A < top; ++A) {
        int lo = dot_eA(face.points().front(), A);
        int hi = lo;
        for (const Point& a : face.points()) {
            const int d = dot_eA(a, A);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        sys.lo[A] = lo;
        sys.hi[A] = hi;
    }
    return sys;
}

std::vector<Point> polytope_lattice_points(const Face& face) {
    const HalfspaceSystem sys = halfspace_system(face);
    const unsigned top = 1u << sys.q;
    std::vector<Point> out;
    for (const Point& w : enumerate_points(sys.q, sys.r)) {
        bool inside = true;
        for (unsigned A = 1; inside && A + 1 < top; ++A) {
            const int d = dot_eA(w, A);
            inside = sys.lo[A] <= d && d <= sys.hi[A];
        }
        if (inside) out.push_back(w);
    }
    return out;
}

namespace {

// One-sided system over the sub-face C: is w a solution other than C's
// points?  (w.e_A <= max_{i in C} a_i.e_A for all A.)
bool satisfies_upper(const Point& w, const std::vector<int>& hi, unsigned top) {
    for (unsigned A = 1; A + 1 < top; ++A)
        if (dot_eA(w, A) > hi[A]) return false;
    return true;
}

} // namespace

std::optional<WitnessReport> find_witness(const Face& face) {
    if (face.empty())
        throw std::domain_error("find_witness: empty face");
    const int q = face.q();
    const int d = static_cast<int>(face.size());
    if (d > 22 || q > 12)
        throw resource_error("find_witness: caps are |face| <= 22, q <= 12");
    const unsigned top = 1u << q;
    const std::vector<Point> candidates = enumerate_points(q, face.r());

    // Subsets C in decreasing |C|, lex order on the positions within each
    // size (positions refer to the face's canonical descending order).
    std::vector<std::vector<int>> subsets;
    for (unsigned m = 1; m < (1u << d); ++m) {
        std::vector<int> C;
        for (int i = 0; i < d; ++i)
            if (m >> i & 1u) C.push_back(i);
        subsets.push_back(std::move(C));
    }
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](const auto& x, const auto& y) {
                         if (x.size() != y.size()) return x.size() > y.size();
                         return x < y;
                     });

    // per-point dot tables, shared across the subset scan
    std::vector<std::vector<int>> dots(d, std::vector<int>(top, 0));
    for (int i = 0; i < d; ++i)
        for (unsigned A = 0; A < top; ++A)
            dots[i][A] = dot_eA(face.points()[i], A);

    std::vector<int> hi(top, 0);
    for (const auto& C : subsets) {
        for (unsigned A = 0; A < top; ++A) {
            int h = dots[C.front()][A];
            for (std::size_t k = 1; k < C.size(); ++k)
                h = std::max(h, dots[C[k]][A]);
            hi[A] = h;
        }
        for (const Point& w : candidates) {
            // cheap pre-filter on singleton subsets
            bool plausible = true;
            for (int i = 0; plausible && i < q; ++i)
                plausible = w[i] <= hi[1u << i];
            if (!plausible) continue;
            bool in_C = false;
            for (int i : C)
                if (face.points()[i] == w) { in_C = true; break; }
            if (in_C) continue;
            if (satisfies_upper(w, hi, top))
                return WitnessReport{w, C};
        }
    }
    return std::nullopt;
}

namespace {

// Canonical orbit key for memoization: subtract the coordinatewise meet,
// drop all-zero columns, and (when the reduced q <= 7) minimize the point
// matrix over column permutations.  Invariant under the Scarf-preserving
// transformations (shift, padding, permutation).
std::vector<Point> canonical_face_key(const Face& face) {
    const int q = face.q();
    Point meet = face.points().front();
    for (const Point& a : face.points())
        for (int i = 0; i < q; ++i) meet[i] = std::min(meet[i], a[i]);
    std::vector<int> cols;
    for (int i = 0; i < q; ++i) {
        bool zero = true;
        for (const Point& a : face.points())
            if (a[i] - meet[i] != 0) { zero = false; break; }
        if (!zero) cols.push_back(i);
    }
    auto realize = [&](const std::vector<int>& order) {
        std::vector<Point> pts;
        pts.reserve(face.size());
        for (const Point& a : face.points()) {
            Point b;
            b.reserve(order.size());
            for (int c : order) b.push_back(a[c] - meet[c]);
            pts.push_back(std::move(b));
        }
        std::sort(pts.begin(), pts.end());
        return pts;
    };
    if (cols.size() > 7) return realize(cols);
    std::vector<int> order = cols;
    std::sort(order.begin(), order.end());
    std::vector<Point> best = realize(order);
    while (std::next_permutation(order.begin(), order.end())) {
        std::vector<Point> cur = realize(order);
        if (cur < best) best = cur;
    }
    return best;
}

std::mutex g_cache_mutex;
std::map<PairNormalForm, bool> g_pair_cache;
std::map<std::vector<Point>, bool> g_face_cache;

} // namespace

bool is_scarf_face_geometric(const Face& face) {
    if (face.empty()) return true;
    if (face.size() <= 1) return true;
    if (face.size() == 2) {
        const PairNormalForm key =
            normalize_pair(face.points()[0], face.points()[1]);
        {
            std::lock_guard<std::mutex> lk(g_cache_mutex);
            const auto it = g_pair_cache.find(key);
            if (it != g_pair_cache.end()) return it->second;
        }
        const bool ok = !find_witness(face).has_value();
        std::lock_guard<std::mutex> lk(g_cache_mutex);
        g_pair_cache.emplace(key, ok);
        return ok;
    }
    const std::vector<Point> key = canonical_face_key(face);
    {
        std::lock_guard<std::mutex> lk(g_cache_mutex);
        const auto it = g_face_cache.find(key);
        if (it != g_face_cache.end()) return it->second;
    }
    const bool ok = !find_witness(face).has_value();
    std::lock_guard<std::mutex> lk(g_cache_mutex);
    g_face_cache.emplace(key, ok);
    return ok;
}

Face u_facet(const Point& a, int r) {
    const int q = static_cast<int>(a.size());
    const int s = r - weight(a);
    if (s <= 0 || s > q)
        throw std::domain_error("u_facet: need |a| < r and r - |a| <= q");
    std::vector<Point> pts;
    for (unsigned m = 0; m < (1u << q); ++m) {
        if (std::popcount(m) != s) continue;
        Point p = a;
        for (int i = 0; i < q; ++i)
            if (m >> i & 1u) p[i] += 1;
        pts.push_back(std::move(p));
    }
    return Face::of(std::move(pts));
}

std::vector<Face> u_complex_facets(int q, int r) {
    if (q < 1) throw std::domain_error("u_complex_facets: q must be >= 1");
    if (r < 0) throw std::domain_error("u_complex_facets: r must be >= 0");
    std::vector<Face> out;
    for (int s = std::max(0, r - q + 1); s <= r - 1; ++s)
        for (const Point& a : enumerate_points(q, s))
            out.push_back(u_facet(a, r));
    std::sort(out.begin(), out.end(), [](const Face& x, const Face& y) {
        return compare_faces(x, y) > 0;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) {
        // degenerate range (q = 1 or r = 0): cover every generator as a
        // single-vertex facet so the generated complex is still total
        for (const Point& a : enumerate_points(q, r))
            out.push_back(Face::of({a}));
    }
    return out;
}

} // namespace scarflab
