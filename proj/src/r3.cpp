#include "scarflab/r3.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "scarflab/scarfgeo.hpp"

namespace scarflab {

namespace {

// Shape of a weight-3 point: (3), (2,1), or (1,1,1), with 0-based indices.
struct Shape3 {
    int kind;    // 3 = triple, 2 = double+single, 1 = square-free
    int dbl = -1;   // index with coordinate >= 2 (kind 2: the 2; kind 3: the 3)
    int sgl = -1;   // kind 2: the single index
    std::vector<int> supp;  // support, ascending
};

Shape3 shape_of(const Point& a) {
    Shape3 s;
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        if (a[i] > 0) s.supp.push_back(i);
        if (a[i] >= 2) s.dbl = i;
    }
    if (s.supp.size() == 1) s.kind = 3;
    else if (s.supp.size() == 2) {
        s.kind = 2;
        s.sgl = a[s.supp[0]] == 1 ? s.supp[0] : s.supp[1];
    } else s.kind = 1;
    return s;
}

bool contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

Point mk(int q, std::initializer_list<std::pair<int, int>> add) {
    Point p(q, 0);
    for (auto [i, v] : add) p[i] += v;
    return p;
}

} // namespace

EdgeClass edge_type(const Point& a, const Point& b) {
    if (weight(a) != 3 || weight(b) != 3 || a.size() != b.size())
        throw std::domain_error("edge_type: points must lie in N^3_q");
    if (a == b) throw std::domain_error("edge_type: points must be distinct");
    Shape3 sa = shape_of(a), sb = shape_of(b);
    const Point* pa = &a;
    const Point* pb = &b;
    if (sa.kind < sb.kind) {  // order shapes: triple, double, square-free
        std::swap(sa, sb);
        std::swap(pa, pb);
    }
    if (sa.kind == 3 && sb.kind == 3)
        return {false, "{3e_a, 3e_b}"};
    if (sa.kind == 3 && sb.kind == 2) {
        const int u = sa.dbl;
        if (sb.dbl == u) return {true, "{3e_u, 2e_u+e_j}"};
        if (sb.sgl == u) return {false, "{3e_a, e_a+2e_b}"};
        return {false, "{3e_a, 2e_b+e_c}"};
    }
    if (sa.kind == 3 && sb.kind == 1) {
        if (contains(sb.supp, sa.dbl)) return {false, "{3e_a, e_a+e_b+e_c}"};
        return {false, "{3e_a, e_b+e_c+e_d}"};
    }
    if (sa.kind == 2 && sb.kind == 2) {
        if (sa.dbl == sb.dbl) return {true, "{2e_u+e_i, 2e_u+e_j}"};
        if (sa.dbl == sb.sgl && sb.dbl == sa.sgl)
            return {true, "{2e_u+e_i, 2e_i+e_u}"};
        if (sa.dbl == sb.sgl || sb.dbl == sa.sgl)
            return {false, "{2e_a+e_b, 2e_b+e_c}"};
        if (sa.sgl == sb.sgl) return {false, "{2e_a+e_b, e_b+2e_c}"};
        return {false, "{2e_a+e_b, 2e_c+e_d}"};
    }
    if (sa.kind == 2 && sb.kind == 1) {
        const bool has_d = contains(sb.supp, sa.dbl);
        const bool has_s = contains(sb.supp, sa.sgl);
        if (has_d && has_s) return {true, "{2e_u+e_i, e_u+e_i+e_j}"};
        if (has_d) return {true, "{2e_u+e_i, e_u+e_j+e_k}"};
        if (has_s) return {false, "{2e_a+e_b, e_b+e_c+e_d}"};
        return {true, "{2e_i+e_j, e_u+e_v+e_w}"};
    }
    // both square-free: always Scarf; name by support overlap
    int overlap = 0;
    for (int i : sa.supp)
        if (contains(sb.supp, i)) ++overlap;
    if (overlap == 2) return {true, "{e_u+e_v+e_i, e_u+e_v+e_j}"};
    if (overlap == 1) return {true, "{e_u+e_i+e_j, e_u+e_v+e_w}"};
    return {true, "{e_i+e_j+e_k, e_u+e_v+e_w}"};
}

Face w_facet(const std::vector<int>& P, int a, int q) {
    std::vector<bool> inP(q, false);
    for (int p : P) {
        if (p < 1 || p > q) throw std::domain_error("w_facet: P not in [q]");
        inP[p - 1] = true;
    }
    if (a < 1 || a > q || !inP[a - 1])
        throw std::domain_error("w_facet: need a in P");
    const int a0 = a - 1;
    std::vector<Point> pts;
    for (int p : P)
        if (p != a) pts.push_back(mk(q, {{a0, 2}, {p - 1, 1}}));
    for (int j = 0; j < q; ++j)
        for (int k = j + 1; k < q; ++k)
            for (int l = k + 1; l < q; ++l)
                if (!inP[j] && !inP[k] && !inP[l])
                    pts.push_back(mk(q, {{j, 1}, {k, 1}, {l, 1}}));
    for (int j = 0; j < q; ++j)
        for (int k = j + 1; k < q; ++k)
            if (j != a0 && k != a0)
                pts.push_back(mk(q, {{a0, 1}, {j, 1}, {k, 1}}));
    return Face::of(std::move(pts));
}

std::string FacetDescriptor::str() const {
    auto idx = [](int v) { return std::to_string(v); };
    switch (family) {
        case Family::Uq: return "U_q";
        case Family::U_ea: return "U_{e_" + idx(a) + "}";
        case Family::U_2ea: return "U_{2e_" + idx(a) + "}";
        case Family::U_eaeb: return "U_{e_" + idx(a) + "+e_" + idx(b) + "}";
        case Family::W: {
            std::string s = "W_{{";
            for (std::size_t i = 0; i < P.size(); ++i) {
                if (i) s += ",";
                s += idx(P[i]);
            }
            return s + "}," + idx(a) + "}";
        }
    }
    return "?";
}

std::vector<std::pair<FacetDescriptor, Face>> facets_r3(int q) {
    if (q < 1) throw std::domain_error("facets_r3: q must be >= 1");
    using Fam = FacetDescriptor::Family;
    std::vector<std::pair<FacetDescriptor, Face>> out;
    auto add = [&](FacetDescriptor d, Face f) {
        for (const auto& [d0, f0] : out)
            if (f0 == f) return;  // dedup identical realizations
        out.emplace_back(std::move(d), std::move(f));
    };
    // U_{2e_a}, q >= 1
    for (int a = 1; a <= q; ++a)
        add({Fam::U_2ea, a, 0, {}}, u_facet(mk(q, {{a - 1, 2}}), 3));
    // U_{e_a+e_b}, q >= 2
    for (int a = 1; a <= q; ++a)
        for (int b = a + 1; b <= q; ++b)
            add({Fam::U_eaeb, a, b, {}},
                u_facet(mk(q, {{a - 1, 1}, {b - 1, 1}}), 3));
    // U_{e_a}, q >= 3
    if (q >= 3)
        for (int a = 1; a <= q; ++a)
            add({Fam::U_ea, a, 0, {}}, u_facet(mk(q, {{a - 1, 1}}), 3));
    // U_q, q >= 4
    if (q >= 4) add({Fam::Uq, 0, 0, {}}, u_facet(Point(q, 0), 3));
    // W_{P,a}, 2 <= |P| <= q-3
    for (int s = 2; s <= q - 3; ++s) {
        std::vector<int> sel(s);
        // iterate over all s-subsets P of [q]
        for (int i = 0; i < s; ++i) sel[i] = i + 1;
        while (true) {
            for (int a : sel)
                add({Fam::W, a, 0, sel}, w_facet(sel, a, q));
            int i = s - 1;
            while (i >= 0 && sel[i] == q - s + i + 1) --i;
            if (i < 0) break;
            ++sel[i];
            for (int j = i + 1; j < s; ++j) sel[j] = sel[j - 1] + 1;
        }
    }
    return out;
}

std::vector<NonfaceDescriptor> minimal_nonfaces_r3(int q) {
    if (q < 1) throw std::domain_error("minimal_nonfaces_r3: q must be >= 1");
    std::vector<NonfaceDescriptor> out;
    auto add = [&](const char* t, std::vector<Point> pts) {
        out.push_back({t, Face::of(std::move(pts))});
    };
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (a == b) continue;
            if (a < b)
                add("{3e_a, 3e_b}", {mk(q, {{a, 3}}), mk(q, {{b, 3}})});
            add("{3e_a, e_a+2e_b}",
                {mk(q, {{a, 3}}), mk(q, {{a, 1}, {b, 2}})});
            for (int c = 0; c < q; ++c) {
                if (c == a || c == b) continue;
                add("{3e_a, 2e_b+e_c}",
                    {mk(q, {{a, 3}}), mk(q, {{b, 2}, {c, 1}})});
                if (b < c)
                    add("{3e_a, e_a+e_b+e_c}",
                        {mk(q, {{a, 3}}), mk(q, {{a, 1}, {b, 1}, {c, 1}})});
                add("{2e_a+e_b, 2e_b+e_c}",
                    {mk(q, {{a, 2}, {b, 1}}), mk(q, {{b, 2}, {c, 1}})});
                if (a < c)
                    add("{2e_a+e_b, e_b+2e_c}",
                        {mk(q, {{a, 2}, {b, 1}}), mk(q, {{c, 2}, {b, 1}})});
                for (int d = 0; d < q; ++d) {
                    if (d == a || d == b || d == c) continue;
                    if (b < c && c < d)
                        add("{3e_a, e_b+e_c+e_d}",
                            {mk(q, {{a, 3}}),
                             mk(q, {{b, 1}, {c, 1}, {d, 1}})});
                    if (std::make_pair(a, b) < std::make_pair(c, d))
                        add("{2e_a+e_b, 2e_c+e_d}",
                            {mk(q, {{a, 2}, {b, 1}}), mk(q, {{c, 2}, {d, 1}})});
                    if (c < d)
                        add("{2e_a+e_b, e_b+e_c+e_d}",
                            {mk(q, {{a, 2}, {b, 1}}),
                             mk(q, {{b, 1}, {c, 1}, {d, 1}})});
                    for (int e = d + 1; e < q; ++e) {
                        if (e == a || e == b) continue;
                        if (a < b && c < d)
                            add("{2e_a+e_b, e_a+2e_b, e_c+e_d+e_e}",
                                {mk(q, {{a, 2}, {b, 1}}),
                                 mk(q, {{a, 1}, {b, 2}}),
                                 mk(q, {{c, 1}, {d, 1}, {e, 1}})});
                    }
                }
            }
        }
    return out;
}

namespace {

const std::vector<std::pair<FacetDescriptor, Face>>& cached_facets(int q) {
    static std::map<int, std::vector<std::pair<FacetDescriptor, Face>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, facets_r3(q)).first;
    return it->second;
}

const std::vector<NonfaceDescriptor>& cached_nonfaces(int q) {
    static std::map<int, std::vector<NonfaceDescriptor>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, minimal_nonfaces_r3(q)).first;
    return it->second;
}

} // namespace

bool is_face_r3(const Face& face) {
    if (face.empty()) return true;
    if (face.r() != 3) throw std::domain_error("is_face_r3: r must be 3");
    const int q = face.q();
    // Route A: contained in some facet
    bool route_a = false;
    for (const auto& [d, facet] : cached_facets(q)) {
        bool sub = true;
        for (const Point& p : face.points()) {
            if (std::find(facet.points().begin(), facet.points().end(), p) ==
                facet.points().end()) {
                sub = false;
                break;
            }
        }
        if (sub) { route_a = true; break; }
    }
    // Route B: contains no minimal nonface
    bool route_b = true;
    for (const NonfaceDescriptor& nf : cached_nonfaces(q)) {
        bool sub = true;
        for (const Point& p : nf.face.points()) {
            if (std::find(face.points().begin(), face.points().end(), p) ==
                face.points().end()) {
                sub = false;
                break;
            }
        }
        if (sub) { route_b = false; break; }
    }
    if (route_a != route_b)
        throw invariant_violation("is_face_r3: facet route and nonface route disagree");
    return route_a;
}

std::vector<bigint> f_vector_enumerated(int q) {
    if (q < 1) throw std::domain_error("f_vector_enumerated: q must be >= 1");
    if (q > 6) throw resource_error("f_vector_enumerated: q capped at 6");
    const std::vector<Point> verts = enumerate_points(q, 3);
    std::unordered_map<std::string, int> vid;  // point -> global bit index
    auto key = [](const Point& p) {
        std::string s;
        for (int c : p) s.push_back(static_cast<char>('0' + c));
        return s;
    };
    for (std::size_t i = 0; i < verts.size(); ++i)
        vid[key(verts[i])] = static_cast<int>(i);

    std::unordered_set<std::uint64_t> seen;
    for (const auto& [d, facet] : facets_r3(q)) {
        std::vector<int> bits;
        for (const Point& p : facet.points()) bits.push_back(vid.at(key(p)));
        const std::size_t n = bits.size();
        for (std::uint64_t m = 1; m < (1ull << n); ++m) {
            std::uint64_t mask = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (m >> i & 1ull) mask |= 1ull << bits[i];
            seen.insert(mask);
        }
    }
    std::vector<bigint> f;
    for (std::uint64_t mask : seen) {
        const int i = std::popcount(mask) - 1;
        if (i >= static_cast<int>(f.size())) f.resize(i + 1);
        f[i] += 1;
    }
    return f;
}

} // namespace scarflab
