#include "scarflab/morse.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <unordered_map>

namespace scarflab {

namespace {

Point mk(int q, std::initializer_list<std::pair<int, int>> add) {
    Point p(q, 0);
    for (auto [i, v] : add) p[i] += v;
    return p;
}

std::vector<int> support(const Point& a) {
    std::vector<int> s;
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        if (a[i] > 0) s.push_back(i);
    return s;
}

// n = 2e_dbl + e_sgl?  Returns {dbl, sgl} 0-based or nullopt.
std::optional<std::pair<int, int>> as_double(const Point& a) {
    int dbl = -1, sgl = -1;
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        if (a[i] == 2) dbl = i;
        else if (a[i] == 1) sgl = i;
        else if (a[i] != 0) return std::nullopt;
    }
    if (dbl < 0 || sgl < 0) return std::nullopt;
    return std::make_pair(dbl, sgl);
}

bool is_squarefree(const Point& a) {
    for (int c : a)
        if (c > 1) return false;
    return true;
}

// The per-template witness table picks, inside the allowed support, the
// index where n has a repeated coordinate when there is one (that choice is
// the one dividing lcm(sigma)); otherwise the minimum of the support.
int omega_third_index(const Point& n, std::initializer_list<int> excluded) {
    std::vector<int> s = support(n);
    std::erase_if(s, [&](int x) {
        return std::find(excluded.begin(), excluded.end(), x) != excluded.end();
    });
    for (int x : s)
        if (n[x] >= 2) return x;
    return s.front();
}

int triple_index(const Point& a) {  // a == 3e_i ? i : -1 (0-based)
    int idx = -1;
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        if (a[i] == 3) idx = i;
        else if (a[i] != 0) return -1;
    }
    return idx;
}

bool is_minimal_nonface(const Face& sigma) {
    if (is_face_r3(sigma)) return false;
    const auto& pts = sigma.points();
    for (std::size_t d = 0; d < pts.size(); ++d) {
        std::vector<Point> sub;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != d) sub.push_back(pts[j]);
        if (!is_face_r3(Face::of(std::move(sub)))) return false;
    }
    return true;
}

} // namespace

MorseClass classify_nonface(const Face& sigma) {
    if (sigma.r() != 3)
        throw std::domain_error("classify_nonface: r must be 3");
    if (!is_minimal_nonface(sigma))
        throw std::domain_error("classify_nonface: not a minimal nonface");
    const int q = sigma.q();
    const auto& pts = sigma.points();
    std::vector<MorseClass> matches;

    if (pts.size() == 2) {
        for (int head = 0; head < 2; ++head) {
            const Point& h = pts[head];
            const Point& n = pts[1 - head];
            // Type I: h = eps_i^3, n not of the form eps_i^2 eps_j, h > n
            const int ti = triple_index(h);
            if (ti >= 0) {
                const auto nd = as_double(n);
                const bool forbidden = nd && nd->first == ti;
                if (!forbidden && compare_points(h, n) > 0) {
                    MorseClass c;
                    c.type = 1;
                    c.i = ti + 1;
                    const int j = omega_third_index(n, {ti});
                    c.j = j + 1;
                    c.omega = mk(q, {{ti, 2}, {j, 1}});
                    matches.push_back(std::move(c));
                }
            }
            // Type III: h = eps_i^2 eps_j, n in Q_{i,j}
            const auto hd = as_double(h);
            if (hd) {
                const int i = hd->first, j = hd->second;
                bool in_Q = false;
                if (const auto nd = as_double(n)) {
                    // Q first branch: eps_a^2 eps_b with a != i,
                    // h > n, n != eps_i eps_j^2
                    const bool is_eij2 = nd->first == j && nd->second == i;
                    in_Q = nd->first != i && !is_eij2 &&
                           compare_points(h, n) > 0;
                } else if (is_squarefree(n) && n[j] == 1 && n[i] == 0) {
                    // Q second branch: eps_j * U^2 over [q] \ {i, j}
                    in_Q = true;
                }
                if (in_Q) {
                    MorseClass c;
                    c.type = 3;
                    c.i = i + 1;
                    c.j = j + 1;
                    const int k = omega_third_index(n, {i, j});
                    c.omega = mk(q, {{i, 1}, {j, 1}, {k, 1}});
                    matches.push_back(std::move(c));
                }
            }
        }
    } else if (pts.size() == 3) {
        // Type II: {eps_i^2 eps_j, eps_i eps_j^2, n}, i < j, n square-free
        // with support in [q] \ {i, j}
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                if (a == b) continue;
                const int n_idx = 3 - a - b;
                const auto d1 = as_double(pts[a]);
                const auto d2 = as_double(pts[b]);
                const Point& n = pts[n_idx];
                if (!d1 || !d2 || !is_squarefree(n)) continue;
                const int i = d1->first, j = d1->second;
                if (!(i < j)) continue;
                if (d2->first != j || d2->second != i) continue;
                if (n[i] != 0 || n[j] != 0) continue;
                MorseClass c;
                c.type = 2;
                c.i = i + 1;
                c.j = j + 1;
                c.omega = mk(q, {{i, 1}, {j, 1}, {support(n).front(), 1}});
                matches.push_back(std::move(c));
            }
    }

    if (matches.size() != 1)
        throw invariant_violation(
            "classify_nonface: expected exactly one matching type, got " +
            std::to_string(matches.size()));
    return matches.front();
}

Point omega(const Face& sigma) { return classify_nonface(sigma).omega; }

Face partition_class(const Face& tau,
                     const std::vector<NonfaceDescriptor>& N) {
    const auto& pts = tau.points();
    const Face* best = nullptr;
    for (const NonfaceDescriptor& nf : N) {
        bool sub = true;
        for (const Point& p : nf.face.points())
            if (std::find(pts.begin(), pts.end(), p) == pts.end()) {
                sub = false;
                break;
            }
        if (sub && (!best || compare_faces(nf.face, *best) > 0))
            best = &nf.face;
    }
    if (!best)
        throw std::domain_error("partition_class: tau is a face");
    return *best;
}

bool has_directed_cycle(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> color(n, 0);  // 0 white, 1 gray, 2 black
    std::vector<std::pair<int, std::size_t>> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] != 0) continue;
        color[s] = 1;
        stack.emplace_back(s, 0);
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next < adj[u].size()) {
                const int v = adj[u][next++];
                if (color[v] == 1) return true;
                if (color[v] == 0) {
                    color[v] = 1;
                    stack.emplace_back(v, 0);
                }
            } else {
                color[u] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

namespace {

// Bitmask machinery over the canonical descending vertex list of N^3_q.
struct Context {
    int q = 0;
    std::vector<Point> verts;
    std::vector<std::uint64_t> nonface_masks;  // descending by face order
    std::vector<int> omega_bit;                // per nonface
    std::uint64_t full = 0;

    int vertex_index(const Point& p) const {
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (verts[i] == p) return static_cast<int>(i);
        throw std::logic_error("vertex_index: point not found");
    }

    // Class of a nonface cell: index of the first (largest) minimal nonface
    // contained in it, or -1 if the cell is a face.
    int cls(std::uint64_t cell) const {
        for (std::size_t c = 0; c < nonface_masks.size(); ++c)
            if ((nonface_masks[c] & cell) == nonface_masks[c])
                return static_cast<int>(c);
        return -1;
    }
};

Context make_context(int q) {
    Context ctx;
    ctx.q = q;
    ctx.verts = enumerate_points(q, 3);
    ctx.full = ctx.verts.size() >= 64
                   ? ~0ull
                   : (1ull << ctx.verts.size()) - 1;
    std::vector<NonfaceDescriptor> N = minimal_nonfaces_r3(q);
    std::sort(N.begin(), N.end(),
              [](const NonfaceDescriptor& x, const NonfaceDescriptor& y) {
                  return compare_faces(x.face, y.face) > 0;
              });
    for (const NonfaceDescriptor& nf : N) {
        std::uint64_t m = 0;
        for (const Point& p : nf.face.points())
            m |= 1ull << ctx.vertex_index(p);
        ctx.nonface_masks.push_back(m);
        ctx.omega_bit.push_back(ctx.vertex_index(omega(nf.face)));
    }
    return ctx;
}

} // namespace

MorseVerdict verify_matching_full(int q) {
    const Context ctx = make_context(q);
    const int n = static_cast<int>(ctx.verts.size());
    if (n > 20)
        throw resource_error(
            "verify_matching_full: full scale requires C(q+2,3) <= 20");
    const std::uint64_t total = 1ull << n;

    MorseVerdict v;
    v.cells = total - 1;  // nonempty cells of the Taylor complex

    // classes
    std::vector<std::int16_t> cls(total, -1);
    for (std::uint64_t cell = 1; cell < total; ++cell)
        cls[cell] = static_cast<std::int16_t>(ctx.cls(cell));

    // packed lcm labels: 2 bits per variable x_A (exponents <= 3)
    const int nv = (1 << q) - 1;
    std::vector<std::uint64_t> genlab(n, 0);
    for (int t = 0; t < n; ++t)
        for (int A = 1; A <= nv; ++A) {
            int e = 0;
            for (int i = 0; i < q; ++i)
                if (A >> i & 1) e += ctx.verts[t][i];
            genlab[t] |= static_cast<std::uint64_t>(e) << (2 * (A - 1));
        }
    auto fieldmax = [nv](std::uint64_t x, std::uint64_t y) {
        std::uint64_t out = 0;
        for (int f = 0; f < nv; ++f) {
            const std::uint64_t a = x >> (2 * f) & 3u;
            const std::uint64_t b = y >> (2 * f) & 3u;
            out |= std::max(a, b) << (2 * f);
        }
        return out;
    };
    std::vector<std::uint64_t> label(total, 0);
    for (std::uint64_t cell = 1; cell < total; ++cell)
        label[cell] = fieldmax(label[cell & (cell - 1)],
                               genlab[std::countr_zero(cell)]);

    // perfection + homogeneity
    v.perfect = true;
    v.homogeneous = true;
    std::uint64_t nonfaces = 0;
    for (std::uint64_t cell = 1; cell < total; ++cell) {
        if (cls[cell] < 0) continue;
        ++nonfaces;
        const std::uint64_t w = 1ull << ctx.omega_bit[cls[cell]];
        const std::uint64_t partner = cell ^ w;
        if (partner == 0 || cls[partner] != cls[cell]) v.perfect = false;
        else if (label[partner] != label[cell]) v.homogeneous = false;
    }
    v.nonfaces = nonfaces;
    v.critical = v.cells - nonfaces;

    // critical census vs the label oracle
    std::set<std::uint64_t> oracle;
    for (const IndexFace& f :
         scarf_complex_bruteforce(extremal_power_ideal(q, 3))) {
        if (f.empty()) continue;
        std::uint64_t m = 0;
        for (int i : f) m |= 1ull << i;
        oracle.insert(m);
    }
    v.critical_equals_scarf = oracle.size() == v.critical;
    if (v.critical_equals_scarf)
        for (std::uint64_t cell = 1; cell < total; ++cell)
            if ((cls[cell] < 0) != (oracle.count(cell) > 0)) {
                v.critical_equals_scarf = false;
                break;
            }

    // acyclicity, one dimension layer at a time: nodes are matched upper
    // cells (omega of their class inside); edge g -> g' when an unmatched
    // down-step from g is the lower partner of g'
    v.acyclic = true;
    for (int d = 2; d <= n && v.acyclic; ++d) {
        std::unordered_map<std::uint64_t, int> id;
        std::vector<std::uint64_t> nodes;
        for (std::uint64_t cell = 1; cell < total; ++cell) {
            if (std::popcount(cell) != d || cls[cell] < 0) continue;
            if (cell & (1ull << ctx.omega_bit[cls[cell]])) {
                id.emplace(cell, static_cast<int>(nodes.size()));
                nodes.push_back(cell);
            }
        }
        std::vector<std::vector<int>> adj(nodes.size());
        for (std::size_t u = 0; u < nodes.size(); ++u) {
            const std::uint64_t cell = nodes[u];
            const int wbit = ctx.omega_bit[cls[cell]];
            for (std::uint64_t rest = cell; rest; rest &= rest - 1) {
                const int vb = std::countr_zero(rest);
                if (vb == wbit) continue;
                const std::uint64_t down = cell ^ (1ull << vb);
                if (cls[down] < 0) continue;
                const int wb2 = ctx.omega_bit[cls[down]];
                if (down & (1ull << wb2)) continue;  // down not matched upward
                const std::uint64_t up = down | (1ull << wb2);
                if (up == cell) continue;
                const auto it = id.find(up);
                if (it != id.end()) adj[u].push_back(it->second);
            }
        }
        if (has_directed_cycle(adj)) v.acyclic = false;
    }
    return v;
}

StabilityReport class_stability_sampled(int q, std::uint64_t samples,
                                        std::uint64_t seed) {
    const Context ctx = make_context(q);
    const int n = static_cast<int>(ctx.verts.size());
    if (n >= 64)
        throw resource_error("class_stability_sampled: vertex cap is 63");
    std::mt19937_64 rng(seed);

    StabilityReport rep;
    rep.samples = samples;
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::uint64_t tau = 0;
        int c = -1;
        do {
            tau = rng() & ctx.full;
            c = tau ? ctx.cls(tau) : -1;
        } while (c < 0);

        bool ok = true;
        const std::uint64_t sigma = ctx.nonface_masks[c];
        const std::uint64_t w = 1ull << ctx.omega_bit[c];
        // adding omega(sigma) stays in the class
        if (ctx.cls(tau | w) != c) ok = false;
        // removing omega(sigma) stays in the class when sigma survives
        if ((tau & w) && (sigma & ~(tau & ~w)) == 0)
            if (ctx.cls(tau & ~w) != c) ok = false;
        if (ok) ++rep.passed;
    }
    return rep;
}

} // namespace scarflab
