#include "scarflab/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace scarflab {

int weight(const Point& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

std::vector<int> partition_form(const Point& a) {
    std::vector<int> lam(a);
    std::sort(lam.begin(), lam.end(), std::greater<int>());
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    return lam;
}

namespace {

// Lexicographic three-way on integer sequences; proper prefix is smaller.
int lex3(const std::vector<int>& x, const std::vector<int>& y) {
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] != y[i]) return x[i] > y[i] ? 1 : -1;
    }
    if (x.size() == y.size()) return 0;
    return x.size() > y.size() ? 1 : -1;
}

} // namespace

int compare_points(const Point& a, const Point& b) {
    if (a.size() != b.size() || weight(a) != weight(b))
        throw std::invalid_argument("compare_points: mismatched (q, r)");
    const int c = lex3(partition_form(a), partition_form(b));
    if (c != 0) return c;
    return lex3(a, b);  // partitions of equal r are never proper prefixes
}

Face Face::of(std::vector<Point> pts) {
    if (!pts.empty()) {
        const std::size_t q = pts.front().size();
        const int r = weight(pts.front());
        for (const Point& p : pts) {
            if (p.size() != q || weight(p) != r)
                throw std::invalid_argument("Face: points must share (q, r)");
            for (int c : p)
                if (c < 0) throw std::invalid_argument("Face: negative coordinate");
        }
    }
    std::sort(pts.begin(), pts.end(),
              [](const Point& x, const Point& y) { return compare_points(x, y) > 0; });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Face f;
    f.pts_ = std::move(pts);
    return f;
}

int Face::q() const { return pts_.empty() ? 0 : static_cast<int>(pts_.front().size()); }
int Face::r() const { return pts_.empty() ? 0 : weight(pts_.front()); }

int compare_faces(const Face& s, const Face& t) {
    const auto& x = s.points();
    const auto& y = t.points();
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] != y[i]) return compare_points(x[i], y[i]);
    }
    if (x.size() == y.size()) return 0;
    return x.size() > y.size() ? 1 : -1;  // proper prefix is smaller
}

namespace {

void gen_points(int q, int r, Point& cur, std::vector<Point>& out) {
    if (q == 1) {
        cur.push_back(r);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = r; a >= 0; --a) {
        cur.push_back(a);
        gen_points(q - 1, r - a, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Point> enumerate_points(int q, int r) {
    if (q < 1) throw std::domain_error("enumerate_points: q must be >= 1");
    if (r < 0) throw std::domain_error("enumerate_points: r must be >= 0");
    std::vector<Point> out;
    Point cur;
    gen_points(q, r, cur, out);
    std::sort(out.begin(), out.end(),
              [](const Point& x, const Point& y) { return compare_points(x, y) > 0; });
    return out;
}

Face permute(const Face& f, const std::vector<int>& pi) {
    const int q = f.q();
    if (!f.empty()) {
        if (static_cast<int>(pi.size()) != q)
            throw std::domain_error("permute: permutation size must equal q");
        std::vector<bool> seen(q, false);
        for (int v : pi) {
            if (v < 0 || v >= q || seen[v])
                throw std::domain_error("permute: not a bijection on [q]");
            seen[v] = true;
        }
    }
    std::vector<Point> out;
    out.reserve(f.size());
    for (const Point& a : f.points()) {
        Point b(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) b[pi[i]] = a[i];
        out.push_back(std::move(b));
    }
    return Face::of(std::move(out));
}

Face pad_right(const Face& f, int p) {
    if (p < 0) throw std::domain_error("pad_right: p must be >= 0");
    std::vector<Point> out;
    out.reserve(f.size());
    for (const Point& a : f.points()) {
        Point b(a);
        b.insert(b.end(), p, 0);
        out.push_back(std::move(b));
    }
    return Face::of(std::move(out));
}

Face pad_left(const Face& f, int p) {
    if (p < 0) throw std::domain_error("pad_left: p must be >= 0");
    std::vector<Point> out;
    out.reserve(f.size());
    for (const Point& a : f.points()) {
        Point b(a.size() + p, 0);
        std::copy(a.begin(), a.end(), b.begin() + p);
        out.push_back(std::move(b));
    }
    return Face::of(std::move(out));
}

Face shift(const Face& f, const std::vector<int>& v) {
    if (!f.empty() && v.size() != f.points().front().size())
        throw std::domain_error("shift: v must have q entries");
    std::vector<Point> out;
    out.reserve(f.size());
    for (const Point& a : f.points()) {
        Point b(a);
        for (std::size_t i = 0; i < b.size(); ++i) {
            b[i] += v[i];
            if (b[i] < 0)
                throw std::domain_error("shift: negative coordinate produced");
        }
        out.push_back(std::move(b));
    }
    return Face::of(std::move(out));
}

bool PairNormalForm::operator<(const PairNormalForm& o) const {
    if (r != o.r) return r < o.r;
    if (first != o.first) return first < o.first;
    return second < o.second;
}

PairNormalForm normalize_pair(const Point& a, const Point& b) {
    if (a.size() != b.size() || weight(a) != weight(b))
        throw std::invalid_argument("normalize_pair: mismatched (q, r)");
    Point ra(a.size()), rb(b.size());
    int meet = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int m = std::min(a[i], b[i]);
        meet += m;
        ra[i] = a[i] - m;
        rb[i] = b[i] - m;
    }
    PairNormalForm nf;
    nf.first = partition_form(ra);
    nf.second = partition_form(rb);
    nf.r = weight(a) - meet;
    if (lex3(nf.first, nf.second) < 0) std::swap(nf.first, nf.second);
    return nf;
}

} // namespace scarflab
