#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "scarflab/lattice.hpp"
#include "scarflab/scarfgeo.hpp"

using namespace scarflab;

namespace {

long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long v = 1;
    for (int j = 1; j <= k; ++j) v = v * (n - k + j) / j;
    return v;
}

} // namespace

TEST_CASE("enumerate_points basics") {
    CHECK(enumerate_points(2, 1) == std::vector<Point>{{1, 0}, {0, 1}});

    const auto p42 = enumerate_points(4, 2);
    const std::set<Point> sqfree = {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1},
                                    {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};
    int found = 0;
    for (const Point& p : p42)
        if (sqfree.count(p)) ++found;
    CHECK(found == 6);

    CHECK(enumerate_points(6, 3).size() == 56);
}

TEST_CASE("enumerate_points lengths C(q+r-1,r), uniqueness, sortedness") {
    for (int q = 1; q <= 8; ++q)
        for (int r = 0; r <= 5; ++r) {
            const auto pts = enumerate_points(q, r);
            CHECK(static_cast<long long>(pts.size()) ==
                  binom_ll(q + r - 1, r));
            std::set<Point> uniq(pts.begin(), pts.end());
            CHECK(uniq.size() == pts.size());
            for (std::size_t i = 0; i + 1 < pts.size(); ++i)
                CHECK(compare_points(pts[i], pts[i + 1]) > 0);
            for (const Point& p : pts) CHECK(weight(p) == r);
        }
}

TEST_CASE("partition_form") {
    CHECK(partition_form({2, 3, 3, 1}) == std::vector<int>{3, 3, 2, 1});
    CHECK(partition_form({0, 0, 0}) == std::vector<int>{});
    CHECK(partition_form({1, 0, 2}) == std::vector<int>{2, 1});
}

TEST_CASE("compare_points examples") {
    CHECK(compare_points({3, 0, 0}, {2, 1, 0}) > 0);
    CHECK(compare_points({2, 1, 0}, {2, 0, 1}) > 0);
    CHECK(compare_points({2, 0, 1}, {1, 2, 0}) > 0);
    CHECK(compare_points({1, 2, 0}, {2, 0, 1}) < 0);
    CHECK(compare_points({1, 2, 0}, {1, 2, 0}) == 0);
}

TEST_CASE("compare_points is a total order on N^3_4") {
    const auto pts = enumerate_points(4, 3);
    for (const Point& a : pts)
        for (const Point& b : pts) {
            const int ab = compare_points(a, b);
            const int ba = compare_points(b, a);
            CHECK(ab == -ba);                   // antisymmetry
            CHECK((ab == 0) == (a == b));       // reflexive only at equality
        }
    for (const Point& a : pts)
        for (const Point& b : pts)
            for (const Point& c : pts)
                if (compare_points(a, b) > 0 && compare_points(b, c) > 0)
                    CHECK(compare_points(a, c) > 0);  // transitivity
}

TEST_CASE("lambda is permutation invariant") {
    const auto pts = enumerate_points(4, 3);
    const std::vector<std::vector<int>> perms = {
        {1, 0, 2, 3}, {3, 2, 1, 0}, {1, 2, 3, 0}, {2, 0, 3, 1}};
    for (const Point& a : pts)
        for (const auto& pi : perms) {
            Point b(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) b[pi[i]] = a[i];
            CHECK(partition_form(a) == partition_form(b));
        }
}

TEST_CASE("compare_faces examples") {
    const Face f1 = Face::of({{3, 0}});
    CHECK(compare_faces(f1, f1) == 0);

    const Face a = Face::of({{3, 0, 0}, {0, 3, 0}});
    const Face b = Face::of({{3, 0, 0}, {2, 1, 0}});
    CHECK(compare_faces(a, b) > 0);

    CHECK(compare_faces(Face::of({{2, 1, 0}}), Face::of({{1, 1, 1}})) > 0);

    // a proper prefix compares smaller
    const Face pre = Face::of({{3, 0, 0}});
    CHECK(compare_faces(pre, a) < 0);
}

TEST_CASE("Face canonical form") {
    const Face f = Face::of({{2, 1, 0}, {3, 0, 0}, {2, 1, 0}});
    CHECK(f.size() == 2);
    CHECK(f.points().front() == Point{3, 0, 0});
    CHECK(f.q() == 3);
    CHECK(f.r() == 3);
    CHECK(Face().empty());
    CHECK(Face().q() == 0);
}

TEST_CASE("transform examples") {
    // permutation 1->3, 2->1, 3->2 applied to the three-point face
    const Face tau = Face::of({{2, 0, 2}, {1, 1, 2}, {1, 0, 3}});
    const Face gamma = Face::of({{0, 2, 2}, {1, 2, 1}, {0, 3, 1}});
    CHECK(permute(tau, {2, 0, 1}) == gamma);

    const Face sigma = Face::of({{4, 0, 0}, {3, 1, 0}, {3, 0, 1}});
    CHECK(shift(sigma, {-2, 0, 2}) == tau);
    CHECK(shift(tau, {2, 0, -2}) == sigma);

    CHECK(pad_right(Face::of({{1, 1}}), 2) == Face::of({{1, 1, 0, 0}}));
    CHECK(pad_left(Face::of({{1, 1}}), 2) == Face::of({{0, 0, 1, 1}}));

    CHECK_THROWS_AS(shift(tau, {-2, -1, 0}), std::domain_error);
}

TEST_CASE("normalize_pair examples") {
    const PairNormalForm n1 = normalize_pair({3, 0, 0, 0}, {1, 0, 1, 1});
    CHECK(n1.first == std::vector<int>{2});
    CHECK(n1.second == std::vector<int>{1, 1});
    CHECK(n1.r == 2);

    const PairNormalForm n2 = normalize_pair({2, 1, 0}, {2, 1, 0});
    CHECK(n2.first.empty());
    CHECK(n2.second.empty());
    CHECK(n2.r == 0);

    const PairNormalForm n3 = normalize_pair({2, 1, 0}, {0, 1, 2});
    CHECK(n3.first == std::vector<int>{2});
    CHECK(n3.second == std::vector<int>{2});
    CHECK(n3.r == 2);

    // symmetric in the arguments
    const PairNormalForm n4 = normalize_pair({1, 0, 1, 1}, {3, 0, 0, 0});
    CHECK(n1 == n4);
}

TEST_CASE("orbit soundness: transforms preserve geometric Scarf status") {
    std::vector<std::pair<int, int>> cases = {{2, 2}, {3, 2}, {3, 3}, {4, 3}};
    for (const auto& [q, r] : cases) {
        const auto pts = enumerate_points(q, r);
        std::vector<int> pi(q);
        for (int i = 0; i < q; ++i) pi[i] = (i + 1) % q;  // a q-cycle
        std::vector<int> v(q, 0);
        v[0] = 1;  // shift up by e_1 (always valid)
        // every edge, plus every triple when small enough
        std::vector<Face> faces;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                faces.push_back(Face::of({pts[i], pts[j]}));
        if (pts.size() <= 10)
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t j = i + 1; j < pts.size(); ++j)
                    for (std::size_t k = j + 1; k < pts.size(); ++k)
                        faces.push_back(Face::of({pts[i], pts[j], pts[k]}));
        // bypass the memoization cache so the check is not circular
        const auto scarf = [](const Face& f) {
            return !find_witness(f).has_value();
        };
        for (const Face& f : faces) {
            const bool base = scarf(f);
            CHECK(scarf(permute(f, pi)) == base);
            CHECK(scarf(pad_right(f, 1)) == base);
            CHECK(scarf(pad_left(f, 1)) == base);
            CHECK(scarf(shift(f, v)) == base);
        }
    }
}
