#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "scarflab/ideal.hpp"
#include "scarflab/scarfgeo.hpp"

using namespace scarflab;

namespace {

// The running four-variable example ideal I = (xy, yz, zu).
MonomialIdeal xyzu_ideal() {
    MonomialIdeal I;
    I.nvars = 4;
    I.varnames = {"x", "y", "z", "u"};
    auto mono = [](std::initializer_list<int> vars) {
        Monomial m;
        for (int v : vars) m.set_exponent(v, 1);
        return m;
    };
    I.gens = {mono({0, 1}), mono({1, 2}), mono({2, 3})};
    I.minimal = true;
    return I;
}

// Index of a point within enumerate_points(q, r).
int point_index(const std::vector<Point>& pts, const Point& p) {
    const auto it = std::find(pts.begin(), pts.end(), p);
    REQUIRE(it != pts.end());
    return static_cast<int>(it - pts.begin());
}

// The subset-closure of a list of point-faces, as sorted index faces.
std::set<IndexFace> closure_as_index_faces(const std::vector<Face>& facets,
                                           int q, int r) {
    const auto pts = enumerate_points(q, r);
    std::set<IndexFace> out;
    out.insert(IndexFace{});
    for (const Face& f : facets) {
        IndexFace idx;
        for (const Point& p : f.points()) idx.push_back(point_index(pts, p));
        std::sort(idx.begin(), idx.end());
        const std::size_t n = idx.size();
        for (std::size_t m = 1; m < (std::size_t{1} << n); ++m) {
            IndexFace sub;
            for (std::size_t i = 0; i < n; ++i)
                if (m >> i & 1u) sub.push_back(idx[i]);
            out.insert(sub);
        }
    }
    return out;
}

std::multiset<Monomial> entry_multiset(const ChainComplexRep& C, int k) {
    std::multiset<Monomial> out;
    for (const auto& col : C.boundary[k])
        for (const BoundaryEntry& e : col) out.insert(e.quotient);
    return out;
}

} // namespace

TEST_CASE("Monomial arithmetic") {
    Monomial m = Monomial::variable(0, 2);
    m.set_exponent(3, 1);
    CHECK(m.exponent(0) == 2);
    CHECK(m.exponent(1) == 0);
    const Monomial d = Monomial::variable(0, 1);
    CHECK(d.divides(m));
    CHECK_FALSE(m.divides(d));
    CHECK(m.quotient(d) == [] {
        Monomial e = Monomial::variable(0, 1);
        e.set_exponent(3, 1);
        return e;
    }());
    CHECK_THROWS_AS(d.quotient(m), std::domain_error);
    CHECK(Monomial::unit().is_unit());
    CHECK(m.lcm(Monomial::variable(1, 5)).exponent(1) == 5);
}

TEST_CASE("extremal_ideal structure") {
    SUBCASE("q = 1") {
        const MonomialIdeal I = extremal_ideal(1);
        CHECK(I.nvars == 1);
        CHECK(I.gens.size() == 1);
        CHECK(I.gens[0] == Monomial::variable(0, 1));
    }
    SUBCASE("q = 2") {
        const MonomialIdeal I = extremal_ideal(2);
        CHECK(I.nvars == 3);
        // eps_1 = x_1 * x_12, eps_2 = x_2 * x_12 (variable of mask A is A-1)
        Monomial e1;
        e1.set_exponent(0b01 - 1, 1);
        e1.set_exponent(0b11 - 1, 1);
        Monomial e2;
        e2.set_exponent(0b10 - 1, 1);
        e2.set_exponent(0b11 - 1, 1);
        CHECK(I.gens[0] == e1);
        CHECK(I.gens[1] == e2);
    }
    SUBCASE("q = 4: eps_1 is the product of the 8 subsets containing 1") {
        const MonomialIdeal I = extremal_ideal(4);
        CHECK(I.nvars == 15);
        CHECK(I.gens.size() == 4);
        int count = 0;
        for (unsigned A = 1; A <= 15; ++A) {
            const int e = I.gens[0].exponent(static_cast<int>(A) - 1);
            CHECK(e == ((A & 1u) ? 1 : 0));
            count += e;
        }
        CHECK(count == 8);
        CHECK(extremal_varname(0b1101, 4) == "x_134");
        CHECK(extremal_varname(0b1, 4) == "x_1");
    }
    SUBCASE("cap") { CHECK_THROWS_AS(extremal_ideal(17), resource_error); }
}

TEST_CASE("extremal_power_generator") {
    const Monomial m = extremal_power_generator(3, 3, {2, 1, 0});
    CHECK(m.exponent(0b011 - 1) == 3);  // x_{12}
    CHECK(m.exponent(0b100 - 1) == 0);  // x_{3}
    CHECK(m.exponent(0b001 - 1) == 2);  // x_{1}

    const Monomial re1 = extremal_power_generator(3, 4, {4, 0, 0});
    for (unsigned A = 1; A <= 7; ++A)
        CHECK(re1.exponent(static_cast<int>(A) - 1) == ((A & 1u) ? 4 : 0));

    CHECK(extremal_power_generator(4, 3, {1, 1, 1, 0}).exponent(0b1111 - 1) ==
          3);
}

TEST_CASE("eps^a equals the product of eps_i with multiplicities (N^3_5)") {
    const MonomialIdeal E = extremal_ideal(5);
    for (const Point& a : enumerate_points(5, 3)) {
        Monomial prod = Monomial::unit();
        for (int i = 0; i < 5; ++i)
            for (int c = 0; c < a[i]; ++c) prod = prod.product(E.gens[i]);
        CHECK(prod == extremal_power_generator(5, 3, a));
    }
}

TEST_CASE("lcm_label on (xy, yz, zu)") {
    const MonomialIdeal I = xyzu_ideal();
    Monomial xyz;
    xyz.set_exponent(0, 1);
    xyz.set_exponent(1, 1);
    xyz.set_exponent(2, 1);
    Monomial all = xyz;
    all.set_exponent(3, 1);
    CHECK(lcm_label(I, {0, 1}) == xyz);
    CHECK(lcm_label(I, {0, 1, 2}) == all);
    CHECK(lcm_label(I, {1}) == I.gens[1]);
    CHECK(lcm_label(I, {}) == Monomial::unit());
}

TEST_CASE("is_scarf_face_by_labels on (xy, yz, zu)") {
    const MonomialIdeal I = xyzu_ideal();
    CHECK_FALSE(is_scarf_face_by_labels(I, {0, 1, 2}));  // label xyzu shared
    CHECK_FALSE(is_scarf_face_by_labels(I, {0, 2}));     // same label xyzu
    CHECK(is_scarf_face_by_labels(I, {0, 1}));
    CHECK(is_scarf_face_by_labels(I, {1, 2}));
    CHECK(is_scarf_face_by_labels(I, {0}));
    CHECK(is_scarf_face_by_labels(I, {}));
}

TEST_CASE("scarf_complex_bruteforce on (xy, yz, zu)") {
    const auto faces = scarf_complex_bruteforce(xyzu_ideal());
    const std::set<IndexFace> got(faces.begin(), faces.end());
    const std::set<IndexFace> want = {{},  {0},    {1},   {2},
                                      {0, 1}, {1, 2}};
    CHECK(got == want);
}

TEST_CASE("scarf_complex_bruteforce of E_3^2 = the four triangles") {
    const auto faces = scarf_complex_bruteforce(extremal_power_ideal(3, 2));
    const std::set<IndexFace> got(faces.begin(), faces.end());
    CHECK(got == closure_as_index_faces(u_complex_facets(3, 2), 3, 2));
    int triangles = 0;
    for (const IndexFace& f : got)
        if (f.size() == 3) ++triangles;
    CHECK(triangles == 4);
}

TEST_CASE("scarf complex of E_4^r equals the U-complex closure, r <= 3") {
    for (int r = 1; r <= 3; ++r) {
        const auto faces =
            scarf_complex_bruteforce(extremal_power_ideal(4, r));
        const std::set<IndexFace> got(faces.begin(), faces.end());
        CHECK(got == closure_as_index_faces(u_complex_facets(4, r), 4, r));
    }
}

TEST_CASE("labels oracle agrees with the geometric oracle") {
    // exhaustive on pairs/triples for q <= 4, sampled 4-subsets via stride
    for (int q = 2; q <= 4; ++q) {
        const int r = 3;
        const MonomialIdeal I = extremal_power_ideal(q, r);
        const auto pts = enumerate_points(q, r);
        const int n = static_cast<int>(pts.size());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const bool lab = is_scarf_face_by_labels(I, {i, j});
                const bool geo =
                    is_scarf_face_geometric(Face::of({pts[i], pts[j]}));
                CHECK(lab == geo);
            }
        int stride = (q == 4) ? 7 : 1;  // thin out the larger triple set
        int counter = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    if (++counter % stride) continue;
                    const bool lab = is_scarf_face_by_labels(I, {i, j, k});
                    const bool geo = is_scarf_face_geometric(
                        Face::of({pts[i], pts[j], pts[k]}));
                    CHECK(lab == geo);
                }
    }
}

TEST_CASE("restriction identities") {
    for (int q = 2; q <= 5; ++q)
        for (int r = 1; r <= 3; ++r) {
            const MonomialIdeal E = extremal_power_ideal(q, r);

            // m_1 = prod over nonempty A != {q} of x_A^r
            Monomial m1;
            for (unsigned A = 1; A < (1u << q); ++A)
                if (A != (1u << (q - 1)))
                    m1.set_exponent(static_cast<int>(A) - 1, r);
            const MonomialIdeal R1 = restrict_ideal(E, m1);
            std::set<Monomial> want1;
            for (const Point& a : enumerate_points(q, r))
                if (a[q - 1] == 0)
                    want1.insert(extremal_power_generator(q, r, a));
            CHECK(std::set<Monomial>(R1.gens.begin(), R1.gens.end()) == want1);

            // m_2 = eps_1 * prod over all nonempty A of x_A^{r-1}
            if (r >= 1) {
                Monomial m2 = extremal_ideal(q).gens[0];
                for (unsigned A = 1; A < (1u << q); ++A) {
                    const int v = static_cast<int>(A) - 1;
                    m2.set_exponent(v, m2.exponent(v) + (r - 1));
                }
                const MonomialIdeal R2 = restrict_ideal(E, m2);
                std::set<Monomial> want2;
                const Monomial eps1 = extremal_ideal(q).gens[0];
                for (const Point& b : enumerate_points(q, r - 1))
                    want2.insert(
                        eps1.product(extremal_power_generator(q, r - 1, b)));
                CHECK(std::set<Monomial>(R2.gens.begin(), R2.gens.end()) ==
                      want2);
            }

            // restricting to the lcm of everything is the identity
            Monomial top;
            for (const Monomial& g : E.gens) top = top.lcm(g);
            CHECK(restrict_ideal(E, top).gens.size() == E.gens.size());
        }
}

TEST_CASE("Scarf heredity under restriction") {
    // Scarf multidegrees of E_q^r dividing m stay Scarf in the restriction.
    for (int q = 2; q <= 4; ++q)
        for (int r = 1; r <= 3; ++r) {
            if (q == 4 && r == 3) continue;  // covered at scale elsewhere
            const MonomialIdeal E = extremal_power_ideal(q, r);
            Monomial m1;
            for (unsigned A = 1; A < (1u << q); ++A)
                if (A != (1u << (q - 1)))
                    m1.set_exponent(static_cast<int>(A) - 1, r);
            const MonomialIdeal R = restrict_ideal(E, m1);
            if (R.gens.empty()) continue;
            std::set<Monomial> restricted_labels;
            for (const IndexFace& f : scarf_complex_bruteforce(R))
                restricted_labels.insert(lcm_label(R, f));
            for (const IndexFace& f : scarf_complex_bruteforce(E)) {
                const Monomial lab = lcm_label(E, f);
                if (lab.divides(m1)) CHECK(restricted_labels.count(lab) == 1);
            }
        }
}

TEST_CASE("homogenized chain complex of the (xy, yz, zu) Taylor complex") {
    const MonomialIdeal I = xyzu_ideal();
    std::vector<IndexFace> taylor = {{},     {0},    {1},    {2},
                                     {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    const ChainComplexRep C = homogenized_chain_complex(taylor, I);
    CHECK(C.d_squared_is_zero());
    CHECK(C.basis[1].size() == 3);
    CHECK(C.basis[2].size() == 3);
    CHECK(C.basis[3].size() == 1);

    auto mono = [](std::initializer_list<int> vars) {
        Monomial m;
        for (int v : vars) m.set_exponent(v, 1);
        return m;
    };
    // d2 entries {z, x, zu, xy, u, y} up to sign
    const std::multiset<Monomial> want2 = {mono({2}), mono({0}),
                                           mono({2, 3}), mono({0, 1}),
                                           mono({3}), mono({1})};
    CHECK(entry_multiset(C, 2) == want2);
    // d3 entries {u, x, 1} up to sign — the constant marks non-minimality
    const std::multiset<Monomial> want3 = {mono({3}), mono({0}),
                                           Monomial::unit()};
    CHECK(entry_multiset(C, 3) == want3);
    CHECK(C.has_constant_entry());

    // the Scarf subcomplex resolves minimally
    const ChainComplexRep S =
        homogenized_chain_complex(scarf_complex_bruteforce(I), I);
    CHECK(S.d_squared_is_zero());
    CHECK_FALSE(S.has_constant_entry());
}

TEST_CASE("Scarf complex of E_4^2: d^2 = 0 and minimal") {
    const MonomialIdeal I = extremal_power_ideal(4, 2);
    const ChainComplexRep C =
        homogenized_chain_complex(scarf_complex_bruteforce(I), I);
    CHECK(C.d_squared_is_zero());
    CHECK_FALSE(C.has_constant_entry());
}

TEST_CASE("homogenized_chain_complex rejects non-closed input") {
    CHECK_THROWS_AS(
        homogenized_chain_complex({{}, {0, 1}}, xyzu_ideal()),
        std::domain_error);
}
