#include "scarflab/ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace scarflab {

Monomial Monomial::variable(int v, int e) {
    Monomial m;
    m.set_exponent(v, e);
    return m;
}

int Monomial::exponent(int v) const {
    const auto it = exp_.find(v);
    return it == exp_.end() ? 0 : it->second;
}

void Monomial::set_exponent(int v, int e) {
    if (e < 0) throw std::domain_error("Monomial: negative exponent");
    if (e == 0) exp_.erase(v);
    else exp_[v] = e;
}

bool Monomial::divides(const Monomial& m) const {
    for (const auto& [v, e] : exp_)
        if (e > m.exponent(v)) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& m) const {
    Monomial out = *this;
    for (const auto& [v, e] : m.exp_)
        if (e > out.exponent(v)) out.exp_[v] = e;
    return out;
}

Monomial Monomial::product(const Monomial& m) const {
    Monomial out = *this;
    for (const auto& [v, e] : m.exp_) out.exp_[v] += e;
    return out;
}

Monomial Monomial::quotient(const Monomial& m) const {
    if (!m.divides(*this))
        throw std::domain_error("Monomial::quotient: not divisible");
    Monomial out = *this;
    for (const auto& [v, e] : m.exp_) {
        const int d = out.exp_[v] - e;
        if (d == 0) out.exp_.erase(v);
        else out.exp_[v] = d;
    }
    return out;
}

std::string Monomial::str(const std::vector<std::string>& varnames) const {
    if (exp_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : exp_) {
        if (!first) os << "*";
        first = false;
        os << varnames.at(v);
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

std::string extremal_varname(unsigned mask, int q) {
    std::string s = "x_";
    for (int i = 0; i < q; ++i)
        if (mask >> i & 1u) s += std::to_string(i + 1);
    return s;
}

MonomialIdeal extremal_ideal(int q) {
    if (q < 1) throw std::domain_error("extremal_ideal: q must be >= 1");
    if (q > 16) throw resource_error("extremal_ideal: q capped at 16");
    MonomialIdeal I;
    I.nvars = (1 << q) - 1;
    I.varnames.reserve(I.nvars);
    for (unsigned mask = 1; mask <= static_cast<unsigned>(I.nvars); ++mask)
        I.varnames.push_back(extremal_varname(mask, q));
    for (int i = 0; i < q; ++i) {
        Monomial g;
        for (unsigned mask = 1; mask <= static_cast<unsigned>(I.nvars); ++mask)
            if (mask >> i & 1u) g.set_exponent(static_cast<int>(mask) - 1, 1);
        I.gens.push_back(std::move(g));
    }
    I.minimal = true;
    return I;
}

Monomial extremal_power_generator(int q, int r, const Point& a) {
    if (static_cast<int>(a.size()) != q || weight(a) != r)
        throw std::invalid_argument("extremal_power_generator: a not in N^r_q");
    if (q > 16) throw resource_error("extremal_power_generator: q capped at 16");
    Monomial g;
    const unsigned top = (1u << q) - 1;
    for (unsigned mask = 1; mask <= top; ++mask) {
        int e = 0;
        for (int i = 0; i < q; ++i)
            if (mask >> i & 1u) e += a[i];
        g.set_exponent(static_cast<int>(mask) - 1, e);
    }
    return g;
}

MonomialIdeal extremal_power_ideal(int q, int r) {
    if (q > 16) throw resource_error("extremal_power_ideal: q capped at 16");
    MonomialIdeal I;
    I.nvars = (1 << q) - 1;
    I.varnames.reserve(I.nvars);
    for (unsigned mask = 1; mask <= static_cast<unsigned>(I.nvars); ++mask)
        I.varnames.push_back(extremal_varname(mask, q));
    for (const Point& a : enumerate_points(q, r))
        I.gens.push_back(extremal_power_generator(q, r, a));
    I.minimal = true;
    return I;
}

Monomial lcm_label(const MonomialIdeal& ideal, const IndexFace& face) {
    Monomial label;
    for (int i : face) label = label.lcm(ideal.gens.at(i));
    return label;
}

bool is_scarf_face_by_labels(const MonomialIdeal& ideal, const IndexFace& face) {
    const Monomial label = lcm_label(ideal, face);
    // (a) no generator outside the face divides the label
    std::vector<bool> inside(ideal.gens.size(), false);
    for (int i : face) inside.at(i) = true;
    for (std::size_t g = 0; g < ideal.gens.size(); ++g)
        if (!inside[g] && ideal.gens[g].divides(label)) return false;
    // (b) every single-vertex deletion strictly changes the label
    for (std::size_t k = 0; k < face.size(); ++k) {
        IndexFace sub;
        sub.reserve(face.size() - 1);
        for (std::size_t j = 0; j < face.size(); ++j)
            if (j != k) sub.push_back(face[j]);
        if (lcm_label(ideal, sub) == label) return false;
    }
    return true;
}

std::vector<IndexFace> scarf_complex_bruteforce(const MonomialIdeal& ideal,
                                                int dim_cap) {
    if (!ideal.minimal)
        throw std::domain_error("scarf_complex_bruteforce: need minimal gens");
    const int n = static_cast<int>(ideal.gens.size());
    if (n > 64)
        throw resource_error("scarf_complex_bruteforce: generator cap is 64");
    constexpr std::size_t kFaceCap = 5'000'000;

    std::vector<IndexFace> out;
    out.push_back({});  // empty face
    std::set<IndexFace> level;  // current k-vertex Scarf faces
    for (int i = 0; i < n; ++i) {
        IndexFace v{i};
        if (is_scarf_face_by_labels(ideal, v)) {
            level.insert(v);
            out.push_back(v);
        }
    }
    int k = 1;
    while (!level.empty() && (dim_cap < 0 || k <= dim_cap)) {
        std::set<IndexFace> next;
        for (const IndexFace& f : level) {
            for (int v = f.back() + 1; v < n; ++v) {
                IndexFace cand = f;
                cand.push_back(v);
                // all k-subfaces must already be Scarf (simplicial closure)
                bool closed = true;
                for (std::size_t d = 0; closed && d + 1 < cand.size(); ++d) {
                    IndexFace sub;
                    for (std::size_t j = 0; j < cand.size(); ++j)
                        if (j != d) sub.push_back(cand[j]);
                    closed = level.count(sub) > 0;
                }
                if (closed && is_scarf_face_by_labels(ideal, cand))
                    next.insert(std::move(cand));
            }
        }
        for (const IndexFace& f : next) {
            out.push_back(f);
            if (out.size() > kFaceCap)
                throw resource_error(
                    "scarf_complex_bruteforce: face cap exceeded after " +
                    std::to_string(out.size()) + " faces");
        }
        level = std::move(next);
        ++k;
    }
    return out;
}

MonomialIdeal restrict_ideal(const MonomialIdeal& ideal, const Monomial& m) {
    MonomialIdeal out;
    out.nvars = ideal.nvars;
    out.varnames = ideal.varnames;
    out.minimal = ideal.minimal;
    for (const Monomial& g : ideal.gens)
        if (g.divides(m)) out.gens.push_back(g);
    return out;
}

bool ChainComplexRep::d_squared_is_zero() const {
    for (std::size_t k = 2; k < boundary.size(); ++k) {
        for (std::size_t col = 0; col < boundary[k].size(); ++col) {
            std::map<int, int> acc;  // (k-2)-row -> signed coefficient
            for (const BoundaryEntry& e1 : boundary[k][col])
                for (const BoundaryEntry& e2 : boundary[k - 1][e1.row])
                    acc[e2.row] += e1.sign * e2.sign;
            for (const auto& [row, coeff] : acc)
                if (coeff != 0) return false;
        }
    }
    return true;
}

bool ChainComplexRep::has_constant_entry() const {
    for (std::size_t k = 2; k < boundary.size(); ++k)
        for (const auto& col : boundary[k])
            for (const BoundaryEntry& e : col)
                if (e.quotient.is_unit()) return true;
    return false;
}

ChainComplexRep homogenized_chain_complex(const std::vector<IndexFace>& faces,
                                          const MonomialIdeal& ideal) {
    std::set<IndexFace> all(faces.begin(), faces.end());
    all.insert({});
    std::size_t maxk = 0;
    for (const IndexFace& f : all) {
        maxk = std::max(maxk, f.size());
        for (std::size_t d = 0; d < f.size(); ++d) {
            IndexFace sub;
            for (std::size_t j = 0; j < f.size(); ++j)
                if (j != d) sub.push_back(f[j]);
            if (!all.count(sub))
                throw std::domain_error(
                    "homogenized_chain_complex: face set not subset-closed");
        }
    }

    ChainComplexRep rep;
    rep.basis.resize(maxk + 1);
    for (const IndexFace& f : all) rep.basis[f.size()].push_back(f);
    for (auto& level : rep.basis) std::sort(level.begin(), level.end());

    std::vector<std::map<IndexFace, int>> index(maxk + 1);
    for (std::size_t k = 0; k <= maxk; ++k)
        for (std::size_t i = 0; i < rep.basis[k].size(); ++i)
            index[k][rep.basis[k][i]] = static_cast<int>(i);

    rep.boundary.resize(maxk + 1);
    for (std::size_t k = 1; k <= maxk; ++k) {
        rep.boundary[k].resize(rep.basis[k].size());
        for (std::size_t col = 0; col < rep.basis[k].size(); ++col) {
            const IndexFace& f = rep.basis[k][col];
            const Monomial mf = lcm_label(ideal, f);
            int sign = 1;
            for (std::size_t d = 0; d < f.size(); ++d) {
                IndexFace sub;
                for (std::size_t j = 0; j < f.size(); ++j)
                    if (j != d) sub.push_back(f[j]);
                BoundaryEntry e;
                e.row = index[k - 1].at(sub);
                e.sign = sign;
                e.quotient = mf.quotient(lcm_label(ideal, sub));
                rep.boundary[k][col].push_back(std::move(e));
                sign = -sign;
            }
        }
    }
    return rep;
}

} // namespace scarflab
