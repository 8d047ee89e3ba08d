#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scarflab/bounds.hpp"
#include "scarflab/ideal.hpp"
#include "scarflab/lattice.hpp"
#include "scarflab/morse.hpp"
#include "scarflab/r3.hpp"
#include "scarflab/scarfgeo.hpp"

using json = nlohmann::ordered_json;
using namespace scarflab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string point_str(const Point& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s;
}

Point parse_point(const std::string& s, int q, int r) {
    Point p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw CLI::ValidationError("point", "bad coordinate '" + tok + "'");
        }
        if (pos != tok.size() || v < 0)
            throw CLI::ValidationError("point", "bad coordinate '" + tok + "'");
        p.push_back(v);
    }
    if (static_cast<int>(p.size()) != q || weight(p) != r)
        throw CLI::ValidationError(
            "point", "'" + s + "' is not a point of N^" + std::to_string(r) +
                         "_" + std::to_string(q));
    return p;
}

std::string big_str(const bigint& v) { return v.str(); }

std::string rat_str(const bigrat& v) {
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
}

// log10 of a nonnegative big integer as a short decimal string ("" for 0).
std::string log10_str(const bigint& v) {
    if (v <= 0) return "";
    const std::string digits = v.str();
    const std::size_t head_len = std::min<std::size_t>(digits.size(), 15);
    const double head = std::stod("0." + digits.substr(0, head_len));
    const double lg = static_cast<double>(digits.size()) + std::log10(head);
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << lg;
    return os.str();
}

void emit(const std::string& command, const json& data) {
    json env;
    env["schema"] = "result.v1";
    env["command"] = command;
    env["status"] = "ok";
    env["data"] = data;
    std::cout << env.dump(2) << "\n";
}

int emit_error(const std::string& command, const std::string& status,
               const std::string& message, int code) {
    json env;
    env["schema"] = "result.v1";
    env["command"] = command;
    env["status"] = status;
    env["data"] = json{{"message", message}};
    std::cout << env.dump(2) << "\n";
    return code;
}

// "2..4" or "3" -> [lo, hi]
std::pair<long long, long long> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const long long v = std::stoll(s);
            return {v, v};
        }
        return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--i", "bad range '" + s + "'");
    }
}

int check_threads_env() {
    const char* env = std::getenv("SCARFLAB_THREADS");
    if (!env) return 0;
    const std::string s(env);
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || v < 1) {
        std::cerr << "error: SCARFLAB_THREADS must be a positive integer, got '"
                  << s << "'\n";
        return kExitUsage;
    }
    // All current algorithms are deterministic and sequential; the value is
    // honored as an upper cap on parallelism.
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"scarflab: Scarf complexes of powers of extremal ideals"};
    app.require_subcommand(1);

    // ---- points ----
    int p_q = 0, p_r = 0;
    std::string p_format = "json";
    auto* cmd_points = app.add_subcommand("points", "enumerate N^r_q");
    cmd_points->add_option("--q", p_q, "number of indices")->required()
        ->check(CLI::PositiveNumber);
    cmd_points->add_option("--r", p_r, "power")->required()
        ->check(CLI::NonNegativeNumber);
    cmd_points->add_option("--format", p_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- check-face ----
    int c_q = 0, c_r = 0;
    std::string c_method = "all";
    std::vector<std::string> c_verts;
    auto* cmd_check = app.add_subcommand("check-face", "Scarf membership");
    cmd_check->add_option("--q", c_q)->required()->check(CLI::PositiveNumber);
    cmd_check->add_option("--r", c_r)->required()->check(CLI::PositiveNumber);
    cmd_check->add_option("--method", c_method, "geometric|labels|catalog|all")
        ->check(CLI::IsMember({"geometric", "labels", "catalog", "all"}));
    cmd_check->add_option("vertices", c_verts, "points, e.g. 2,1,0")
        ->required()->expected(-1);

    // ---- facets ----
    int f_q = 0, f_r = 3;
    std::string f_family = "all";
    auto* cmd_facets = app.add_subcommand("facets", "facets of S_q^3");
    cmd_facets->add_option("--q", f_q)->required()->check(CLI::PositiveNumber);
    cmd_facets->add_option("--r", f_r, "must be 3");
    cmd_facets->add_option("--family", f_family, "all|U|W")
        ->check(CLI::IsMember({"all", "U", "W"}));

    // ---- bounds ----
    int b_q = 0, b_r = 3;
    std::string b_range = "0..0";
    bool b_compare = false;
    auto* cmd_bounds = app.add_subcommand("bounds", "Betti bound tables");
    cmd_bounds->add_option("--q", b_q)->required()->check(CLI::PositiveNumber);
    cmd_bounds->add_option("--r", b_r)->required()->check(CLI::PositiveNumber);
    cmd_bounds->add_option("--i", b_range, "degree or range lo..hi")->required();
    cmd_bounds->add_flag("--compare", b_compare, "add L/Taylor/ratio columns");

    // ---- fvector ----
    int v_q = 0;
    std::string v_method = "formula";
    auto* cmd_fvector = app.add_subcommand("fvector", "f-vector of S_q^3");
    cmd_fvector->add_option("--q", v_q)->required()->check(CLI::PositiveNumber);
    cmd_fvector->add_option("--method", v_method, "formula|enumerate|both")
        ->check(CLI::IsMember({"formula", "enumerate", "both"}));

    // ---- morse-verify ----
    int m_q = 0, m_r = 3;
    std::string m_scale = "full";
    std::uint64_t m_samples = 10000, m_seed = 7;
    auto* cmd_morse = app.add_subcommand("morse-verify", "verify the matching");
    cmd_morse->add_option("--q", m_q)->required()->check(CLI::PositiveNumber);
    cmd_morse->add_option("--r", m_r, "must be 3");
    cmd_morse->add_option("--scale", m_scale, "full|sampled")
        ->check(CLI::IsMember({"full", "sampled"}));
    cmd_morse->add_option("--samples", m_samples);
    cmd_morse->add_option("--seed", m_seed);

    // ---- plot-data ----
    std::vector<int> d_qs;
    int d_r = 3;
    std::string d_out;
    auto* cmd_plot = app.add_subcommand("plot-data", "bound-comparison CSV");
    cmd_plot->add_option("--q", d_qs, "one or more q values")->required()
        ->expected(-1);
    cmd_plot->add_option("--r", d_r, "must be 3");
    cmd_plot->add_option("--out", d_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    if (const int rc = check_threads_env(); rc != 0) return rc;

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (cmd_points->parsed()) {
            const auto pts = enumerate_points(p_q, p_r);
            if (p_format == "csv") {
                std::string header;
                for (int i = 1; i <= p_q; ++i)
                    header += (i > 1 ? "," : "") + ("c" + std::to_string(i));
                std::cout << header << "\n";
                for (const Point& p : pts) std::cout << point_str(p) << "\n";
            } else {
                json data;
                data["q"] = p_q;
                data["r"] = p_r;
                data["count"] = pts.size();
                json arr = json::array();
                for (const Point& p : pts) arr.push_back(point_str(p));
                data["points"] = std::move(arr);
                emit(command, data);
            }
            return kExitOk;
        }

        if (cmd_check->parsed()) {
            if (c_method == "catalog" && c_r != 3)
                return emit_error(command, "usage",
                                  "catalog method requires r = 3", kExitUsage);
            std::vector<Point> pts;
            for (const std::string& s : c_verts)
                pts.push_back(parse_point(s, c_q, c_r));
            const Face face = Face::of(pts);

            json data;
            data["q"] = c_q;
            data["r"] = c_r;
            json verdicts;
            std::optional<bool> labels, geometric, catalog;
            if (c_method == "labels" || c_method == "all") {
                const MonomialIdeal I = extremal_power_ideal(c_q, c_r);
                const auto all_pts = enumerate_points(c_q, c_r);
                IndexFace idx;
                for (const Point& p : face.points())
                    idx.push_back(static_cast<int>(
                        std::find(all_pts.begin(), all_pts.end(), p) -
                        all_pts.begin()));
                std::sort(idx.begin(), idx.end());
                labels = is_scarf_face_by_labels(I, idx);
                verdicts["labels"] = *labels;
            }
            if (c_method == "geometric" || c_method == "all") {
                const auto w = find_witness(face);
                geometric = !w.has_value();
                verdicts["geometric"] = *geometric;
                if (w) {
                    json wj;
                    wj["point"] = point_str(w->witness);
                    wj["C"] = w->C;
                    data["witness"] = std::move(wj);
                }
            }
            if (c_method == "catalog" || (c_method == "all" && c_r == 3)) {
                catalog = is_face_r3(face);
                verdicts["catalog"] = *catalog;
            }
            data["verdicts"] = std::move(verdicts);
            bool agree = true;
            const std::optional<bool> opts[] = {labels, geometric, catalog};
            std::optional<bool> first;
            for (const auto& o : opts)
                if (o) {
                    if (!first) first = o;
                    else if (*first != *o) agree = false;
                }
            data["scarf"] = first.value_or(false);
            if (c_method == "all") data["agreement"] = agree;
            emit(command, data);
            return (c_method == "all" && !agree) ? kExitViolation : kExitOk;
        }

        if (cmd_facets->parsed()) {
            if (f_r != 3)
                return emit_error(command, "usage",
                                  "facet catalog requires r = 3", kExitUsage);
            json rows = json::array();
            int count = 0;
            for (const auto& [desc, face] : facets_r3(f_q)) {
                const bool is_w = desc.family == FacetDescriptor::Family::W;
                if (f_family == "U" && is_w) continue;
                if (f_family == "W" && !is_w) continue;
                json row;
                row["descriptor"] = desc.str();
                json verts = json::array();
                for (const Point& p : face.points())
                    verts.push_back(point_str(p));
                row["size"] = face.size();
                row["vertices"] = std::move(verts);
                rows.push_back(std::move(row));
                ++count;
            }
            json data;
            data["q"] = f_q;
            data["count"] = count;
            data["facets"] = std::move(rows);
            emit(command, data);
            return kExitOk;
        }

        if (cmd_bounds->parsed()) {
            if (b_r > 3)
                return emit_error(command, "usage",
                                  "scarf bound column requires r <= 3",
                                  kExitUsage);
            const auto [lo, hi] = parse_range(b_range);
            if (lo < 0 || hi < lo)
                return emit_error(command, "usage", "bad --i range",
                                  kExitUsage);
            json rows = json::array();
            for (long long i = lo; i <= hi; ++i) {
                json row;
                row["i"] = i;
                const bigint s = beta_bound(b_q, b_r, i);
                row["scarf"] = big_str(s);
                if (b_compare) {
                    const bigint t = taylor_bound(b_q, b_r, i);
                    row["taylor"] = big_str(t);
                    if (b_r == 3) {
                        const bigint l = l_bound(b_q, b_r, i);
                        row["l"] = big_str(l);
                        if (s != 0) row["l_over_scarf"] = rat_str(bigrat(l, s));
                    }
                    if (s != 0)
                        row["taylor_over_scarf"] = rat_str(bigrat(t, s));
                }
                rows.push_back(std::move(row));
            }
            json data;
            data["q"] = b_q;
            data["r"] = b_r;
            data["rows"] = std::move(rows);
            emit(command, data);
            return kExitOk;
        }

        if (cmd_fvector->parsed()) {
            json data;
            data["q"] = v_q;
            bool match = true;
            if (v_method == "formula" || v_method == "both") {
                const BettiVector bv = betti_vector(v_q, 3);
                json arr = json::array();
                for (const bigint& v : bv.values) arr.push_back(big_str(v));
                data["formula"] = std::move(arr);
                data["log_concave"] = bv.log_concave;
                data["unimodal"] = bv.unimodal;
            }
            if (v_method == "enumerate" || v_method == "both") {
                const auto fv = f_vector_enumerated(v_q);
                json arr = json::array();
                for (const bigint& v : fv) arr.push_back(big_str(v));
                data["enumerate"] = std::move(arr);
            }
            if (v_method == "both") {
                match = data["formula"] == data["enumerate"];
                data["match"] = match;
            }
            emit(command, data);
            return match ? kExitOk : kExitViolation;
        }

        if (cmd_morse->parsed()) {
            if (m_r != 3)
                return emit_error(command, "usage",
                                  "morse-verify requires r = 3", kExitUsage);
            json data;
            data["q"] = m_q;
            data["scale"] = m_scale;
            bool pass = false;
            if (m_scale == "full") {
                const MorseVerdict v = verify_matching_full(m_q);
                data["perfect"] = v.perfect;
                data["homogeneous"] = v.homogeneous;
                data["acyclic"] = v.acyclic;
                data["critical_equals_scarf"] = v.critical_equals_scarf;
                data["cells"] = v.cells;
                data["nonfaces"] = v.nonfaces;
                data["critical"] = v.critical;
                pass = v.all_pass();
            } else {
                const StabilityReport rep =
                    class_stability_sampled(m_q, m_samples, m_seed);
                data["samples"] = rep.samples;
                data["passed"] = rep.passed;
                data["seed"] = m_seed;
                pass = rep.all_pass();
            }
            data["pass"] = pass;
            emit(command, data);
            return pass ? kExitOk : kExitViolation;
        }

        if (cmd_plot->parsed()) {
            if (d_r != 3)
                return emit_error(command, "usage", "plot-data requires r = 3",
                                  kExitUsage);
            std::ostringstream os;
            os << "q,i,scarf,l,taylor,log10_scarf,log10_l,log10_taylor\n";
            for (int q : d_qs) {
                if (q < 1)
                    return emit_error(command, "usage", "q must be >= 1",
                                      kExitUsage);
                const bigint nverts = binom(bigint(q + 2), 3);
                const long long top = nverts.convert_to<long long>() - 1;
                for (long long i = 0; i <= top; ++i) {
                    const bigint s = beta_bound(q, 3, i);
                    const bigint l = l_bound(q, 3, i);
                    const bigint t = taylor_bound(q, 3, i);
                    os << q << "," << i << "," << big_str(s) << ","
                       << big_str(l) << "," << big_str(t) << ","
                       << log10_str(s) << "," << log10_str(l) << ","
                       << log10_str(t) << "\n";
                }
            }
            if (d_out.empty()) {
                std::cout << os.str();
            } else {
                std::ofstream f(d_out, std::ios::binary);
                if (!f)
                    return emit_error(command, "usage",
                                      "cannot open " + d_out, kExitUsage);
                f << os.str();
            }
            return kExitOk;
        }
    } catch (const resource_error& e) {
        return emit_error(command, "resource", e.what(), kExitResource);
    } catch (const invariant_violation& e) {
        return emit_error(command, "violation", e.what(), kExitViolation);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
