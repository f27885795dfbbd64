#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "galepoly/betti.hpp"
#include "galepoly/errors.hpp"
#include "galepoly/geometry.hpp"
#include "galepoly/json_io.hpp"
#include "galepoly/lattice.hpp"
#include "galepoly/ring.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using namespace galepoly;

struct CommonArgs {
    int k = 0;
    std::string r_list;
    std::string theta_list;
    std::string format = "json";
    std::uint64_t budget = UINT64_C(1) << 30;
    int jobs = 1;
    bool verify = false;
    bool no_cache = false;
    std::string cache_dir;
};

std::vector<long long> parse_ll_list(const std::string& s) {
    std::vector<long long> v;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            v.push_back(std::stoll(tok));
        } catch (...) {
            throw InvalidInput("malformed integer list: " + s);
        }
    }
    return v;
}

MultMatrix instance_of(const CommonArgs& a) {
    if (a.k < 1) throw InvalidInput("k must be positive");
    std::vector<int> r;
    if (a.k == 1) {
        if (!a.r_list.empty()) throw InvalidInput("k=1 takes no multiplicities");
    } else {
        if (a.r_list.empty()) throw InvalidInput("missing --r");
        for (long long v : parse_ll_list(a.r_list)) {
            if (v < 1 || v > 1'000'000) throw InvalidInput("multiplicities must be in 1..1000000");
            r.push_back(static_cast<int>(v));
        }
    }
    return MultMatrix(a.k, std::move(r));
}

ThetaParam theta_of(const CommonArgs& a, const MultMatrix& R) {
    std::vector<long long> theta =
        a.theta_list.empty() ? theta_one(R.k()) : parse_ll_list(a.theta_list);
    ThetaParam th = analyze_theta(R, theta);
    if (!th.generic) throw NonGenericTheta("theta is not generic");
    return th;
}

EnumOptions enum_opts(const CommonArgs& a) {
    EnumOptions o;
    o.budget = a.budget;
    o.jobs = a.jobs;
    return o;
}

// --- verification blocks -------------------------------------------------

Json verify_instance_block(const MultMatrix& R) {
    GaleData gd = build_gale(R);
    bool gale_ok = verify_gale(gd, 100);
    bool uni_ok = verify_unimodular(gd);
    if (!gale_ok || !uni_ok) throw CrossCheckFailure("geometry oracle rejected the instance");
    return Json{{"gale", gale_ok}, {"unimodular", uni_ok}};
}

bool verify_theta_block(const MultMatrix& R, const ThetaParam& th) {
    GaleData gd = build_gale(R);
    Int expect = 1;
    for (int i = 0; i < R.k() - 2; ++i) expect *= R.k();
    if (Int(static_cast<long>(th.trees.size())) != expect) return false;
    for (EdgeMask tmask : th.trees) {
        std::vector<int> slots;
        for (int s = 0; s < opair_count(R.k()); ++s)
            if (tmask >> s & 1) slots.push_back(s);
        for (const Int& c : theta_coords(gd, slots, th.theta))
            if (c <= 0) return false;
    }
    return true;
}

// --- csv rendering -------------------------------------------------------

void csv_poly_row(std::ostream& os, const std::string& name, const std::string& sub,
                  const IntPoly& p) {
    os << name << "," << sub;
    for (const Int& c : p.coeffs()) os << "," << c.get_str();
    os << "\n";
}

// --- command payload builders --------------------------------------------

std::string render(const Json& j, const std::string& format, const std::string& csv) {
    if (format == "csv") return csv;
    return j.dump(2) + "\n";
}

std::string run_compute(const CommonArgs& a, const std::string& what, const std::string& method) {
    MultMatrix R = instance_of(a);
    EnumOptions opts = enum_opts(a);
    bool want_g = what == "g" || what == "both";
    bool want_h = what == "h" || what == "both";
    bool all = method == "all";

    Json out{{"k", R.k()}, {"n", R.total_copies()}, {"dim", R.dim()}};
    Json jg = Json::object(), jh = Json::object();
    std::vector<std::pair<std::string, IntPoly>> gs, hs;

    if (R.k() == 1) {
        IntPoly one = IntPoly::constant(1);
        if (want_g) gs.push_back({all ? "graph" : method, one});
        if (want_h) hs.push_back({all ? "graph" : method, one});
    } else {
        std::vector<int> whole(opair_count(R.k()), 0);
        IntPoly h_graph, h_stanley;
        bool have_h_graph = false, have_h_stanley = false;
        auto h_by = [&](const std::string& m) -> IntPoly {
            if (m == "graph") {
                if (!have_h_graph) {
                    h_graph = h_poly(R, opts);
                    have_h_graph = true;
                }
                return h_graph;
            }
            if (m == "recursion") return h_poly_recursive(R);
            if (!have_h_stanley) {
                h_stanley = stanley_h(R, whole, opts);
                have_h_stanley = true;
            }
            return h_stanley;
        };
        auto g_by = [&](const std::string& m) -> IntPoly {
            if (m == "graph") return g_poly(R, opts);
            if (m == "recursion") return g_poly_recursive(R);
            if (m == "from_h") return g_from_h(h_by("graph"), R.dim());
            return g_from_h(h_by("stanley"), R.dim());  // stanley
        };
        std::vector<std::string> methods =
            all ? std::vector<std::string>{"graph", "recursion", "stanley"}
                : std::vector<std::string>{method};
        if (want_g) {
            for (const auto& m : methods) gs.push_back({m, g_by(m)});
            if (all) gs.push_back({"from_h", g_by("from_h")});
        }
        if (want_h)
            for (const auto& m : methods) hs.push_back({m, h_by(m)});
    }

    bool agree = true;
    for (const auto& [m, p] : gs) {
        jg[m] = poly_json(p);
        agree = agree && p == gs.front().second;
    }
    for (const auto& [m, p] : hs) {
        jh[m] = poly_json(p);
        agree = agree && p == hs.front().second;
    }
    if (want_g) out["g"] = jg;
    if (want_h) out["h"] = jh;
    if (all) out["agree"] = agree;
    if (a.verify) out["verification"] = verify_instance_block(R);

    std::ostringstream csv;
    for (const auto& [m, p] : gs) csv_poly_row(csv, "g", m, p);
    for (const auto& [m, p] : hs) csv_poly_row(csv, "h", m, p);
    if (all) csv << "agree,," << (agree ? "true" : "false") << "\n";

    if (all && !agree) {
        std::cerr << "method disagreement:\n";
        for (const auto& [m, p] : gs) std::cerr << "  g/" << m << " = " << p.str() << "\n";
        for (const auto& [m, p] : hs) std::cerr << "  h/" << m << " = " << p.str() << "\n";
        std::cout << render(out, a.format, csv.str());
        throw CrossCheckFailure("computation methods disagree");
    }
    return render(out, a.format, csv.str());
}

std::string run_faces(const CommonArgs& a) {
    MultMatrix R = instance_of(a);
    FaceLattice lat = enumerate_faces(R, enum_opts(a));
    Json out = faces_json(lat);
    if (a.verify) {
        Json v = verify_instance_block(R);
        GaleData gd = build_gale(R);
        bool faces_ok = verify_faces(gd, lat);
        v["faces"] = faces_ok;
        out["verification"] = v;
        if (!faces_ok) throw CrossCheckFailure("face lattice disagrees with the geometry oracle");
    }
    std::ostringstream csv;
    csv << "f_vector";
    for (const Int& c : lat.f_vector) csv << "," << c.get_str();
    csv << "\n";
    return render(out, a.format, csv.str());
}

std::string run_fiber(const CommonArgs& a, const std::string& face) {
    MultMatrix R = instance_of(a);
    ThetaParam th = theta_of(a, R);
    std::vector<int> core = parse_face_id(R, face);
    FiberReport rep = fiber_poincare(R, core, th, enum_opts(a));
    Json out = fiber_json(rep);
    out["theta"] = th.theta;
    if (a.verify) {
        Json v = verify_instance_block(R);
        bool trees_ok = verify_theta_block(R, th);
        v["theta_trees"] = trees_ok;
        out["verification"] = v;
        if (!trees_ok) throw CrossCheckFailure("theta trees disagree with the geometry oracle");
    }
    std::ostringstream csv;
    csv_poly_row(csv, "poincare", rep.face, rep.poincare);
    return render(out, a.format, csv.str());
}

std::string run_certify(const CommonArgs& a) {
    MultMatrix R = instance_of(a);
    ThetaParam th = theta_of(a, R);
    SmallCertificate cert = certify_small(R, th, enum_opts(a));
    Json out = certificate_json(th, cert);
    if (a.verify) {
        Json v = verify_instance_block(R);
        bool trees_ok = verify_theta_block(R, th);
        v["theta_trees"] = trees_ok;
        out["verification"] = v;
        if (!trees_ok) throw CrossCheckFailure("theta trees disagree with the geometry oracle");
    }
    std::ostringstream csv;
    for (const FiberReport& r : cert.reports)
        csv << "report," << r.face << "," << r.stratum_codim << "," << r.fiber_dim << ","
            << (r.small_ok ? "true" : "false") << "\n";
    csv << "small,," << (cert.small ? "true" : "false") << "\n";
    return render(out, a.format, csv.str());
}

std::string run_components(const CommonArgs& a) {
    MultMatrix R = instance_of(a);
    ThetaParam th = theta_of(a, R);
    CentralFiber fib = top_components(R, th, enum_opts(a));
    Json out = components_json(th, R, fib);
    if (a.verify) {
        Json v = verify_instance_block(R);
        bool trees_ok = verify_theta_block(R, th);
        v["theta_trees"] = trees_ok;
        out["verification"] = v;
        if (!trees_ok) throw CrossCheckFailure("theta trees disagree with the geometry oracle");
    }
    std::ostringstream csv;
    for (std::size_t i = 0; i < fib.components.size(); ++i) {
        csv << "component," << i << "," << fib.components[i].dim;
        for (const Int& c : fib.components[i].poincare.coeffs()) csv << "," << c.get_str();
        csv << "\n";
    }
    return render(out, a.format, csv.str());
}

std::string run_ring(const CommonArgs& a, int max_deg) {
    MultMatrix R = instance_of(a);
    GradedPresentation gp = build_relations(R);
    RingCheck rc = compare_to_g(R, enum_opts(a));
    if (max_deg >= 0) {
        int gdeg = rc.g.is_zero() ? 0 : rc.g.degree();
        rc.hilbert = hilbert_function(gp, std::max(max_deg, gdeg + 1), enum_opts(a));
    }
    Json out = ring_json(gp, rc);
    if (a.verify) out["verification"] = verify_instance_block(R);
    std::ostringstream csv;
    csv_poly_row(csv, "hilbert", "", rc.hilbert);
    csv << "matches_g,," << (rc.matches ? "true" : "false") << "\n";
    return render(out, a.format, csv.str());
}

// --- cache ----------------------------------------------------------------

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = UINT64_C(14695981039346656037);
    for (unsigned char c : s) {
        h ^= c;
        h *= UINT64_C(1099511628211);
    }
    return h;
}

std::filesystem::path cache_path(const CommonArgs& a, const std::string& key) {
    std::string dir = a.cache_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("GALE_CACHE_DIR")) dir = env;
    }
    if (dir.empty()) {
        if (const char* home = std::getenv("HOME"))
            dir = std::string(home) + "/.cache/galepoly";
        else
            dir = ".galepoly_cache";
    }
    std::ostringstream name;
    name << std::hex << fnv1a(key) << ".json";
    return std::filesystem::path(dir) / name.str();
}

std::string cache_key(const std::string& cmd, const CommonArgs& a, const std::string& extra) {
    std::ostringstream os;
    os << kVersion << "|" << cmd << "|k=" << a.k << "|r=" << a.r_list << "|theta=" << a.theta_list
       << "|" << extra << "|format=" << a.format << "|verify=" << a.verify;
    return os.str();
}

int emit(const std::string& cmd, const CommonArgs& a, const std::string& extra,
         const std::function<std::string()>& payload_fn) {
    std::string key = cache_key(cmd, a, extra);
    std::filesystem::path path = cache_path(a, key);
    if (!a.no_cache && std::filesystem::exists(path)) {
        try {
            std::ifstream in(path);
            Json wrapper = Json::parse(in);
            if (wrapper.at("key").get<std::string>() == key) {
                std::cout << wrapper.at("payload").get<std::string>();
                return 0;
            }
        } catch (...) {
            // treat unreadable cache entries as misses
        }
    }
    std::string payload = payload_fn();
    if (!a.no_cache) {
        try {
            std::filesystem::create_directories(path.parent_path());
            Json wrapper{{"key", key}, {"payload", payload}};
            std::ofstream out(path);
            out << wrapper.dump();
        } catch (...) {
            // caching is best effort
        }
    }
    std::cout << payload;
    return 0;
}

void add_common(CLI::App* cmd, CommonArgs& a, bool with_theta) {
    cmd->add_option("--k", a.k, "number of vertices")->required();
    cmd->add_option("--r", a.r_list, "multiplicities r_ij, lexicographic pair order");
    if (with_theta) cmd->add_option("--theta", a.theta_list, "GIT parameter (default (k-1,-1,...,-1))");
    cmd->add_option("--format", a.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--budget", a.budget, "support-enumeration iteration cap");
    cmd->add_option("--jobs", a.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--verify", a.verify, "run the exact-geometry oracles and embed the results");
    cmd->add_flag("--no-cache", a.no_cache, "bypass the result cache");
    cmd->add_option("--cache-dir", a.cache_dir, "cache directory (default GALE_CACHE_DIR)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection-cohomology combinatorics of Gale dual root polytopes"};
    app.require_subcommand(1);

    CommonArgs a;
    std::string what = "both", method = "all", face_id_arg;
    int max_deg = -1;

    CLI::App* c_compute = app.add_subcommand("compute", "g- and h-polynomials");
    add_common(c_compute, a, false);
    c_compute->add_option("--what", what, "g, h, or both")->check(CLI::IsMember({"g", "h", "both"}));
    c_compute->add_option("--method", method, "graph, recursion, stanley, or all")
        ->check(CLI::IsMember({"graph", "recursion", "stanley", "all"}));

    CLI::App* c_faces = app.add_subcommand("faces", "face lattice and f-vector");
    add_common(c_faces, a, false);

    CLI::App* c_fiber = app.add_subcommand("fiber", "resolution fiber over a face");
    add_common(c_fiber, a, true);
    c_fiber->add_option("--face-id", face_id_arg, "face id (edge counts joined by commas)")
        ->required();

    CLI::App* c_certify = app.add_subcommand("certify", "smallness certificate");
    add_common(c_certify, a, true);

    CLI::App* c_components = app.add_subcommand("components", "central fiber components");
    add_common(c_components, a, true);

    CLI::App* c_ring = app.add_subcommand("ring", "cohomology ring presentation and Hilbert function");
    add_common(c_ring, a, false);
    c_ring->add_option("--max-deg", max_deg, "extend the Hilbert function to this degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(c_compute))
            return emit("compute", a, "what=" + what + ";method=" + method,
                        [&] { return run_compute(a, what, method); });
        if (app.got_subcommand(c_faces)) return emit("faces", a, "", [&] { return run_faces(a); });
        if (app.got_subcommand(c_fiber))
            return emit("fiber", a, "face=" + face_id_arg,
                        [&] { return run_fiber(a, face_id_arg); });
        if (app.got_subcommand(c_certify))
            return emit("certify", a, "", [&] { return run_certify(a); });
        if (app.got_subcommand(c_components))
            return emit("components", a, "", [&] { return run_components(a); });
        if (app.got_subcommand(c_ring))
            return emit("ring", a, "maxdeg=" + std::to_string(max_deg),
                        [&] { return run_ring(a, max_deg); });
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const InstanceTooLarge& e) {
        std::cerr << "instance too large: " << e.what() << "\n";
        return 3;
    } catch (const NonGenericTheta& e) {
        std::cerr << "non-generic theta: " << e.what() << "\n";
        return 4;
    } catch (const CrossCheckFailure& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
