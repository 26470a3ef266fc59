#include <climits>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kf/atomic_graph.hpp"
#include "kf/binf.hpp"
#include "kf/charge.hpp"
#include "kf/crystal.hpp"
#include "kf/error.hpp"
#include "kf/kostka.hpp"
#include "kf/root_system.hpp"
#include "kf/verify.hpp"
#include "kf/weight_poset.hpp"

using namespace kf;
using nlohmann::json;

namespace {

std::vector<long long> parse_csv(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            fail("BadCoordinates", "cannot parse '" + item + "' in '" + s + "'");
        }
    }
    if (out.empty()) fail("BadCoordinates", "empty coordinate list '" + s + "'");
    return out;
}

Weight parse_weight(const std::string& s, int dim) {
    auto v = parse_csv(s);
    if (static_cast<int>(v.size()) != dim)
        fail("RankMismatch", "expected " + std::to_string(dim) + " coordinates, got " +
                                 std::to_string(v.size()));
    Weight w(static_cast<std::size_t>(dim));
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = static_cast<int>(v[i]);
    return w;
}

struct WeightFlags {
    std::string epsilon; // --lambda / --mu
    std::string omega;   // --lambda-omega / --mu-omega
};

Weight resolve_weight(const RootSystem& rs, const WeightFlags& f, const std::string& what) {
    if (f.epsilon.empty() == f.omega.empty())
        fail("BadCoordinates", "give exactly one of --" + what + " and --" + what + "-omega");
    if (!f.epsilon.empty()) return parse_weight(f.epsilon, rs.dim());
    auto c = parse_csv(f.omega);
    if (static_cast<int>(c.size()) != rs.rank())
        fail("RankMismatch", "expected " + std::to_string(rs.rank()) + " omega coordinates");
    return rs.from_omega(c);
}

// Interval elements are labeled by omega coordinates (as a digit string when
// possible) if the input weight came in omega coordinates, else epsilon tuples.
std::string weight_label(const RootSystem& rs, const Weight& w, bool omega_mode) {
    if (!omega_mode) return w.str();
    auto c = rs.omega_coords(w);
    bool digits = true;
    for (long long x : c)
        if (x < 0 || x > 9) digits = false;
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!digits && i) out += ",";
        out += std::to_string(c[i]);
    }
    return out;
}

std::string poly_out(const TPoly& p, bool pretty) {
    if (pretty) return p.str();
    return json(p.coeffs()).dump();
}

long long eval_poly(const TPoly& p, long long x) {
    long long v = 0;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) v = v * x + p.coeffs()[k];
    return v;
}

json word_weight_json(const RootSystem& rs, const Word& w) {
    return json{{"word", w}, {"weight", word_weight(rs, w).coords()}};
}

json multisegment_json(const Multisegment& m) {
    json arr = json::array();
    for (const auto& [k, mult] : m.mult)
        arr.push_back({{"i", k.first}, {"j", k.second}, {"mult", mult}});
    return arr;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kostka-Foulkes polynomials, crystals and atomic decompositions"};
    app.require_subcommand(1);
    bool json_errors = false;
    app.add_flag("--json-errors", json_errors, "report domain errors as JSON on stderr");

    std::string family_s = "A", format = "text", suite, mu_pref;
    int rank = 0, letters = 0;
    WeightFlags lambda_f, mu_f;
    long long eval_at = LLONG_MIN, bound = 0, height_bound = 64;
    long long max_size = -1, max_height = -1;
    int max_rank = -1;
    bool pretty = false, tilde = false, list_vertices = false;

    auto add_rs = [&](CLI::App* cmd) {
        cmd->add_option("--family", family_s, "root system family: A, B, C or D")->required();
        cmd->add_option("--rank", rank, "root system rank")->required();
    };
    auto add_lambda = [&](CLI::App* cmd) {
        cmd->add_option("--lambda", lambda_f.epsilon, "weight in epsilon coordinates (csv)");
        cmd->add_option("--lambda-omega", lambda_f.omega,
                        "weight in fundamental-weight coordinates (csv)");
    };

    auto* c_rootsys = app.add_subcommand("rootsys", "print root system data");
    add_rs(c_rootsys);
    c_rootsys->add_option("--format", format, "text or json");

    auto* c_kostka = app.add_subcommand("kostka", "Kostka-Foulkes polynomial K_{lambda,mu}(t)");
    add_rs(c_kostka);
    add_lambda(c_kostka);
    c_kostka->add_option("--mu", mu_f.epsilon, "mu in epsilon coordinates (csv)");
    c_kostka->add_option("--mu-omega", mu_f.omega, "mu in omega coordinates (csv)");
    c_kostka->add_flag("--tilde", tilde, "degree-reversed variant K~");
    c_kostka->add_flag("--pretty", pretty, "human polynomial format");
    c_kostka->add_option("--eval", eval_at, "print the value at this integer instead");

    auto* c_atomic = app.add_subcommand("atomic-polys", "atomic expansion of the character");
    add_rs(c_atomic);
    add_lambda(c_atomic);
    c_atomic->add_flag("--tilde", tilde, "tilde variant");
    c_atomic->add_flag("--pretty", pretty, "human polynomial format");
    c_atomic->add_option("--eval", eval_at, "print values at this integer instead");

    auto* c_layer = app.add_subcommand("layer-sum", "layer sum w_mu^+(t)");
    add_rs(c_layer);
    c_layer->add_option("--mu", mu_f.epsilon, "mu in epsilon coordinates (csv)");
    c_layer->add_option("--mu-omega", mu_f.omega, "mu in omega coordinates (csv)");

    auto* c_crystal = app.add_subcommand("crystal", "generate the crystal B(lambda)");
    add_rs(c_crystal);
    add_lambda(c_crystal);
    c_crystal->add_option("--format", format, "text or json");
    c_crystal->add_flag("--list", list_vertices, "list all vertices in text mode");

    auto* c_bplus = app.add_subcommand("bplus", "dominant-vertex graph B(lambda)+");
    add_rs(c_bplus);
    add_lambda(c_bplus);
    c_bplus->add_option("--format", format, "json or dot");

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("--suite", suite, "suite name")->required();
    c_verify->add_option("--max-size", max_size, "partition size bound");
    c_verify->add_option("--max-rank", max_rank, "rank bound");
    c_verify->add_option("--max-height", max_height, "height bound");

    auto* c_binf = app.add_subcommand("binf", "truncated atoms of B(infinity) in type A");
    c_binf->add_option("--letters", letters, "alphabet size n (type A_{n-1})")->required();
    c_binf->add_option("--bound", bound, "segment-count bound for sources")->required();
    c_binf->add_option("--format", format, "text or json");

    auto* c_mt = app.add_subcommand("mt", "M_t(beta) via B(infinity) sources");
    c_mt->add_option("--letters", letters, "alphabet size n (type A_{n-1})")->required();
    c_mt->add_option("--beta", mu_pref, "beta in epsilon coordinates (csv)")->required();
    c_mt->add_option("--height-bound", height_bound, "enumeration bound");
    c_mt->add_flag("--pretty", pretty, "human polynomial format");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_rootsys) {
            auto rs = RootSystem::build(family_from_string(family_s), rank);
            if (format == "json") {
                json j;
                j["family"] = family_to_string(rs.family());
                j["rank"] = rs.rank();
                j["dim"] = rs.dim();
                for (const auto& a : rs.simple_roots()) j["simple_roots"].push_back(a.coords());
                for (const auto& a : rs.positive_roots())
                    j["positive_roots"].push_back(
                        {{"root", a.coords()}, {"height", rs.root_height(a)}});
                j["two_rho"] = rs.two_rho().coords();
                j["two_rho_check"] = rs.two_rho_check().coords();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << family_to_string(rs.family()) << rs.rank() << ", dim " << rs.dim()
                          << ", " << rs.positive_roots().size() << " positive roots\n";
                std::cout << "simple roots:";
                for (const auto& a : rs.simple_roots()) std::cout << " " << a.str();
                std::cout << "\npositive roots (height):\n";
                for (const auto& a : rs.positive_roots())
                    std::cout << "  " << a.str() << " (" << rs.root_height(a) << ")\n";
                std::cout << "2*rho = " << rs.two_rho().str()
                          << "\n2*rho_check = " << rs.two_rho_check().str() << "\n";
            }
        } else if (*c_kostka) {
            auto rs = RootSystem::build(family_from_string(family_s), rank);
            Weight lam = resolve_weight(rs, lambda_f, "lambda");
            Weight mu = resolve_weight(rs, mu_f, "mu");
            TPoly k = tilde ? kostka_tilde(rs, lam, mu) : kostka_foulkes(rs, lam, mu);
            if (eval_at != LLONG_MIN) std::cout << eval_poly(k, eval_at) << "\n";
            else std::cout << poly_out(k, pretty) << "\n";
        } else if (*c_atomic) {
            auto rs = RootSystem::build(family_from_string(family_s), rank);
            Weight lam = resolve_weight(rs, lambda_f, "lambda");
            bool omega_mode = !lambda_f.omega.empty();
            auto ax = atomic_polys(rs, lam, tilde ? AtomicVariant::Tilde : AtomicVariant::Plain);
            for (const auto& [mu, p] : ax.entries) {
                std::cout << weight_label(rs, mu, omega_mode) << " -> ";
                if (eval_at != LLONG_MIN) std::cout << eval_poly(p, eval_at);
                else std::cout << poly_out(p, pretty);
                std::cout << "\n";
            }
        } else if (*c_layer) {
            auto rs = RootSystem::build(family_from_string(family_s), rank);
            Weight mu = resolve_weight(rs, mu_f, "mu");
            auto ls = layer_sum(rs, mu);
            for (const auto& [nu, exp] : ls.entries)
                std::cout << nu.str() << " t^" << exp << "\n";
        } else if (*c_crystal) {
            auto rs = RootSystem::build(family_from_string(family_s), rank);
            Weight lam = resolve_weight(rs, lambda_f, "lambda");
            auto cg = generate_crystal(rs, lam);
            if (format == "json") {
                json j;
                j["lambda"] = lam.coords();
                j["dimension"] = cg.vertices.size();
                j["vertices"] = json::array();
                for (const Word& b : cg.vertices) j["vertices"].push_back(word_weight_json(rs, b));
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "vertices: " << cg.vertices.size() << "\n";
                if (list_vertices)
                    for (const Word& b : cg.vertices) {
                        for (std::size_t i = 0; i < b.size(); ++i)
                            std::cout << (i ? " " : "") << b[i];
                        std::cout << "  wt=" << word_weight(rs, b).str() << "\n";
                    }
            }
        } else if (*c_bplus) {
            auto rs = RootSystem::build(family_from_string(family_s), rank);
            Weight lam = resolve_weight(rs, lambda_f, "lambda");
            auto g = build_bplus(rs, lam);
            std::cout << export_graph(rs, g, format == "text" ? "json" : format);
        } else if (*c_verify) {
            VerifyOptions opts;
            opts.max_size = max_size;
            opts.max_rank = max_rank;
            opts.max_height = max_height;
            auto rep = run_suite(suite, opts);
            for (const auto& c : rep.cases)
                std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                          << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
            std::cout << rep.suite << ": " << (rep.cases.size() - rep.failures()) << "/"
                      << rep.cases.size() << " cases passed\n";
            if (!rep.all_pass()) return 1;
        } else if (*c_binf) {
            auto atoms = atoms_up_to(letters, bound);
            if (format == "json") {
                json j = json::array();
                for (const auto& a : atoms) {
                    json ja;
                    ja["source"] = multisegment_json(a.source);
                    ja["vertices"] = json::array();
                    for (const auto& v : a.vertices) ja["vertices"].push_back(multisegment_json(v));
                    j.push_back(std::move(ja));
                }
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& a : atoms) {
                    std::cout << "source |S|=" << a.source.size() << " "
                              << multisegment_json(a.source).dump() << " atom vertices: "
                              << a.vertices.size() << "\n";
                }
            }
        } else if (*c_mt) {
            auto beta_v = parse_csv(mu_pref);
            Weight beta(beta_v.size());
            for (std::size_t i = 0; i < beta_v.size(); ++i) beta[i] = static_cast<int>(beta_v[i]);
            TPoly p = mt_via_sources(letters, beta, height_bound);
            std::cout << poly_out(p, pretty) << "\n";
        }
    } catch (const Error& e) {
        if (json_errors)
            std::cerr << json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
        else std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
        return 1;
    }
    return 0;
}
