#include "kf/atomic_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

#include "kf/charge.hpp"

namespace kf {

using nlohmann::json;

AtomicGraph build_bplus(const RootSystem& rs, const Weight& lambda) {
    AtomicGraph g;
    g.lambda = lambda;

    DominantInterval iv = interval(rs, lambda);
    CrystalGraph cg = generate_crystal(rs, lambda);

    std::vector<std::pair<std::pair<long long, Word>, Word>> order; // ((height, word), word)
    std::map<Weight, long long> hkey;
    for (const Weight& nu : iv.elements) hkey[nu] = rs.rho_check_pairing(lambda - nu);
    for (const Word& b : cg.vertices) {
        Weight wt = word_weight(rs, b);
        if (rs.is_dominant(wt)) {
            // dominant crystal weights always lie in the interval
            order.push_back({{hkey.at(wt), b}, b});
        }
    }
    std::sort(order.begin(), order.end());
    std::map<Word, std::size_t> index;
    for (auto& [k, b] : order) {
        index.emplace(b, g.vertices.size());
        g.weights.push_back(word_weight(rs, b));
        g.vertices.push_back(std::move(b));
    }

    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        for (const Cocover& cc : iv.cocover_lists.at(g.weights[v])) {
            std::optional<Word> img;
            try {
                img = modified_f(rs, cc.alpha, g.vertices[v]);
            } catch (const Error& e) {
                if (e.kind() != "NotInOrbit") throw;
                g.stable_range_violations.push_back("cocover " + g.weights[v].str() + " -> " +
                                                    cc.nu.str() + " label " + cc.alpha.str() +
                                                    ": " + e.kind());
                continue;
            }
            if (!img) {
                g.stable_range_violations.push_back("cocover " + g.weights[v].str() + " -> " +
                                                    cc.nu.str() + " label " + cc.alpha.str() +
                                                    ": operator vanished");
                continue;
            }
            auto it = index.find(*img);
            if (it == index.end())
                fail("InternalError", "modified operator left the dominant vertex set");
            g.edges.push_back({v, it->second, cc.alpha});
        }
    }

    // Weak connectivity components via union-find.
    std::vector<std::size_t> parent(g.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges) parent[find(e.from)] = find(e.to);

    std::map<std::size_t, AtomComponent> comps;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) comps[find(v)].node_ids.push_back(v);
    std::vector<char> has_in(g.vertices.size(), 0), has_out(g.vertices.size(), 0);
    for (const auto& e : g.edges) {
        has_in[e.to] = 1;
        has_out[e.from] = 1;
    }
    for (auto& [root, comp] : comps) {
        for (std::size_t v : comp.node_ids) {
            if (!has_in[v]) comp.heads.push_back(v);
            if (!has_out[v]) comp.feet.push_back(v);
        }
        g.components.push_back(std::move(comp));
    }
    // Deterministic component order: by smallest node id.
    std::sort(g.components.begin(), g.components.end(),
              [](const AtomComponent& a, const AtomComponent& b) {
                  return a.node_ids.front() < b.node_ids.front();
              });
    return g;
}

AtomReport verify_atomic(const RootSystem& rs, const AtomicGraph& g) {
    AtomReport rep;
    rep.verdict = g.stable_range_violations.empty();
    for (const auto& comp : g.components) {
        AtomReportEntry e;
        e.size = comp.node_ids.size();
        e.unique_head = comp.heads.size() == 1;
        e.unique_foot = comp.feet.size() == 1;
        std::multiset<Weight> wts;
        for (std::size_t v : comp.node_ids) wts.insert(g.weights[v]);
        e.weights_distinct = std::set<Weight>(wts.begin(), wts.end()).size() == wts.size();
        if (e.unique_head) {
            e.head_weight = g.weights[comp.heads.front()];
            auto ivh = interval(rs, e.head_weight);
            std::set<Weight> expect(ivh.elements.begin(), ivh.elements.end());
            e.equals_interval = std::set<Weight>(wts.begin(), wts.end()) == expect &&
                                e.weights_distinct;
        }
        rep.verdict = rep.verdict && e.unique_head && e.unique_foot && e.weights_distinct &&
                      e.equals_interval;
        rep.components.push_back(std::move(e));
    }

    // Character cross-check at t=1: each dominant mu <= lambda must be covered
    // by exactly K_{lambda,mu}(1) components (counting mu in the head interval).
    rep.character_check = true;
    DominantInterval iv = interval(rs, g.lambda);
    for (const Weight& mu : iv.elements) {
        long long covered = 0;
        for (const auto& e : rep.components) {
            if (!e.unique_head) continue;
            if (dominance_leq(rs, mu, e.head_weight)) ++covered;
        }
        if (covered != kostka_foulkes(rs, g.lambda, mu).eval_at_one())
            rep.character_check = false;
    }
    return rep;
}

TAtomicResult t_atomic_typeA(const RootSystem& rs, const AtomicGraph& g) {
    if (rs.family() != Family::A) fail("NotTypeA", "t-atomic statistics exist only in type A");
    AtomReport rep = verify_atomic(rs, g);
    if (!rep.verdict) fail("NotAtomic", "graph is not an atomic decomposition");

    TAtomicResult res;
    res.expansion.lambda = g.lambda;
    res.expansion.variant = AtomicVariant::Plain;
    res.vertex_charge.assign(g.vertices.size(), 0);

    std::map<Weight, TPoly> acc;
    for (const auto& comp : g.components) {
        std::size_t h = comp.heads.front();
        long long ch = charge(insertion_tableau(g.vertices[h]));
        acc[g.weights[h]] += TPoly::monomial(1, static_cast<std::size_t>(ch));
        for (std::size_t v : comp.node_ids)
            res.vertex_charge[v] =
                ch + rs.rho_check_pairing(g.weights[h] - g.weights[v]);
    }
    DominantInterval iv = interval(rs, g.lambda);
    for (const Weight& mu : iv.elements) {
        auto it = acc.find(mu);
        res.expansion.entries.emplace_back(mu, it == acc.end() ? TPoly{} : it->second);
    }
    return res;
}

namespace {

json word_json(const Word& w) { return json(w); }

} // namespace

std::string export_graph(const RootSystem& rs, const AtomicGraph& g, const std::string& format) {
    if (format == "json") {
        json j;
        j["lambda"] = g.lambda.coords();
        j["nodes"] = json::array();
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            j["nodes"].push_back({{"id", v}, {"word", word_json(g.vertices[v])},
                                  {"weight", g.weights[v].coords()}});
        j["edges"] = json::array();
        for (const auto& e : g.edges)
            j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"root", e.alpha.coords()}});
        j["components"] = json::array();
        for (const auto& c : g.components) {
            json jc;
            jc["node_ids"] = c.node_ids;
            jc["head"] = c.heads.size() == 1 ? json(c.heads.front()) : json();
            jc["foot"] = c.feet.size() == 1 ? json(c.feet.front()) : json();
            if (c.heads.size() == 1) {
                jc["head_weight"] = g.weights[c.heads.front()].coords();
                if (rs.family() == Family::A)
                    jc["charge"] = charge(insertion_tableau(g.vertices[c.heads.front()]));
            }
            j["components"].push_back(std::move(jc));
        }
        j["stable_range_violations"] = g.stable_range_violations;
        return j.dump(2) + "\n";
    }
    if (format == "dot") {
        std::string out = "digraph bplus {\n";
        for (std::size_t ci = 0; ci < g.components.size(); ++ci) {
            out += "  subgraph cluster_" + std::to_string(ci) + " {\n";
            for (std::size_t v : g.components[ci].node_ids) {
                out += "    n" + std::to_string(v) + " [label=\"" + g.weights[v].str() + "\"];\n";
            }
            out += "  }\n";
        }
        for (const auto& e : g.edges)
            out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) +
                   " [label=\"" + e.alpha.str() + "\"];\n";
        out += "}\n";
        return out;
    }
    fail("UnknownFormat", "export format '" + format + "'");
}

} // namespace kf
