#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kf/crystal.hpp"
#include "kf/kostka.hpp"
#include "kf/root_system.hpp"
#include "kf/weight_poset.hpp"

namespace kf {

struct BPlusEdge {
    std::size_t from = 0, to = 0;
    Weight alpha;
};

struct AtomComponent {
    std::vector<std::size_t> node_ids; // sorted
    std::vector<std::size_t> heads;    // no incoming edge
    std::vector<std::size_t> feet;     // no outgoing edge
};

// The graph B(lambda)^+: dominant vertices of B(lambda) with modified-operator
// edges along dominance cocovers, plus its weak-connectivity components.
struct AtomicGraph {
    Weight lambda;
    std::vector<Word> vertices; // deterministic order: weight linear extension, then word
    std::vector<Weight> weights;
    std::vector<BPlusEdge> edges;
    std::vector<AtomComponent> components;
    // Cocovers whose modified operator does not exist (outside stable range).
    std::vector<std::string> stable_range_violations;
};

struct AtomReportEntry {
    Weight head_weight;
    std::size_t size = 0;
    bool unique_head = false, unique_foot = false;
    bool weights_distinct = false, equals_interval = false;
};

struct AtomReport {
    std::vector<AtomReportEntry> components;
    bool verdict = false;       // all components pass all four flags
    bool character_check = false; // sum of layer sums at t=1 matches K(1)
};

AtomicGraph build_bplus(const RootSystem& rs, const Weight& lambda);

AtomReport verify_atomic(const RootSystem& rs, const AtomicGraph& g);

struct TAtomicResult {
    AtomicExpansion expansion; // A_{lambda,mu}(t) from head charges
    std::vector<long long> vertex_charge; // per graph vertex, via the head shift
};

TAtomicResult t_atomic_typeA(const RootSystem& rs, const AtomicGraph& g);

std::string export_graph(const RootSystem& rs, const AtomicGraph& g, const std::string& format);

} // namespace kf
