#pragma once

#include <map>
#include <utility>
#include <vector>

#include "kf/root_system.hpp"
#include "kf/weight.hpp"

namespace kf {

struct Cocover {
    Weight nu;    // the smaller weight
    Weight alpha; // labeling positive root, mu - nu
};

struct DominantInterval {
    Weight lambda;
    // Fixed linear extension: sorted by (<lambda - nu, rho_check>, lex).
    std::vector<Weight> elements;
    Weight bottom;
    std::map<Weight, std::vector<Cocover>> cocover_lists;
};

// Entries of the layer sum w_mu^+(t): dominant nu <= mu with t-exponent
// <mu - nu, rho_check>.
struct LayerSum {
    Weight mu;
    std::vector<std::pair<Weight, long long>> entries;
};

// nu <= mu in dominance order: mu - nu a non-negative sum of simple roots.
// Type A compares after equalizing sizes by adding full columns; sizes that
// differ by a non-multiple of the ambient dimension are incomparable lattices.
bool dominance_leq(const RootSystem& rs, const Weight& nu, const Weight& mu);

// All dominant nu <= lambda, with bottom element and complete cocover lists.
DominantInterval interval(const RootSystem& rs, const Weight& lambda);

// Maximal dominant weights strictly below mu, with positive-root labels.
std::vector<Cocover> cocovers(const RootSystem& rs, const Weight& mu);

// Family-specific stable-range inequality; always true in type A.
bool stable_range(const RootSystem& rs, const Weight& lambda);

LayerSum layer_sum(const RootSystem& rs, const Weight& mu);

} // namespace kf
