#pragma once

#include <utility>
#include <vector>

#include "kf/root_system.hpp"
#include "kf/tpoly.hpp"
#include "kf/weight_poset.hpp"

namespace kf {

struct DominantCharacter {
    Weight lambda;
    // One entry per element of interval(lambda), in its linear extension order.
    std::vector<std::pair<Weight, TPoly>> entries;
};

enum class AtomicVariant { Plain, Tilde };

struct AtomicExpansion {
    Weight lambda;
    AtomicVariant variant = AtomicVariant::Plain;
    std::vector<std::pair<Weight, TPoly>> entries;

    const TPoly& at(const Weight& mu) const;
};

// t-analogue of the Kostant partition function: coefficient of t^k counts
// multisets of k positive roots summing to beta.
TPoly kostant_partition_t(const RootSystem& rs, const Weight& beta);

// Same DP restricted to nonsimple positive roots.
TPoly m_t(const RootSystem& rs, const Weight& beta);

// Lusztig's alternating sum over the whole Weyl group.
TPoly kostka_foulkes(const RootSystem& rs, const Weight& lambda, const Weight& mu);

// Degree-reversed variant, d = <lambda-mu, rho_check>.
TPoly kostka_tilde(const RootSystem& rs, const Weight& lambda, const Weight& mu);

// Solves the triangular system expressing K (or K-tilde) through layer sums.
AtomicExpansion atomic_polys(const RootSystem& rs, const Weight& lambda, AtomicVariant variant);

DominantCharacter dominant_character_t(const RootSystem& rs, const Weight& lambda);

} // namespace kf
