#include "kf/kostka.hpp"

#include <algorithm>
#include <unordered_map>

namespace kf {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x7fff)) * 0x100000001b3ULL;
        return h;
    }
};

// DP over a fixed root list: N(k, beta) = N(k+1, beta) + t * N(k, beta - roots[k]).
class PartitionCounter {
public:
    PartitionCounter(RootSystem rs, std::vector<Weight> roots)
        : rs_(std::move(rs)), roots_(std::move(roots)) {}

    TPoly count(const Weight& beta) { return rec(0, beta); }

private:
    TPoly rec(std::size_t k, const Weight& beta) {
        auto q = rs_.q_coords(beta);
        if (!q) return TPoly{};
        bool zero = true;
        for (long long c : *q) {
            if (c < 0) return TPoly{};
            if (c != 0) zero = false;
        }
        if (zero) return TPoly{1};
        if (k == roots_.size()) return TPoly{};
        std::vector<int> key;
        key.reserve(beta.size() + 1);
        key.push_back(static_cast<int>(k));
        key.insert(key.end(), beta.coords().begin(), beta.coords().end());
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        TPoly r = rec(k + 1, beta) + TPoly{0, 1} * rec(k, beta - roots_[k]);
        memo_.emplace(std::move(key), r);
        return r;
    }

    RootSystem rs_;
    std::vector<Weight> roots_;
    std::unordered_map<std::vector<int>, TPoly, VecHash> memo_;
};

struct CacheKey {
    Family f;
    int rank;
    bool skip_simple;
    bool operator==(const CacheKey&) const = default;
};
struct CacheKeyHash {
    std::size_t operator()(const CacheKey& k) const {
        return (static_cast<std::size_t>(k.f) << 9) ^ (static_cast<std::size_t>(k.rank) << 1) ^
               static_cast<std::size_t>(k.skip_simple);
    }
};

PartitionCounter& counter_for(const RootSystem& rs, bool skip_simple) {
    static std::unordered_map<CacheKey, PartitionCounter, CacheKeyHash> cache;
    CacheKey key{rs.family(), rs.rank(), skip_simple};
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<Weight> roots;
        for (const Weight& a : rs.positive_roots()) {
            if (skip_simple) {
                const auto& s = rs.simple_roots();
                if (std::find(s.begin(), s.end(), a) != s.end()) continue;
            }
            roots.push_back(a);
        }
        it = cache.emplace(key, PartitionCounter(rs, std::move(roots))).first;
    }
    return it->second;
}

void require_dominant(const RootSystem& rs, const Weight& w) {
    if (static_cast<int>(w.size()) != rs.dim())
        fail("RankMismatch", "weight " + w.str() + " has wrong length for rank " +
                                 std::to_string(rs.rank()));
    if (!rs.is_dominant(w)) fail("NotDominant", w.str() + " is not dominant");
}

} // namespace

const TPoly& AtomicExpansion::at(const Weight& mu) const {
    for (const auto& [w, p] : entries)
        if (w == mu) return p;
    fail("NotInInterval", mu.str() + " is not an entry of the atomic expansion");
}

TPoly kostant_partition_t(const RootSystem& rs, const Weight& beta) {
    return counter_for(rs, false).count(beta);
}

TPoly m_t(const RootSystem& rs, const Weight& beta) {
    return counter_for(rs, true).count(beta);
}

TPoly kostka_foulkes(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    require_dominant(rs, lambda);
    require_dominant(rs, mu);
    Weight v = 2 * lambda + rs.two_rho();
    Weight shift = 2 * mu + rs.two_rho();
    auto& counter = counter_for(rs, false);
    TPoly total;
    for (const WeylElement& w : rs.weyl_group()) {
        Weight doubled = w.act(v) - shift;
        Weight beta(doubled.size());
        bool ok = true;
        for (std::size_t i = 0; i < doubled.size(); ++i) {
            if (doubled[i] % 2 != 0) { ok = false; break; }
            beta[i] = doubled[i] / 2;
        }
        if (!ok) fail("InternalError", "odd Lusztig-sum coordinates"); // cannot happen
        TPoly p = counter.count(beta);
        if (p.is_zero()) continue;
        if (w.length() % 2 == 0) total += p;
        else total -= p;
    }
    return total;
}

TPoly kostka_tilde(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    TPoly k = kostka_foulkes(rs, lambda, mu);
    if (k.is_zero()) return k;
    long long d = rs.rho_check_pairing(lambda - mu);
    return poly_reverse(k, d);
}

AtomicExpansion atomic_polys(const RootSystem& rs, const Weight& lambda, AtomicVariant variant) {
    DominantInterval iv = interval(rs, lambda);
    AtomicExpansion ax;
    ax.lambda = lambda;
    ax.variant = variant;
    // Linear extension starts at lambda; peel off in that order.
    for (const Weight& nu : iv.elements) {
        TPoly a = variant == AtomicVariant::Plain ? kostka_foulkes(rs, lambda, nu)
                                                  : kostka_tilde(rs, lambda, nu);
        for (const auto& [mu, amu] : ax.entries) {
            if (!dominance_leq(rs, nu, mu)) continue;
            if (variant == AtomicVariant::Plain) {
                long long e = rs.rho_check_pairing(mu - nu);
                a -= TPoly::monomial(1, static_cast<std::size_t>(e)) * amu;
            } else {
                a -= amu;
            }
        }
        ax.entries.emplace_back(nu, std::move(a));
    }
    return ax;
}

DominantCharacter dominant_character_t(const RootSystem& rs, const Weight& lambda) {
    DominantInterval iv = interval(rs, lambda);
    DominantCharacter dc;
    dc.lambda = lambda;
    for (const Weight& mu : iv.elements)
        dc.entries.emplace_back(mu, kostka_foulkes(rs, lambda, mu));
    return dc;
}

} // namespace kf
