#include "kf/weight_poset.hpp"

#include <algorithm>

namespace kf {

namespace {

void require_dominant(const RootSystem& rs, const Weight& w) {
    if (static_cast<int>(w.size()) != rs.dim())
        fail("RankMismatch", "weight " + w.str() + " has wrong length for rank " +
                                 std::to_string(rs.rank()));
    if (!rs.is_dominant(w)) fail("NotDominant", w.str() + " is not dominant");
}

// Dominant candidates nu that can satisfy nu <= lambda: weakly decreasing,
// entries bounded by lambda_1; type D additionally allows a negative last
// coordinate; type A restricts to partitions of |lambda|.
void enumerate_dominant(const RootSystem& rs, const Weight& lambda,
                        std::vector<Weight>& out) {
    int n = rs.dim();
    int top = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) top = std::max(top, lambda[i]);
    long long size = lambda.sum();

    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int bound, long long remaining) -> void {
        if (pos == n) {
            if (rs.family() == Family::A && remaining != 0) return;
            out.emplace_back(cur);
            return;
        }
        bool last = pos == n - 1;
        for (int v = bound; v >= 0; --v) {
            if (rs.family() == Family::A && v > remaining) continue;
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v, remaining - v);
        }
        if (last && rs.family() == Family::D) {
            for (int v = -1; v >= -bound; --v) {
                cur[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1, 0, remaining - v);
            }
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, top, size);
}

} // namespace

bool dominance_leq(const RootSystem& rs, const Weight& nu, const Weight& mu) {
    Weight a = nu;
    if (rs.family() == Family::A) {
        long long diff = mu.sum() - nu.sum();
        int n = rs.dim();
        if (diff % n != 0)
            fail("IncomparableLattice", "type A sizes differ by " + std::to_string(diff) +
                                            ", not a multiple of " + std::to_string(n));
        int shift = static_cast<int>(diff / n);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += shift;
    }
    auto c = rs.q_coords(mu - a);
    if (!c) return false;
    for (long long x : *c)
        if (x < 0) return false;
    return true;
}

std::vector<Cocover> cocovers(const RootSystem& rs, const Weight& mu) {
    require_dominant(rs, mu);
    DominantInterval iv = interval(rs, mu);
    std::vector<Cocover> out;
    auto it = iv.cocover_lists.find(mu);
    if (it != iv.cocover_lists.end()) out = it->second;
    return out;
}

DominantInterval interval(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda);
    DominantInterval iv;
    iv.lambda = lambda;

    std::vector<Weight> cands;
    enumerate_dominant(rs, lambda, cands);
    for (const Weight& nu : cands)
        if (dominance_leq(rs, nu, lambda)) iv.elements.push_back(nu);

    auto key = [&](const Weight& nu) {
        return std::pair<long long, Weight>(rs.rho_check_pairing(lambda - nu), nu);
    };
    std::sort(iv.elements.begin(), iv.elements.end(),
              [&](const Weight& a, const Weight& b) { return key(a) < key(b); });

    // Cocovers: maximal elements strictly below each element.
    for (const Weight& mu : iv.elements) {
        std::vector<Weight> below;
        for (const Weight& nu : iv.elements)
            if (nu != mu && dominance_leq(rs, nu, mu)) below.push_back(nu);
        std::vector<Cocover> cc;
        for (const Weight& nu : below) {
            bool maximal = true;
            for (const Weight& pi : below)
                if (pi != nu && dominance_leq(rs, nu, pi)) {
                    maximal = false;
                    break;
                }
            if (!maximal) continue;
            Weight alpha = mu - nu;
            if (!rs.is_positive_root(alpha))
                fail("NotARoot", "cocover difference " + alpha.str() + " below " + mu.str() +
                                     " is not a positive root");
            cc.push_back({nu, alpha});
        }
        std::sort(cc.begin(), cc.end(),
                  [&](const Cocover& a, const Cocover& b) { return key(a.nu) < key(b.nu); });
        iv.cocover_lists.emplace(mu, std::move(cc));
    }

    // Unique minimal element.
    std::vector<Weight> minima;
    for (const Weight& nu : iv.elements)
        if (iv.cocover_lists.at(nu).empty()) minima.push_back(nu);
    if (minima.size() != 1)
        fail("NoUniqueBottom", "interval below " + lambda.str() + " has " +
                                   std::to_string(minima.size()) + " minimal elements");
    iv.bottom = minima.front();
    return iv;
}

bool stable_range(const RootSystem& rs, const Weight& lambda) {
    long long sz = lambda.sum();
    long long n = rs.dim();
    switch (rs.family()) {
        case Family::A: return true;
        case Family::B: return 2 * n > sz;
        case Family::C: return 2 * n > sz + 1;
        case Family::D: return n > sz;
    }
    return false;
}

LayerSum layer_sum(const RootSystem& rs, const Weight& mu) {
    DominantInterval iv = interval(rs, mu);
    LayerSum ls;
    ls.mu = mu;
    for (const Weight& nu : iv.elements)
        ls.entries.emplace_back(nu, rs.rho_check_pairing(mu - nu));
    return ls;
}

} // namespace kf
