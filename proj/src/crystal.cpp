#include "kf/crystal.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace kf {

namespace {

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int x : w) h = (h ^ static_cast<std::size_t>(x + 0x7fff)) * 0x100000001b3ULL;
        return h;
    }
};

// Letter-level crystal data for color i: eps, phi, and the images under f/e.
struct LetterOps {
    int eps = 0, phi = 0;
    int fimg = 0, eimg = 0; // valid only when phi/eps > 0
};

LetterOps letter_ops(const RootSystem& rs, int x, int i) {
    int n = rs.dim();
    LetterOps L;
    bool last = i == rs.rank() && rs.family() != Family::A;
    if (!last) {
        // i -> i+1 and (i+1)-bar -> i-bar
        if (x == i) { L.phi = 1; L.fimg = i + 1; }
        if (x == -(i + 1)) { L.phi = 1; L.fimg = -i; }
        if (x == i + 1) { L.eps = 1; L.eimg = i; }
        if (x == -i) { L.eps = 1; L.eimg = -(i + 1); }
        return L;
    }
    switch (rs.family()) {
        case Family::C:
            if (x == n) { L.phi = 1; L.fimg = -n; }
            if (x == -n) { L.eps = 1; L.eimg = n; }
            break;
        case Family::B:
            // n -> 0 -> n-bar is a single string of length 2 for color n.
            if (x == n) { L.phi = 2; L.fimg = 0; }
            if (x == 0) { L.phi = 1; L.fimg = -n; L.eps = 1; L.eimg = n; }
            if (x == -n) { L.eps = 2; L.eimg = 0; }
            break;
        case Family::D:
            if (x == n - 1) { L.phi = 1; L.fimg = -n; }
            if (x == n) { L.phi = 1; L.fimg = -(n - 1); }
            if (x == -n) { L.eps = 1; L.eimg = n - 1; }
            if (x == -(n - 1)) { L.eps = 1; L.eimg = n; }
            break;
        case Family::A:
            break;
    }
    return L;
}

struct Fold {
    long long eps = 0, phi = 0;
    int fpos = -1, epos = -1;
};

// The tensor factors are read right-to-left: the orientation is pinned by the
// convention that f~_1 applied to the word "11" yields "12" (rightmost 1 moves).
Fold fold_word(const RootSystem& rs, const Word& w, int i) {
    Fold s;
    for (std::size_t r = w.size(); r-- > 0;) {
        std::size_t j = r;
        LetterOps L = letter_ops(rs, w[j], i);
        // f: acts on the prefix when phi(prefix) > eps(letter)
        if (s.phi <= L.eps) s.fpos = L.phi > 0 ? static_cast<int>(j) : -1;
        // e: acts on the letter when phi(prefix) < eps(letter)
        if (s.phi < L.eps) s.epos = static_cast<int>(j);
        long long neps = s.eps + std::max(0LL, L.eps - s.phi);
        long long nphi = L.phi + std::max(0LL, s.phi - L.eps);
        s.eps = neps;
        s.phi = nphi;
    }
    return s;
}

void check_color(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.rank()) fail("BadSimpleIndex", "color " + std::to_string(i));
}

} // namespace

Weight word_weight(const RootSystem& rs, const Word& w) {
    Weight wt(static_cast<std::size_t>(rs.dim()));
    for (int x : w) {
        if (x > 0) wt[static_cast<std::size_t>(x - 1)] += 1;
        else if (x < 0) wt[static_cast<std::size_t>(-x - 1)] -= 1;
    }
    return wt;
}

long long word_phi(const RootSystem& rs, const Word& w, int i) {
    check_color(rs, i);
    return fold_word(rs, w, i).phi;
}

long long word_eps(const RootSystem& rs, const Word& w, int i) {
    check_color(rs, i);
    return fold_word(rs, w, i).eps;
}

std::optional<Word> kashiwara_f(const RootSystem& rs, const Word& w, int i) {
    check_color(rs, i);
    Fold s = fold_word(rs, w, i);
    if (s.phi == 0) return std::nullopt;
    Word r = w;
    r[static_cast<std::size_t>(s.fpos)] = letter_ops(rs, w[static_cast<std::size_t>(s.fpos)], i).fimg;
    return r;
}

std::optional<Word> kashiwara_e(const RootSystem& rs, const Word& w, int i) {
    check_color(rs, i);
    Fold s = fold_word(rs, w, i);
    if (s.eps == 0) return std::nullopt;
    Word r = w;
    r[static_cast<std::size_t>(s.epos)] = letter_ops(rs, w[static_cast<std::size_t>(s.epos)], i).eimg;
    return r;
}

Word highest_weight_vertex(const RootSystem& rs, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != rs.dim())
        fail("RankMismatch", "weight length does not match rank");
    int prev = lambda.size() ? lambda[0] : 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0 || lambda[i] > prev)
            fail("TooManyRows", lambda.str() + " is not a partition with <= n parts");
        prev = lambda[i];
    }
    // Rows read bottom-to-top: highest under the right-to-left tensor order.
    Word w;
    for (std::size_t i = lambda.size(); i-- > 0;)
        for (int k = 0; k < lambda[i]; ++k) w.push_back(static_cast<int>(i) + 1);
    for (int i = 1; i <= rs.rank(); ++i)
        if (kashiwara_e(rs, w, i))
            fail("InternalError", "canonical word for " + lambda.str() + " is not highest");
    if (word_weight(rs, w) != lambda)
        fail("InternalError", "canonical word has the wrong weight");
    return w;
}

unsigned long long weyl_dim(const RootSystem& rs, const Weight& lambda) {
    unsigned long long num = 1, den = 1;
    for (const Weight& a : rs.positive_roots()) {
        long long top = dot(2 * lambda + rs.two_rho(), a);
        long long bot = dot(rs.two_rho(), a);
        num *= static_cast<unsigned long long>(top);
        den *= static_cast<unsigned long long>(bot);
        unsigned long long g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    if (den != 1) fail("InternalError", "non-integral Weyl dimension");
    return num;
}

CrystalGraph generate_crystal(const RootSystem& rs, const Weight& lambda, std::size_t cap) {
    CrystalGraph g;
    g.lambda = lambda;
    g.highest = highest_weight_vertex(rs, lambda);
    std::unordered_set<Word, WordHash> seen;
    g.vertices.push_back(g.highest);
    seen.insert(g.highest);
    for (std::size_t head = 0; head < g.vertices.size(); ++head) {
        Word w = g.vertices[head];
        for (int i = 1; i <= rs.rank(); ++i) {
            auto next = kashiwara_f(rs, w, i);
            if (!next) continue;
            if (seen.insert(*next).second) {
                g.vertices.push_back(std::move(*next));
                if (g.vertices.size() > cap)
                    fail("BudgetExceeded", "crystal vertex cap " + std::to_string(cap) +
                                               " exceeded for " + lambda.str());
            }
        }
    }
    return g;
}

Word weyl_action_vertex(const RootSystem& rs, const WeylElement& g, const Word& b) {
    Word cur = b;
    for (auto it = g.word.rbegin(); it != g.word.rend(); ++it) {
        int i = *it;
        long long k = rs.pair(word_weight(rs, cur), rs.simple_roots()[static_cast<std::size_t>(i - 1)]);
        if (k >= 0) {
            for (long long s = 0; s < k; ++s) {
                auto nx = kashiwara_f(rs, cur, i);
                if (!nx) fail("InternalError", "string reflection fell off the f-string");
                cur = std::move(*nx);
            }
        } else {
            for (long long s = 0; s < -k; ++s) {
                auto nx = kashiwara_e(rs, cur, i);
                if (!nx) fail("InternalError", "string reflection fell off the e-string");
                cur = std::move(*nx);
            }
        }
    }
    return cur;
}

namespace {

std::optional<Word> modified_op(const RootSystem& rs, const Weight& alpha, const Word& b,
                                bool lower) {
    if (!rs.is_positive_root(alpha))
        fail("NotAPositiveRoot", alpha.str() + " is not a positive root");
    int base = 1;
    if (rs.family() == Family::B && dot(alpha, alpha) == 1) base = rs.rank();
    WeylElement w = rs.minimal_conjugator(alpha, base); // throws NotInOrbit
    Word inner = weyl_action_vertex(rs, w.inverse(), b);
    auto mid = lower ? kashiwara_f(rs, inner, base) : kashiwara_e(rs, inner, base);
    if (!mid) return std::nullopt;
    return weyl_action_vertex(rs, w, *mid);
}

} // namespace

std::optional<Word> modified_f(const RootSystem& rs, const Weight& alpha, const Word& b) {
    return modified_op(rs, alpha, b, true);
}

std::optional<Word> modified_e(const RootSystem& rs, const Weight& alpha, const Word& b) {
    return modified_op(rs, alpha, b, false);
}

} // namespace kf
