#include "kf/root_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

namespace kf {

Family family_from_string(const std::string& s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "B" || s == "b") return Family::B;
    if (s == "C" || s == "c") return Family::C;
    if (s == "D" || s == "d") return Family::D;
    fail("UnsupportedFamily", "unknown family '" + s + "'");
}

std::string family_to_string(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
    }
    return "?";
}

bool WeylElement::is_identity() const {
    for (std::size_t i = 0; i < images.size(); ++i)
        if (images[i] != static_cast<int>(i) + 1) return false;
    return true;
}

Weight WeylElement::act(const Weight& w) const {
    Weight r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        int im = images[i];
        int j = std::abs(im) - 1;
        r[static_cast<std::size_t>(j)] = (im > 0 ? w[i] : -w[i]);
    }
    return r;
}

WeylElement WeylElement::inverse() const {
    WeylElement r;
    r.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        int im = images[i];
        int j = std::abs(im) - 1;
        r.images[static_cast<std::size_t>(j)] =
            (im > 0 ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1));
    }
    r.word.assign(word.rbegin(), word.rend());
    return r;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
    WeylElement r;
    r.images.resize(a.images.size());
    for (std::size_t i = 0; i < a.images.size(); ++i) {
        int bi = b.images[i];
        int j = std::abs(bi) - 1;
        int ai = a.images[static_cast<std::size_t>(j)];
        r.images[i] = bi > 0 ? ai : -ai;
    }
    r.word = a.word;
    r.word.insert(r.word.end(), b.word.begin(), b.word.end());
    return r;
}

RootSystem RootSystem::build(Family family, int rank) {
    int min_rank = family == Family::D ? 3 : (family == Family::A ? 1 : 2);
    if (rank < min_rank)
        fail("RankTooSmall", "type " + family_to_string(family) + " needs rank >= " +
                                 std::to_string(min_rank) + ", got " + std::to_string(rank));

    RootSystem rs;
    rs.family_ = family;
    rs.rank_ = rank;
    rs.dim_ = family == Family::A ? rank + 1 : rank;
    int n = rs.dim_;

    auto eps = [n](int i) {
        Weight w(static_cast<std::size_t>(n));
        w[static_cast<std::size_t>(i)] = 1;
        return w;
    };

    for (int i = 0; i + 1 < n; ++i) rs.simple_.push_back(eps(i) - eps(i + 1));
    switch (family) {
        case Family::A: break;
        case Family::B: rs.simple_.push_back(eps(n - 1)); break;
        case Family::C: rs.simple_.push_back(2 * eps(n - 1)); break;
        case Family::D: rs.simple_.push_back(eps(n - 2) + eps(n - 1)); break;
    }

    // Fixed order: for each i, the e_i - e_j (j ascending), then e_i + e_j,
    // then the family-specific single-index root.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) rs.positive_.push_back(eps(i) - eps(j));
        if (family != Family::A)
            for (int j = i + 1; j < n; ++j) rs.positive_.push_back(eps(i) + eps(j));
        if (family == Family::B) rs.positive_.push_back(eps(i));
        if (family == Family::C) rs.positive_.push_back(2 * eps(i));
    }

    rs.two_rho_ = Weight(static_cast<std::size_t>(n));
    for (const Weight& a : rs.positive_) rs.two_rho_ += a;

    rs.two_rho_check_ = Weight(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int c = 0;
        switch (family) {
            case Family::A: c = 2 * (n - 1 - i); break;
            case Family::B: c = 2 * (n - i); break;
            case Family::C: c = 2 * (n - i) - 1; break;
            case Family::D: c = 2 * (n - 1 - i); break;
        }
        rs.two_rho_check_[static_cast<std::size_t>(i)] = c;
    }

    for (int i = 1; i <= rank; ++i) {
        Weight w(static_cast<std::size_t>(n));
        if (family == Family::B && i == n) {
            for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = 1;
        } else if (family == Family::D && i >= n - 1) {
            for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = 1;
            if (i == n - 1) w[static_cast<std::size_t>(n - 1)] = -1;
        } else {
            for (int k = 0; k < i; ++k) w[static_cast<std::size_t>(k)] = 2;
        }
        rs.two_omega_.push_back(std::move(w));
    }
    return rs;
}

Weight RootSystem::rho() const {
    Weight r(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        int c = two_rho_[static_cast<std::size_t>(i)];
        if (c % 2 != 0)
            fail("NonIntegralWeight", "rho is half-integral in type " + family_to_string(family_));
        r[static_cast<std::size_t>(i)] = c / 2;
    }
    return r;
}

bool RootSystem::is_positive_root(const Weight& a) const {
    return std::find(positive_.begin(), positive_.end(), a) != positive_.end();
}

bool RootSystem::is_root(const Weight& a) const {
    return is_positive_root(a) || is_positive_root(-a);
}

long long RootSystem::pair(const Weight& w, const Weight& a) const {
    if (!is_root(a)) fail("NotARoot", "pairing against a non-root " + a.str());
    long long num = 2 * dot(w, a), den = dot(a, a);
    // <a,a> is 2 or 4 here and always divides for integral w and roots a.
    if (num % den != 0)
        fail("NonIntegralWeight", "non-integral pairing of " + w.str() + " with " + a.str());
    return num / den;
}

std::vector<long long> RootSystem::omega_coords(const Weight& w) const {
    std::vector<long long> c;
    c.reserve(simple_.size());
    for (const Weight& a : simple_) c.push_back(pair(w, a));
    return c;
}

Weight RootSystem::from_omega(const std::vector<long long>& c) const {
    if (static_cast<int>(c.size()) != rank_)
        fail("RankMismatch", "expected " + std::to_string(rank_) + " omega coordinates");
    std::vector<long long> doubled(static_cast<std::size_t>(dim_), 0);
    for (int i = 0; i < rank_; ++i)
        for (int k = 0; k < dim_; ++k)
            doubled[static_cast<std::size_t>(k)] +=
                c[static_cast<std::size_t>(i)] *
                two_omega_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    Weight r(static_cast<std::size_t>(dim_));
    for (int k = 0; k < dim_; ++k) {
        if (doubled[static_cast<std::size_t>(k)] % 2 != 0)
            fail("NonIntegralWeight", "omega combination has half-integral epsilon-coordinates");
        r[static_cast<std::size_t>(k)] = static_cast<int>(doubled[static_cast<std::size_t>(k)] / 2);
    }
    return r;
}

long long RootSystem::root_height(const Weight& a) const {
    if (!is_positive_root(a)) fail("NotAPositiveRoot", a.str() + " is not a positive root");
    return rho_check_pairing(a);
}

long long RootSystem::rho_check_pairing(const Weight& w) const {
    long long d = dot(w, two_rho_check_);
    if (d % 2 != 0)
        fail("NonIntegralWeight", "odd rho_check pairing for " + w.str());
    return d / 2;
}

std::optional<std::vector<long long>> RootSystem::q_coords(const Weight& b) const {
    int n = dim_;
    std::vector<long long> s(static_cast<std::size_t>(n), 0);
    long long acc = 0;
    for (int i = 0; i < n; ++i) {
        acc += b[static_cast<std::size_t>(i)];
        s[static_cast<std::size_t>(i)] = acc;
    }
    std::vector<long long> c(static_cast<std::size_t>(rank_), 0);
    switch (family_) {
        case Family::A:
            if (s[static_cast<std::size_t>(n - 1)] != 0) return std::nullopt;
            for (int k = 0; k < rank_; ++k) c[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k)];
            break;
        case Family::B:
            for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k)];
            break;
        case Family::C:
            for (int k = 0; k + 1 < n; ++k) c[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k)];
            if (s[static_cast<std::size_t>(n - 1)] % 2 != 0) return std::nullopt;
            c[static_cast<std::size_t>(n - 1)] = s[static_cast<std::size_t>(n - 1)] / 2;
            break;
        case Family::D: {
            for (int k = 0; k + 2 < n; ++k) c[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k)];
            long long s2 = n >= 2 ? (n >= 3 ? s[static_cast<std::size_t>(n - 3)] : 0) : 0;
            long long bm = b[static_cast<std::size_t>(n - 2)], bn = b[static_cast<std::size_t>(n - 1)];
            long long m = s2 + bm - bn, p = s2 + bm + bn;
            if (m % 2 != 0 || p % 2 != 0) return std::nullopt;
            c[static_cast<std::size_t>(n - 2)] = m / 2;
            c[static_cast<std::size_t>(n - 1)] = p / 2;
            break;
        }
    }
    return c;
}

WeylElement RootSystem::identity() const {
    WeylElement e;
    for (int i = 1; i <= dim_; ++i) e.images.push_back(i);
    return e;
}

WeylElement RootSystem::simple_reflection(int i) const {
    if (i < 1 || i > rank_) fail("BadSimpleIndex", "simple index " + std::to_string(i));
    WeylElement s = identity();
    int n = dim_;
    if (i < n || family_ == Family::A) {
        std::swap(s.images[static_cast<std::size_t>(i - 1)], s.images[static_cast<std::size_t>(i)]);
    } else if (family_ == Family::B || family_ == Family::C) {
        s.images[static_cast<std::size_t>(n - 1)] = -n;
    } else { // D: e_{n-1} <-> -e_n
        s.images[static_cast<std::size_t>(n - 2)] = -n;
        s.images[static_cast<std::size_t>(n - 1)] = -(n - 1);
    }
    s.word = {i};
    return s;
}

const std::vector<WeylElement>& RootSystem::weyl_group() const {
    if (group_) return *group_;
    auto grp = std::make_shared<std::vector<WeylElement>>();
    std::unordered_map<std::string, std::size_t> seen;
    auto key = [](const WeylElement& w) {
        std::string k;
        for (int im : w.images) {
            k += std::to_string(im);
            k += ',';
        }
        return k;
    };
    std::vector<WeylElement> gens;
    for (int i = 1; i <= rank_; ++i) gens.push_back(simple_reflection(i));
    grp->push_back(identity());
    seen.emplace(key(grp->front()), 0);
    for (std::size_t head = 0; head < grp->size(); ++head) {
        WeylElement w = (*grp)[head];
        for (const WeylElement& s : gens) {
            WeylElement ws = compose(w, s);
            auto [it, fresh] = seen.emplace(key(ws), grp->size());
            if (fresh) grp->push_back(std::move(ws));
        }
    }
    group_ = std::move(grp);
    return *group_;
}

std::vector<WeylElement> RootSystem::all_minimal_conjugators(const Weight& target, int base) const {
    const Weight& ab = simple_[static_cast<std::size_t>(base - 1)];
    std::vector<WeylElement> out;
    std::size_t best = 0;
    for (const WeylElement& w : weyl_group()) {
        if (!out.empty() && w.length() > best) break;
        if (w.act(ab) == target) {
            if (out.empty()) best = w.length();
            out.push_back(w);
        }
    }
    if (out.empty())
        fail("NotInOrbit", target.str() + " is not in the Weyl orbit of simple root #" +
                               std::to_string(base));
    return out;
}

WeylElement RootSystem::minimal_conjugator(const Weight& target, int base) const {
    return all_minimal_conjugators(target, base).front();
}

bool RootSystem::is_dominant(const Weight& w) const {
    for (const Weight& a : simple_)
        if (dot(w, a) < 0) return false;
    return true;
}

} // namespace kf
