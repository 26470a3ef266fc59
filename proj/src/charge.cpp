#include "kf/charge.hpp"

#include <algorithm>
#include <numeric>

#include "kf/error.hpp"

namespace kf {

std::vector<int> SSYT::shape() const {
    std::vector<int> s;
    for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
    return s;
}

std::vector<int> SSYT::content() const {
    std::vector<int> c;
    for (const auto& r : rows)
        for (int x : r) {
            if (x > static_cast<int>(c.size())) c.resize(static_cast<std::size_t>(x), 0);
            c[static_cast<std::size_t>(x - 1)] += 1;
        }
    return c;
}

void check_ssyt(const SSYT& t) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (row.empty()) fail("NotATableau", "empty row");
        if (r && t.rows[r - 1].size() < row.size()) fail("NotATableau", "shape not a partition");
        for (std::size_t j = 0; j + 1 < row.size(); ++j)
            if (row[j] > row[j + 1]) fail("NotATableau", "row not weakly increasing");
        if (r)
            for (std::size_t j = 0; j < row.size(); ++j)
                if (t.rows[r - 1][j] >= row[j]) fail("NotATableau", "column not strictly increasing");
    }
}

SSYT row_insert(const SSYT& t, int x) {
    SSYT out = t;
    int cur = x;
    for (std::size_t r = 0;; ++r) {
        if (r == out.rows.size()) {
            out.rows.push_back({cur});
            break;
        }
        auto& row = out.rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), cur);
        if (it == row.end()) {
            row.push_back(cur);
            break;
        }
        std::swap(cur, *it);
    }
    return out;
}

SSYT insertion_tableau(const std::vector<int>& word) {
    SSYT t;
    for (int x : word) t = row_insert(t, x);
    return t;
}

SSYT cyclage(const SSYT& t) {
    if (t.rows.size() <= 1) fail("AlreadyRowTableau", "cyclage fixed point reached");
    SSYT rest = t;
    int x = rest.rows.back().front();
    rest.rows.back().erase(rest.rows.back().begin());
    if (rest.rows.back().empty()) rest.rows.pop_back();
    return row_insert(rest, x);
}

long long cocharge(const SSYT& t) {
    check_ssyt(t);
    auto c = t.content();
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] < c[i + 1])
            fail("NonDominantContent", "cocharge requires weakly decreasing content");
    long long steps = 0;
    SSYT cur = t;
    while (cur.rows.size() > 1) {
        cur = cyclage(cur);
        ++steps;
    }
    return steps;
}

long long charge(const SSYT& t) {
    auto c = t.content();
    long long norm = 0;
    for (std::size_t i = 0; i < c.size(); ++i) norm += static_cast<long long>(i) * c[i];
    return norm - cocharge(t);
}

namespace {

std::vector<int> trimmed_parts(const Weight& w) {
    std::vector<int> p;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0 || (i && w[i] > w[i - 1]))
            fail("NotAPartition", w.str() + " is not a partition");
        if (w[i] > 0) p.push_back(w[i]);
    }
    return p;
}

} // namespace

std::vector<SSYT> tableaux(const Weight& lambda, const Weight& mu) {
    auto lam = trimmed_parts(lambda);
    auto m = trimmed_parts(mu);
    std::vector<SSYT> out;
    if (std::accumulate(lam.begin(), lam.end(), 0LL) !=
        std::accumulate(m.begin(), m.end(), 0LL))
        fail("SizeMismatch", "shape and content have different sizes");

    // Add letters 1,2,... as horizontal strips growing towards lam.
    SSYT t;
    auto rec = [&](auto&& self, std::size_t letter) -> void {
        if (letter == m.size()) {
            if (t.shape() == lam) out.push_back(t);
            return;
        }
        int need = m[letter];
        // choose cells row by row (bottom to top so strips stay horizontal)
        auto place = [&](auto&& go, int row, int remaining) -> void {
            if (row < 0) {
                if (remaining == 0) self(self, letter + 1);
                return;
            }
            std::size_t r = static_cast<std::size_t>(row);
            int cur_len = r < t.rows.size() ? static_cast<int>(t.rows[r].size()) : 0;
            int above_len = r == 0 ? lam[0] : static_cast<int>(t.rows[r - 1].size());
            int max_len = std::min(r < lam.size() ? lam[r] : 0, above_len);
            int can_add = std::max(0, max_len - cur_len);
            for (int add = std::min(can_add, remaining); add >= 0; --add) {
                if (add > 0 && r >= t.rows.size()) t.rows.resize(r + 1);
                for (int k = 0; k < add; ++k) t.rows[r].push_back(static_cast<int>(letter) + 1);
                go(go, row - 1, remaining - add);
                for (int k = 0; k < add; ++k) t.rows[r].pop_back();
                if (add > 0 && t.rows[r].empty()) t.rows.resize(r);
            }
        };
        place(place, static_cast<int>(letter), need);
    };
    rec(rec, 0);

    for (auto& t2 : out) check_ssyt(t2);
    return out;
}

TPoly kostka_via_charge(const Weight& lambda, const Weight& mu, int n) {
    if (static_cast<int>(trimmed_parts(lambda).size()) > n ||
        static_cast<int>(trimmed_parts(mu).size()) > n)
        fail("TooManyRows", "more than " + std::to_string(n) + " parts");
    TPoly total;
    for (const SSYT& t : tableaux(lambda, mu))
        total += TPoly::monomial(1, static_cast<std::size_t>(charge(t)));
    return total;
}

} // namespace kf
