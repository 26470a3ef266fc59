#include "kf/binf.hpp"

#include <algorithm>

#include "kf/error.hpp"

namespace kf {

long long Multisegment::size() const {
    long long s = 0;
    for (const auto& [k, m] : mult) s += m;
    return s;
}

Weight Multisegment::degree() const {
    Weight d(static_cast<std::size_t>(n));
    for (const auto& [k, m] : mult) {
        d[static_cast<std::size_t>(k.first - 1)] += static_cast<int>(m);
        d[static_cast<std::size_t>(k.second - 1)] -= static_cast<int>(m);
    }
    return d;
}

void Multisegment::add(int i, int j, long long m) {
    if (i < 1 || j <= i || j > n)
        fail("NotARoot", "alpha_{" + std::to_string(i) + "," + std::to_string(j) +
                             "} is not a positive root for n=" + std::to_string(n));
    auto key = std::make_pair(i, j);
    long long cur = get(i, j) + m;
    if (cur < 0) fail("NegativeMultiplicity", "multiplicity below zero");
    if (cur == 0) mult.erase(key);
    else mult[key] = cur;
}

long long Multisegment::get(int i, int j) const {
    auto it = mult.find({i, j});
    return it == mult.end() ? 0 : it->second;
}

Multisegment xi(const MarginallyLargeTableau& t) {
    Multisegment m;
    m.n = t.n;
    if (static_cast<int>(t.rows.size()) != t.n - 1)
        fail("NotMarginallyLarge", "expected " + std::to_string(t.n - 1) + " rows");
    // validate the leading runs bottom-up while reading off strict letters
    for (int i = t.n - 1; i >= 1; --i) {
        const auto& row = t.rows[static_cast<std::size_t>(i - 1)];
        long long below =
            i == t.n - 1 ? 0 : static_cast<long long>(t.rows[static_cast<std::size_t>(i)].size());
        long long run = 0;
        for (int x : row) {
            if (x == i) ++run;
            else if (x > i && x <= t.n) {
                if (run == 0) fail("NotMarginallyLarge", "row must start with its own letter");
                m.add(i, x, 1);
            } else
                fail("NotMarginallyLarge", "letter out of range in row " + std::to_string(i));
        }
        if (run != below + 1)
            fail("NotMarginallyLarge", "row " + std::to_string(i) + " has " + std::to_string(run) +
                                           " leading letters, expected " +
                                           std::to_string(below + 1));
        // weak increase across the row
        if (!std::is_sorted(row.begin(), row.end()))
            fail("NotMarginallyLarge", "row not weakly increasing");
    }
    return m;
}

MarginallyLargeTableau xi_inverse(const Multisegment& m) {
    MarginallyLargeTableau t;
    t.n = m.n;
    t.rows.assign(static_cast<std::size_t>(m.n - 1), {});
    long long below = 0;
    for (int i = m.n - 1; i >= 1; --i) {
        auto& row = t.rows[static_cast<std::size_t>(i - 1)];
        for (long long k = 0; k <= below; ++k) row.push_back(i);
        for (int j = i + 1; j <= m.n; ++j)
            for (long long k = 0; k < m.get(i, j); ++k) row.push_back(j);
        below = static_cast<long long>(row.size());
    }
    return t;
}

Multisegment modified_F(const Multisegment& m, int i) {
    Multisegment r = m;
    r.add(i, i + 1, 1);
    return r;
}

std::optional<Multisegment> modified_E(const Multisegment& m, int i) {
    if (m.get(i, i + 1) == 0) return std::nullopt;
    Multisegment r = m;
    r.add(i, i + 1, -1);
    return r;
}

bool is_source(const Multisegment& m) {
    for (int i = 1; i < m.n; ++i)
        if (m.get(i, i + 1) > 0) return false;
    return true;
}

namespace {

void enumerate_sources(int n, long long bound, const Weight* degree_target,
                       std::vector<Multisegment>& out) {
    std::vector<std::pair<int, int>> nonsimple;
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j <= n; ++j) nonsimple.emplace_back(i, j);
    Multisegment cur;
    cur.n = n;
    auto rec = [&](auto&& self, std::size_t k, long long left) -> void {
        if (k == nonsimple.size()) {
            if (!degree_target || cur.degree() == *degree_target) out.push_back(cur);
            return;
        }
        auto [i, j] = nonsimple[k];
        for (long long m = 0; m <= left; ++m) {
            if (m) cur.add(i, j, 1);
            self(self, k + 1, left - m);
        }
        cur.add(i, j, -left);
    };
    rec(rec, 0, bound);
}

} // namespace

std::vector<TruncatedAtom> atoms_up_to(int n, long long bound) {
    if (bound < 0) fail("BoundExceeded", "negative bound");
    std::vector<Multisegment> sources;
    enumerate_sources(n, bound, nullptr, sources);
    std::sort(sources.begin(), sources.end());
    std::vector<TruncatedAtom> out;
    for (const auto& s : sources) {
        TruncatedAtom atom;
        atom.source = s;
        // free F-combinations up to total size <= bound
        std::vector<Multisegment> frontier{s};
        atom.vertices.push_back(s);
        for (std::size_t head = 0; head < atom.vertices.size(); ++head) {
            Multisegment v = atom.vertices[head];
            if (v.size() >= bound) continue;
            for (int i = 1; i < n; ++i) {
                Multisegment f = modified_F(v, i);
                if (std::find(atom.vertices.begin(), atom.vertices.end(), f) ==
                    atom.vertices.end())
                    atom.vertices.push_back(std::move(f));
            }
        }
        std::sort(atom.vertices.begin(), atom.vertices.end());
        out.push_back(std::move(atom));
    }
    return out;
}

TPoly mt_via_sources(int n, const Weight& beta, long long height_bound) {
    if (static_cast<int>(beta.size()) != n)
        fail("RankMismatch", "beta must have length n");
    long long height = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        long long partial = 0;
        for (std::size_t k = 0; k <= i; ++k) partial += beta[k];
        height += partial; // = <beta, rho_check> for the A_{n-1} lattice
    }
    if (height < 0 || height > height_bound)
        fail("BoundExceeded", "height " + std::to_string(height) + " outside [0," +
                                  std::to_string(height_bound) + "]");
    std::vector<Multisegment> sources;
    enumerate_sources(n, height, &beta, sources);
    TPoly total;
    for (const auto& s : sources)
        total += TPoly::monomial(1, static_cast<std::size_t>(s.size()));
    return total;
}

std::string pretty(const MarginallyLargeTableau& t) {
    std::string out;
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

} // namespace kf
