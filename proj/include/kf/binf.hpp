#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kf/tpoly.hpp"
#include "kf/weight.hpp"

namespace kf {

// Type A_{n-1} multisegment: finitely many positive roots alpha_{i,j} =
// e_i - e_j (1 <= i < j <= n) with multiplicities. This is the internal
// representation of B(infinity); marginally large tableaux are derived.
struct Multisegment {
    int n = 0;
    std::map<std::pair<int, int>, long long> mult; // only positive entries kept

    long long size() const;  // |m| = total multiplicity
    Weight degree() const;   // sum m_alpha * alpha, in epsilon coordinates
    void add(int i, int j, long long m); // validates 1 <= i < j <= n, m may be negative
    long long get(int i, int j) const;

    bool operator==(const Multisegment&) const = default;
    auto operator<=>(const Multisegment&) const = default;
};

// Presentation layer: rows 1..n-1; row i starts with a run of letter i of
// length 1 + (boxes in row i+1), followed by the strict letters j > i.
struct MarginallyLargeTableau {
    int n = 0;
    std::vector<std::vector<int>> rows;
};

Multisegment xi(const MarginallyLargeTableau& t);
MarginallyLargeTableau xi_inverse(const Multisegment& m);

// F_i adds one segment alpha_i; E_i removes one (none when absent).
Multisegment modified_F(const Multisegment& m, int i);
std::optional<Multisegment> modified_E(const Multisegment& m, int i);

// Source vertices carry no simple-root segment.
bool is_source(const Multisegment& m);

struct TruncatedAtom {
    Multisegment source;
    std::vector<Multisegment> vertices; // source + F-combinations, |.| <= bound
};

// All sources with |S| <= bound, each with its truncated atom.
std::vector<TruncatedAtom> atoms_up_to(int n, long long bound);

// Corollary 3.4: M_t(beta) = sum over sources of degree beta of t^{|S|},
// enumerated directly over multisets of nonsimple positive roots.
TPoly mt_via_sources(int n, const Weight& beta, long long height_bound = 64);

std::string pretty(const MarginallyLargeTableau& t);

} // namespace kf
