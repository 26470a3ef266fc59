#pragma once

#include <vector>

#include "kf/tpoly.hpp"
#include "kf/weight.hpp"

namespace kf {

// Semistandard Young tableau over the alphabet 1..N, English notation.
struct SSYT {
    std::vector<std::vector<int>> rows;

    std::vector<int> shape() const;
    std::vector<int> content() const; // letter multiplicities, index = letter-1
    bool operator==(const SSYT&) const = default;
};

void check_ssyt(const SSYT& t); // throws NotATableau

SSYT row_insert(const SSYT& t, int x);
SSYT insertion_tableau(const std::vector<int>& word);

// Remove the south-west cell (leftmost cell of the bottom row) and row-insert
// its letter back.
SSYT cyclage(const SSYT& t);

// Number of cyclage steps down to the one-row tableau; content must be a
// partition (weakly decreasing).
long long cocharge(const SSYT& t);
// ||mu|| - cocharge, where ||mu|| = sum (i-1) mu_i over all parts.
long long charge(const SSYT& t);

// Sum of t^charge over semistandard tableaux of shape lambda and content mu,
// both partitions of the same size with at most n parts.
TPoly kostka_via_charge(const Weight& lambda, const Weight& mu, int n);

// All semistandard tableaux of shape lambda and content mu.
std::vector<SSYT> tableaux(const Weight& lambda, const Weight& mu);

} // namespace kf
