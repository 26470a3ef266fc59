#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kf/root_system.hpp"
#include "kf/weight.hpp"

namespace kf {

// A crystal vertex is a word over the vector-representation alphabet, encoded
// as signed letters: k for k, -k for k-bar, 0 for the type-B zero letter.
using Word = std::vector<int>;

Weight word_weight(const RootSystem& rs, const Word& w);

// Tensor-product signature rule in the Kashiwara convention:
// f(b(x)c) = f(b)(x)c if phi(b) > eps(c), else b(x)f(c);
// e(b(x)c) = e(b)(x)c if phi(b) >= eps(c), else b(x)e(c).
std::optional<Word> kashiwara_f(const RootSystem& rs, const Word& w, int i);
std::optional<Word> kashiwara_e(const RootSystem& rs, const Word& w, int i);

// phi_i / eps_i of a whole word (string lengths).
long long word_phi(const RootSystem& rs, const Word& w, int i);
long long word_eps(const RootSystem& rs, const Word& w, int i);

// Canonical highest weight word for a partition lambda: lambda_1 ones, then
// lambda_2 twos, ... Verified to be annihilated by every raising operator.
Word highest_weight_vertex(const RootSystem& rs, const Weight& lambda);

// Exact Weyl dimension of the irreducible with highest weight lambda.
unsigned long long weyl_dim(const RootSystem& rs, const Weight& lambda);

struct CrystalGraph {
    Weight lambda;
    Word highest;
    std::vector<Word> vertices; // BFS order from the highest weight vertex
};

CrystalGraph generate_crystal(const RootSystem& rs, const Weight& lambda,
                              std::size_t cap = 2000000);

// Kashiwara Weyl-group action: string reflections along a reduced word.
Word weyl_action_vertex(const RootSystem& rs, const WeylElement& g, const Word& b);

// Modified operator f_alpha = w f~_base w^{-1} (e_alpha for raise=false...);
// base is alpha_1, or alpha_n for type B short roots.
std::optional<Word> modified_f(const RootSystem& rs, const Weight& alpha, const Word& b);
std::optional<Word> modified_e(const RootSystem& rs, const Weight& alpha, const Word& b);

} // namespace kf
