#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kf/error.hpp"
#include "kf/tpoly.hpp"
#include "kf/weight.hpp"

namespace kf {

enum class Family { A, B, C, D };

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

// Signed permutation of {1..n}: images[i] = +-(j+1) means e_{i+1} |-> sign * e_j.
// The cached word is a reduced word in simple reflections (1-based indices),
// w = s_{word[0]} * ... * s_{word.back()}, applied right-to-left to weights.
struct WeylElement {
    std::vector<int> images;
    std::vector<int> word;

    std::size_t length() const { return word.size(); }
    bool is_identity() const;

    Weight act(const Weight& w) const;
    WeylElement inverse() const;

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.images == b.images;
    }
};

// a then b composed as maps: (a*b)(x) = a(b(x)). Word is concatenated, not
// re-reduced; callers who need minimal length use the BFS-built group elements.
WeylElement compose(const WeylElement& a, const WeylElement& b);

class RootSystem {
public:
    static RootSystem build(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    // Ambient epsilon-space dimension: rank+1 in type A, rank otherwise.
    int dim() const { return dim_; }

    const std::vector<Weight>& simple_roots() const { return simple_; }
    const std::vector<Weight>& positive_roots() const { return positive_; }
    // Doubled fundamental weights 2*omega_i (type B omega_n and type D
    // omega_{n-1}, omega_n are half-integral, so only the doubles are exact).
    const std::vector<Weight>& two_fundamental_weights() const { return two_omega_; }
    const Weight& two_rho() const { return two_rho_; }
    const Weight& two_rho_check() const { return two_rho_check_; }
    // Integral representative of rho; errors with NonIntegralWeight in type B.
    Weight rho() const;

    bool is_root(const Weight& a) const;
    bool is_positive_root(const Weight& a) const;

    // <w, a^vee> = 2<w,a>/<a,a>, exact.
    long long pair(const Weight& w, const Weight& a) const;

    // <w, alpha_i^vee> for i = 1..rank.
    std::vector<long long> omega_coords(const Weight& w) const;
    Weight from_omega(const std::vector<long long>& c) const;

    // Height |a| = sum of simple-root coefficients = <a, rho_check>.
    long long root_height(const Weight& a) const;
    // <w, rho_check> for arbitrary w (exact halving; errors if odd).
    long long rho_check_pairing(const Weight& w) const;

    // Coordinates of b over the simple roots, or nullopt if b is not in the
    // integer root-lattice span (coefficients may be negative).
    std::optional<std::vector<long long>> q_coords(const Weight& b) const;

    WeylElement identity() const;
    WeylElement simple_reflection(int i) const;

    // Whole Weyl group by BFS from the identity, right-multiplying by
    // generators in ascending index order: elements sorted by length, and each
    // carries the lexicographically smallest reduced word of minimal length.
    const std::vector<WeylElement>& weyl_group() const;

    // Shortest w with w(alpha_base) = target, ties broken by lex-least word.
    WeylElement minimal_conjugator(const Weight& target, int base) const;
    std::vector<WeylElement> all_minimal_conjugators(const Weight& target, int base) const;

    bool is_dominant(const Weight& w) const;

private:
    Family family_;
    int rank_ = 0;
    int dim_ = 0;
    std::vector<Weight> simple_;
    std::vector<Weight> positive_;
    std::vector<Weight> two_omega_;
    Weight two_rho_;
    Weight two_rho_check_;
    mutable std::shared_ptr<std::vector<WeylElement>> group_;
};

} // namespace kf
