#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "kf/weight_poset.hpp"

using namespace kf;

TEST_CASE("dominance comparisons") {
    auto a3 = RootSystem::build(Family::A, 3);
    CHECK(dominance_leq(a3, Weight{2, 2, 1, 1}, Weight{2, 2, 1, 1}));
    CHECK(dominance_leq(a3, Weight{2, 2, 1, 1}, Weight{3, 2, 1, 0}));
    CHECK(!dominance_leq(a3, Weight{3, 2, 1, 0}, Weight{2, 2, 1, 1}));
    CHECK_THROWS_AS(dominance_leq(a3, Weight{1, 0, 0, 0}, Weight{3, 2, 1, 0}), Error);
    // differing sizes comparable when they differ by full columns
    CHECK(dominance_leq(a3, Weight{1, 1, 0, 0}, Weight{3, 3, 0, 0})); // (2,2,1,1) vs (3,3,0,0)

    auto c3 = RootSystem::build(Family::C, 3);
    CHECK(!dominance_leq(c3, Weight{2, 2, 0}, Weight{2, 1, 1}));
    CHECK(dominance_leq(c3, Weight{0, 0, 0}, Weight{1, 1, 0}));
    CHECK(!dominance_leq(c3, Weight{1, 0, 0}, Weight{1, 1, 0})); // sizes differ in parity of Q
}

TEST_CASE("intervals") {
    auto a3 = RootSystem::build(Family::A, 3);
    auto iv = interval(a3, Weight{3, 2, 1, 0});
    std::set<Weight> got(iv.elements.begin(), iv.elements.end());
    std::set<Weight> want{Weight{3, 2, 1, 0}, Weight{2, 2, 2, 0}, Weight{3, 1, 1, 1},
                          Weight{2, 2, 1, 1}};
    CHECK(got == want);
    CHECK(iv.bottom == Weight{2, 2, 1, 1});
    CHECK(iv.elements.front() == Weight{3, 2, 1, 0}); // linear extension starts at lambda

    auto c3 = RootSystem::build(Family::C, 3);
    auto ivc = interval(c3, Weight{2, 1, 1});
    std::set<Weight> gotc(ivc.elements.begin(), ivc.elements.end());
    std::set<Weight> wantc{Weight{2, 1, 1}, Weight{2, 0, 0}, Weight{1, 1, 0}, Weight{0, 0, 0}};
    CHECK(gotc == wantc);
    CHECK(ivc.bottom == Weight{0, 0, 0});

    auto z = interval(c3, Weight{0, 0, 0});
    CHECK(z.elements.size() == 1);
    CHECK(z.bottom == Weight{0, 0, 0});

    CHECK_THROWS_AS(interval(a3, Weight{1, 2, 0, 0}), Error);
}

TEST_CASE("cocovers") {
    auto a3 = RootSystem::build(Family::A, 3);
    auto cc = cocovers(a3, Weight{3, 2, 1, 0});
    REQUIRE(cc.size() == 2);
    std::set<Weight> nus, alphas;
    for (const auto& c : cc) {
        nus.insert(c.nu);
        alphas.insert(c.alpha);
        CHECK(c.alpha == Weight{3, 2, 1, 0} - c.nu);
        CHECK(a3.is_positive_root(c.alpha));
    }
    CHECK(nus == std::set<Weight>{Weight{2, 2, 2, 0}, Weight{3, 1, 1, 1}});

    auto c3 = RootSystem::build(Family::C, 3);
    auto ccc = cocovers(c3, Weight{1, 1, 0});
    REQUIRE(ccc.size() == 1);
    CHECK(ccc[0].nu == Weight{0, 0, 0});
    CHECK(ccc[0].alpha == Weight{1, 1, 0});

    auto b2 = RootSystem::build(Family::B, 2);
    auto ccb = cocovers(b2, Weight{1, 0});
    REQUIRE(ccb.size() == 1);
    CHECK(ccb[0].nu == Weight{0, 0});
    CHECK(ccb[0].alpha == Weight{1, 0});
}

TEST_CASE("stable range") {
    CHECK(stable_range(RootSystem::build(Family::C, 3), Weight{2, 1, 1}));
    CHECK(!stable_range(RootSystem::build(Family::D, 4), Weight{4, 2, 0, 0}));
    CHECK(stable_range(RootSystem::build(Family::B, 3), Weight{1, 1, 0}));
    CHECK(!stable_range(RootSystem::build(Family::B, 2), Weight{2, 2}));
    CHECK(stable_range(RootSystem::build(Family::A, 2), Weight{6, 0, 0}));
}

TEST_CASE("layer sums") {
    auto a2 = RootSystem::build(Family::A, 2);
    auto ls = layer_sum(a2, Weight{2, 1, 0});
    REQUIRE(ls.entries.size() == 2);
    CHECK(ls.entries[0] == std::pair<Weight, long long>(Weight{2, 1, 0}, 0));
    CHECK(ls.entries[1] == std::pair<Weight, long long>(Weight{1, 1, 1}, 2));

    auto c3 = RootSystem::build(Family::C, 3);
    auto lsc = layer_sum(c3, Weight{1, 1, 0});
    REQUIRE(lsc.entries.size() == 2);
    CHECK(lsc.entries[1] == std::pair<Weight, long long>(Weight{0, 0, 0}, 4));
    // exponent = root height of e1+e2 in C3 (a1+2a2+a3)
    CHECK(c3.root_height(Weight{1, 1, 0}) == 4);

    auto z = layer_sum(c3, Weight{0, 0, 0});
    REQUIRE(z.entries.size() == 1);
    CHECK(z.entries[0].second == 0);
}

TEST_CASE("cocover sets equal maximal strictly-below elements, labels in stable orbits") {
    for (auto [fam, rk, lam] : {std::tuple{Family::A, 3, Weight{3, 2, 1, 0}},
                                {Family::C, 3, Weight{2, 1, 1}},
                                {Family::B, 3, Weight{2, 1, 0}},
                                {Family::D, 4, Weight{2, 1, 1, 0}}}) {
        auto rs = RootSystem::build(fam, rk);
        auto iv = interval(rs, lam);
        for (const Weight& mu : iv.elements) {
            std::vector<Weight> below;
            for (const Weight& nu : iv.elements)
                if (nu != mu && dominance_leq(rs, nu, mu)) below.push_back(nu);
            std::set<Weight> maximal;
            for (const Weight& nu : below) {
                bool top = true;
                for (const Weight& pi : below)
                    if (pi != nu && dominance_leq(rs, nu, pi)) top = false;
                if (top) maximal.insert(nu);
            }
            std::set<Weight> from_cc;
            for (const auto& c : iv.cocover_lists.at(mu)) from_cc.insert(c.nu);
            CHECK(from_cc == maximal);
            if (fam != Family::A && stable_range(rs, lam)) {
                for (const auto& c : iv.cocover_lists.at(mu)) {
                    // no long root 2e_i may label a stable-range cocover in type C
                    if (fam == Family::C) CHECK(dot(c.alpha, c.alpha) == 2);
                }
            }
        }
    }
}

TEST_CASE("meets exist within intervals") {
    for (auto [fam, rk, lam] : {std::tuple{Family::A, 3, Weight{3, 2, 1, 0}},
                                {Family::C, 3, Weight{2, 1, 1}},
                                {Family::B, 2, Weight{2, 1}},
                                {Family::D, 4, Weight{2, 2, 1, 1}}}) {
        auto rs = RootSystem::build(fam, rk);
        auto iv = interval(rs, lam);
        for (const Weight& x : iv.elements)
            for (const Weight& y : iv.elements) {
                std::vector<Weight> lower;
                for (const Weight& z : iv.elements)
                    if (dominance_leq(rs, z, x) && dominance_leq(rs, z, y)) lower.push_back(z);
                // unique greatest lower bound
                int greatest = 0;
                for (const Weight& z : lower) {
                    bool ge_all = true;
                    for (const Weight& z2 : lower)
                        if (!dominance_leq(rs, z2, z)) ge_all = false;
                    if (ge_all) ++greatest;
                }
                CHECK(greatest == 1);
            }
    }
}
