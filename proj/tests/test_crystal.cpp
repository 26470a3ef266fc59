#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "kf/crystal.hpp"
#include "kf/kostka.hpp"

using namespace kf;

TEST_CASE("letter-level operators") {
    auto a2 = RootSystem::build(Family::A, 2);
    CHECK(kashiwara_f(a2, {1}, 1) == Word{2});
    auto w = kashiwara_f(a2, {1, 1}, 1);
    REQUIRE(w.has_value());
    CHECK(*w == Word{1, 2});
    auto w2 = kashiwara_f(a2, *w, 1);
    REQUIRE(w2.has_value());
    CHECK(*w2 == Word{2, 2});
    CHECK(!kashiwara_f(a2, *w2, 1).has_value());

    auto c2 = RootSystem::build(Family::C, 2);
    CHECK(kashiwara_f(c2, {2}, 2) == Word{-2});
    CHECK(kashiwara_e(c2, {-2}, 2) == Word{2});

    auto b2 = RootSystem::build(Family::B, 2);
    CHECK(kashiwara_f(b2, {2}, 2) == Word{0});
    CHECK(kashiwara_f(b2, {0}, 2) == Word{-2});
    CHECK(word_weight(b2, {0}) == Weight{0, 0});

    auto d4 = RootSystem::build(Family::D, 4);
    CHECK(kashiwara_f(d4, {3}, 4) == Word{-4});
    CHECK(kashiwara_f(d4, {4}, 4) == Word{-3});
}

TEST_CASE("highest weight vertices") {
    auto a2 = RootSystem::build(Family::A, 2);
    CHECK(highest_weight_vertex(a2, Weight{1, 0, 0}) == Word{1});
    auto hw = highest_weight_vertex(a2, Weight{2, 1, 0});
    CHECK(word_weight(a2, hw) == Weight{2, 1, 0});
    for (int i = 1; i <= 2; ++i) CHECK(!kashiwara_e(a2, hw, i).has_value());

    auto c3 = RootSystem::build(Family::C, 3);
    auto hwc = highest_weight_vertex(c3, Weight{2, 1, 1});
    CHECK(hwc.size() == 4);
    CHECK(word_weight(c3, hwc) == Weight{2, 1, 1});
    for (int i = 1; i <= 3; ++i) CHECK(!kashiwara_e(c3, hwc, i).has_value());

    CHECK_THROWS_AS(highest_weight_vertex(a2, Weight{1, 2, 0}), Error);
}

TEST_CASE("crystal sizes match the Weyl dimension formula") {
    auto a2 = RootSystem::build(Family::A, 2);
    CHECK(generate_crystal(a2, Weight{1, 0, 0}).vertices.size() == 3);
    CHECK(generate_crystal(a2, Weight{2, 1, 0}).vertices.size() == 8);
    CHECK(weyl_dim(a2, Weight{2, 1, 0}) == 8);

    auto c2 = RootSystem::build(Family::C, 2);
    CHECK(generate_crystal(c2, Weight{1, 1}).vertices.size() == 5);
    CHECK(weyl_dim(c2, Weight{1, 1}) == 5);

    for (auto [fam, rk, lam] : {std::tuple{Family::B, 2, Weight{1, 1}},
                                {Family::B, 3, Weight{2, 1, 0}},
                                {Family::C, 3, Weight{2, 1, 1}},
                                {Family::D, 4, Weight{1, 1, 1, 0}},
                                {Family::A, 3, Weight{3, 2, 1, 0}}}) {
        auto rs = RootSystem::build(fam, rk);
        auto g = generate_crystal(rs, lam);
        CHECK(g.vertices.size() == weyl_dim(rs, lam));
    }

    CHECK_THROWS_AS(generate_crystal(a2, Weight{2, 1, 0}, 4), Error); // budget cap
}

TEST_CASE("crystal character equals Kostka at t=1 on dominant weights") {
    for (auto [fam, rk, lam] : {std::tuple{Family::A, 2, Weight{2, 1, 0}},
                                {Family::C, 3, Weight{2, 1, 1}},
                                {Family::B, 2, Weight{2, 1}},
                                {Family::D, 4, Weight{2, 1, 1, 0}}}) {
        auto rs = RootSystem::build(fam, rk);
        auto g = generate_crystal(rs, lam);
        std::map<Weight, long long> counts;
        for (const auto& w : g.vertices) {
            Weight wt = word_weight(rs, w);
            if (rs.is_dominant(wt)) counts[wt] += 1;
        }
        for (const auto& [mu, c] : counts)
            CHECK(c == kostka_foulkes(rs, lam, mu).eval_at_one());
    }
}

TEST_CASE("Kashiwara Weyl action") {
    auto a2 = RootSystem::build(Family::A, 2);
    auto g = generate_crystal(a2, Weight{2, 1, 0});
    auto s1 = a2.simple_reflection(1);
    auto hw = g.highest;
    auto moved = weyl_action_vertex(a2, s1, hw);
    CHECK(word_weight(a2, moved) == Weight{1, 2, 0});

    std::mt19937 rng(7);
    for (auto [fam, rk, lam] : {std::tuple{Family::A, 2, Weight{2, 1, 0}},
                                {Family::C, 2, Weight{2, 1}},
                                {Family::B, 2, Weight{1, 1}}}) {
        auto rs = RootSystem::build(fam, rk);
        auto gr = generate_crystal(rs, lam);
        std::uniform_int_distribution<std::size_t> pick(0, gr.vertices.size() - 1);
        for (int t = 0; t < 100; ++t) {
            const Word& b = gr.vertices[pick(rng)];
            int i = 1 + static_cast<int>(t % rs.rank());
            auto si = rs.simple_reflection(i);
            Word sb = weyl_action_vertex(rs, si, b);
            CHECK(word_weight(rs, sb) == si.act(word_weight(rs, b)));
            CHECK(weyl_action_vertex(rs, si, sb) == b);
            if (rs.pair(word_weight(rs, b), rs.simple_roots()[i - 1]) == 0)
                CHECK(sb == b);
        }
        // full-group equivariance on a few elements
        for (std::size_t k = 0; k < rs.weyl_group().size(); k += 7) {
            const auto& g2 = rs.weyl_group()[k];
            const Word& b = gr.vertices[pick(rng)];
            CHECK(word_weight(rs, weyl_action_vertex(rs, g2, b)) == g2.act(word_weight(rs, b)));
        }
    }
}

TEST_CASE("modified operators") {
    auto a2 = RootSystem::build(Family::A, 2);
    // f_{alpha_1} is plain f~_1
    auto g = generate_crystal(a2, Weight{2, 1, 0});
    for (const auto& b : g.vertices) {
        auto lhs = modified_f(a2, a2.simple_roots()[0], b);
        auto rhs = kashiwara_f(a2, b, 1);
        CHECK(lhs == rhs);
    }
    // one-row example: f_{a1+a2}("11") = "13"
    auto r = modified_f(a2, Weight{1, 0, -1}, Word{1, 1});
    REQUIRE(r.has_value());
    CHECK(*r == Word{1, 3});
    CHECK(word_weight(a2, *r) == Weight{1, 0, 1});

    // e_alpha inverts f_alpha
    for (const auto& b : g.vertices)
        for (const auto& alpha : a2.positive_roots()) {
            auto fb = modified_f(a2, alpha, b);
            if (fb) {
                CHECK(word_weight(a2, *fb) == word_weight(a2, b) - alpha);
                CHECK(modified_e(a2, alpha, *fb) == std::optional<Word>(b));
            }
        }

    // type C long roots are not in the orbit of alpha_1
    auto c3 = RootSystem::build(Family::C, 3);
    auto gc = generate_crystal(c3, Weight{1, 0, 0});
    CHECK_THROWS_AS(modified_f(c3, Weight{2, 0, 0}, gc.highest), Error);

    // type B short roots use the f~_n-based operator
    auto b2 = RootSystem::build(Family::B, 2);
    auto gb = generate_crystal(b2, Weight{1, 0});
    auto fb = modified_f(b2, Weight{1, 0}, gb.highest); // alpha = e_1, b = "1"
    REQUIRE(fb.has_value());
    CHECK(word_weight(b2, *fb) == Weight{0, 0});
}

TEST_CASE("Lemma 5.2 non-vanishing on dominant vertices") {
    for (auto [fam, rk, lam] : {std::tuple{Family::A, 3, Weight{2, 1, 0, 0}},
                                {Family::C, 3, Weight{2, 1, 1}},
                                {Family::B, 3, Weight{1, 1, 0}},
                                {Family::D, 4, Weight{1, 1, 0, 0}}}) {
        auto rs = RootSystem::build(fam, rk);
        auto g = generate_crystal(rs, lam);
        for (const auto& b : g.vertices) {
            Weight wt = word_weight(rs, b);
            if (!rs.is_dominant(wt)) continue;
            for (const auto& alpha : rs.positive_roots()) {
                bool in_orbit = true;
                if (rs.family() == Family::C && dot(alpha, alpha) == 4) in_orbit = false;
                if (!in_orbit) continue;
                if (dot(wt, alpha) > 0) CHECK(modified_f(rs, alpha, b).has_value());
            }
        }
    }
}

TEST_CASE("all minimal conjugators act identically on crystal vertices") {
    for (auto [fam, rk, lam] : {std::tuple{Family::C, 3, Weight{2, 1, 1}},
                                {Family::D, 4, Weight{1, 1, 0, 0}}}) {
        auto rs = RootSystem::build(fam, rk);
        auto g = generate_crystal(rs, lam);
        for (const auto& alpha : rs.positive_roots()) {
            if (rs.family() == Family::C && dot(alpha, alpha) == 4) continue;
            auto minima = rs.all_minimal_conjugators(alpha, 1);
            if (minima.size() < 2) continue;
            for (std::size_t k = 0; k < g.vertices.size(); k += 3) {
                const Word& b = g.vertices[k];
                std::optional<Word> ref;
                for (std::size_t m = 0; m < minima.size(); ++m) {
                    const auto& w = minima[m];
                    Word inner = weyl_action_vertex(rs, w.inverse(), b);
                    auto mid = kashiwara_f(rs, inner, 1);
                    std::optional<Word> out;
                    if (mid) out = weyl_action_vertex(rs, w, *mid);
                    if (m == 0)
                        ref = out;
                    else
                        CHECK(out == ref);
                }
            }
        }
    }
}
