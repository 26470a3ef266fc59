#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kf/root_system.hpp"

using namespace kf;

TEST_CASE("positive root counts and rho") {
    auto a2 = RootSystem::build(Family::A, 2);
    CHECK(a2.positive_roots().size() == 3);

    auto c3 = RootSystem::build(Family::C, 3);
    CHECK(c3.positive_roots().size() == 9);

    auto d4 = RootSystem::build(Family::D, 4);
    CHECK(d4.positive_roots().size() == 12);
    CHECK(d4.rho() == Weight{3, 2, 1, 0});

    auto b3 = RootSystem::build(Family::B, 3);
    CHECK(b3.positive_roots().size() == 9);
    CHECK_THROWS_AS(b3.rho(), Error); // half-integral in type B

    CHECK_THROWS_AS(RootSystem::build(Family::D, 2), Error);
    CHECK_THROWS_AS(RootSystem::build(Family::B, 1), Error);
}

TEST_CASE("simple roots pair to 2 with their own coroots; omega/alpha duality") {
    for (auto [fam, rk] : {std::pair{Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}}) {
        auto rs = RootSystem::build(fam, rk);
        for (const auto& a : rs.simple_roots()) CHECK(rs.pair(a, a) == 2);
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j)
                CHECK(rs.pair(rs.two_fundamental_weights()[i], rs.simple_roots()[j]) ==
                      (i == j ? 2 : 0));
        // <alpha_i, rho_check> = 1 for every simple root
        for (const auto& a : rs.simple_roots()) CHECK(rs.rho_check_pairing(a) == 1);
        // rho = half-sum of positive roots, checked in doubled coordinates
        Weight s(rs.two_rho().size());
        for (const auto& a : rs.positive_roots()) s += a;
        CHECK(s == rs.two_rho());
    }
}

TEST_CASE("pairing examples") {
    auto a3 = RootSystem::build(Family::A, 3);
    Weight omega2{1, 1, 0, 0};
    CHECK(a3.pair(omega2, a3.simple_roots()[1]) == 1);
    CHECK(a3.pair(omega2, a3.simple_roots()[0]) == 0);

    auto c2 = RootSystem::build(Family::C, 2);
    CHECK(c2.pair(Weight{2, 0}, Weight{0, 2}) == 0);
    CHECK(c2.pair(Weight{2, 0}, Weight{1, 1}) == 2);
    CHECK_THROWS_AS(c2.pair(Weight{2, 0}, Weight{3, 0}), Error);
}

TEST_CASE("pair rejects non-roots") {
    auto a2 = RootSystem::build(Family::A, 2);
    CHECK_THROWS_AS(a2.pair(Weight{1, 0, 0}, Weight{1, 1, 0}), Error);
}

TEST_CASE("omega coordinate conversions") {
    auto d4 = RootSystem::build(Family::D, 4);
    CHECK(d4.from_omega({2, 2, 0, 0}) == Weight{4, 2, 0, 0});
    CHECK(d4.from_omega({0, 1, 0, 0}) == Weight{1, 1, 0, 0});
    CHECK(d4.omega_coords(Weight{4, 2, 0, 0}) == std::vector<long long>{2, 2, 0, 0});
    // 2*omega_3 in D4 is integral even though omega_3 itself is not
    CHECK(d4.from_omega({0, 0, 2, 0}) == Weight{1, 1, 1, -1});
    CHECK_THROWS_AS(d4.from_omega({0, 0, 1, 0}), Error);

    auto a2 = RootSystem::build(Family::A, 2);
    CHECK(a2.omega_coords(Weight{2, 1, 0}) == std::vector<long long>{1, 1});
}

TEST_CASE("root heights") {
    auto a2 = RootSystem::build(Family::A, 2);
    CHECK(a2.root_height(Weight{1, 0, -1}) == 2);

    auto c3 = RootSystem::build(Family::C, 3);
    CHECK(c3.root_height(Weight{2, 0, 0}) == 5); // 2e1 = 2a1+2a2+a3
    CHECK(c3.root_height(Weight{1, 1, 0}) == 4); // e1+e2 = a1+2a2+a3

    auto a3 = RootSystem::build(Family::A, 3);
    CHECK(a3.root_height(Weight{1, 0, 0, -1}) == 3);
    CHECK_THROWS_AS(a3.root_height(Weight{-1, 0, 0, 1}), Error);
}

TEST_CASE("weyl action basics") {
    auto a2 = RootSystem::build(Family::A, 2);
    Weight w{2, 1, 0};
    CHECK(a2.identity().act(w) == w);
    CHECK(a2.simple_reflection(1).act(Weight{1, -1, 0}) == Weight{-1, 1, 0});

    auto c2 = RootSystem::build(Family::C, 2);
    CHECK(c2.simple_reflection(2).act(Weight{1, -1}) == Weight{1, 1});

    auto d4 = RootSystem::build(Family::D, 4);
    CHECK(d4.simple_reflection(4).act(Weight{0, 0, 1, -1}) == Weight{0, 0, 1, -1}); // perp? no:
    // s4 in D4 sends e3 -> -e4, e4 -> -e3, so (0,0,1,-1) -> (0,0,1,-1). Fixed as expected.
    CHECK(d4.simple_reflection(4).act(Weight{0, 0, 1, 1}) == Weight{0, 0, -1, -1});
}

TEST_CASE("weyl group orders") {
    CHECK(RootSystem::build(Family::A, 3).weyl_group().size() == 24);
    CHECK(RootSystem::build(Family::B, 3).weyl_group().size() == 48);
    CHECK(RootSystem::build(Family::C, 3).weyl_group().size() == 48);
    CHECK(RootSystem::build(Family::D, 4).weyl_group().size() == 192);
}

TEST_CASE("length equals inversion count") {
    std::mt19937 rng(20240817);
    for (auto [fam, rk] : {std::pair{Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}}) {
        auto rs = RootSystem::build(fam, rk);
        const auto& grp = rs.weyl_group();
        std::uniform_int_distribution<std::size_t> pick(0, grp.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const auto& g = grp[pick(rng)];
            std::size_t inv = 0;
            for (const auto& a : rs.positive_roots())
                if (rs.is_positive_root(-g.act(a))) ++inv;
            CHECK(g.length() == inv);
        }
        // sanity: words are well-formed products
        const auto& g = grp[pick(rng)];
        WeylElement prod = rs.identity();
        for (int i : g.word) prod = compose(prod, rs.simple_reflection(i));
        CHECK(prod == g);
        // inverse round-trip on weights
        Weight w{3, 1, 0, -2};
        Weight ww(rs.two_rho().size());
        for (std::size_t i = 0; i < ww.size(); ++i) ww[i] = w[i];
        CHECK(g.act(g.inverse().act(ww)) == ww);
    }
}

TEST_CASE("minimal conjugators") {
    auto a3 = RootSystem::build(Family::A, 3);
    CHECK(a3.minimal_conjugator(a3.simple_roots()[0], 1).is_identity());
    auto w = a3.minimal_conjugator(Weight{1, 0, -1, 0}, 1);
    CHECK(w.length() == 1);
    CHECK(w.word == std::vector<int>{2});

    auto c3 = RootSystem::build(Family::C, 3);
    auto v = c3.minimal_conjugator(Weight{1, 1, 0}, 1);
    CHECK(v.length() == 3);
    CHECK(v.word == std::vector<int>{2, 3, 2});
    CHECK(v.act(c3.simple_roots()[0]) == Weight{1, 1, 0});

    CHECK_THROWS_AS(c3.minimal_conjugator(Weight{2, 0, 0}, 1), Error); // long root not in orbit
}

TEST_CASE("q_coords membership in the root lattice cone") {
    auto a3 = RootSystem::build(Family::A, 3);
    auto c = a3.q_coords(Weight{1, 0, 0, -1});
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<long long>{1, 1, 1});
    CHECK(!a3.q_coords(Weight{1, 0, 0, 0}).has_value());

    auto c3 = RootSystem::build(Family::C, 3);
    auto cc = c3.q_coords(Weight{2, 0, 0});
    REQUIRE(cc.has_value());
    CHECK(*cc == std::vector<long long>{2, 2, 1});

    auto d4 = RootSystem::build(Family::D, 4);
    auto cd = d4.q_coords(Weight{1, 1, 0, 0});
    REQUIRE(cd.has_value());
    CHECK(*cd == std::vector<long long>{1, 2, 1, 1});
    // verify by resummation
    Weight s(4);
    for (int i = 0; i < 4; ++i) s += static_cast<int>((*cd)[i]) * d4.simple_roots()[i];
    CHECK(s == Weight{1, 1, 0, 0});
}

TEST_CASE("poly reversal") {
    CHECK(poly_reverse(TPoly{1}, 0) == TPoly{1});
    CHECK(poly_reverse(TPoly{0, 1, 1}, 3) == TPoly{0, 1, 1});
    CHECK(poly_reverse(TPoly{1, 0, 1}, 2) == TPoly{1, 0, 1});
    CHECK_THROWS_AS(poly_reverse(TPoly{0, 0, 1}, 1), Error);
    TPoly p{3, -1, 0, 7};
    CHECK(poly_reverse(poly_reverse(p, 5), 5) == p);
}
