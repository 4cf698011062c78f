#include <random>

#include "doctest.h"
#include "identities.hpp"
#include "qrep/recoupling.hpp"
#include "support.hpp"

using namespace qrep;
using nlohmann::json;

TEST_CASE("pentagon and hexagon exhaustively at small level") {
    for (int k = 1; k <= 3; ++k) {
        Category c(k);
        const int n = k + 1;
        int count = 0;
        for (int idx = 0; idx < n * n * n * n * n * n * n * n * n; ++idx) {
            int v[9], x = idx;
            for (int& y : v) {
                y = x % n;
                x /= n;
            }
            if (!c.fusion(v[0], v[1], v[5]) || !c.fusion(v[5], v[2], v[6]) || !c.fusion(v[6], v[3], v[4])) continue;
            REQUIRE(qtest::pentagon_holds(c, v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]));
            ++count;
        }
        CHECK(count > 0);
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= k; ++b)
                for (int cc = 0; cc <= k; ++cc)
                    for (int d = 0; d <= k; ++d)
                        for (int e = 0; e <= k; ++e)
                            for (int g = 0; g <= k; ++g) {
                                REQUIRE(qtest::hexagon_holds(c, a, b, cc, d, e, g, false));
                                REQUIRE(qtest::hexagon_holds(c, a, b, cc, d, e, g, true));
                            }
    }
}

TEST_CASE("F blocks are inverted by Finv") {
    for (int k : {2, 4, 5}) {
        Category c(k);
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= k; ++b)
                for (int cc = 0; cc <= k; ++cc)
                    for (int d = 0; d <= k; ++d)
                        for (int e = 0; e <= k; ++e)
                            for (int e2 = 0; e2 <= k; ++e2) {
                                if (!c.fusion(a, b, e) || !c.fusion(e, cc, d)) continue;
                                if (!c.fusion(a, b, e2) || !c.fusion(e2, cc, d)) continue;
                                Scalar s = c.zero();
                                for (int f = 0; f <= k; ++f) s += c.F(a, b, cc, d, e, f) * c.Finv(a, b, cc, d, f, e2);
                                REQUIRE(s == Scalar(c.field(), static_cast<long>(e == e2)));
                            }
    }
}

TEST_CASE("6j with a unit in the recoupled slot") {
    Category c(5);
    for (int b = 0; b <= 5; ++b)
        for (int cc = 0; cc <= 5; ++cc)
            for (int d : c.fusion_product(b, cc)) {
                CHECK(sixj(c, 0, b, cc, d, b, d).is_one());
                CHECK(sixj(c, b, cc, 0, d, d, cc).is_one());
            }
}

TEST_CASE("Ising F block matches the pentagon solution up to gauge") {
    Category c(2);
    // Gauge-invariant products F[e,f] F^{-1}[f,e] equal |1/sqrt2|^2.
    for (int e : {0, 2})
        for (int f : {0, 2}) CHECK(c.F(1, 1, 1, 1, e, f) * c.Finv(1, 1, 1, 1, f, e) == Scalar(c.field(), mpq_class(1, 2)));
    Scalar det = c.F(1, 1, 1, 1, 0, 0) * c.F(1, 1, 1, 1, 2, 2) - c.F(1, 1, 1, 1, 0, 2) * c.F(1, 1, 1, 1, 2, 0);
    Scalar det_inv = c.Finv(1, 1, 1, 1, 0, 0) * c.Finv(1, 1, 1, 1, 2, 2) - c.Finv(1, 1, 1, 1, 0, 2) * c.Finv(1, 1, 1, 1, 2, 0);
    CHECK((det * det_inv).is_one());
}

TEST_CASE("theta values") {
    Category c(2);
    for (int j = 0; j <= 2; ++j) CHECK(theta(c, 0, j, j) == c.qdim(j));
    CHECK(theta(c, 1, 1, 1).is_zero());
    CHECK(!theta(c, 1, 1, 2).is_zero());
    CHECK(qtest::close(theta(c, 1, 1, 2).to_complex(), 1.0));
}

TEST_CASE("zig-zag factor is the Frobenius-Schur indicator over d") {
    for (int k = 1; k <= 6; ++k) {
        Category c(k);
        for (int a = 0; a <= k; ++a) {
            Scalar fs = c.twist(a) * c.R(a, a, 0);
            CHECK(zigzag(c, a) * c.qdim(a) == fs);
            CHECK(fs == Scalar(c.field(), a % 2 ? -1L : 1L));
        }
    }
}

TEST_CASE("closed nets") {
    Category c(3);
    for (int j = 0; j <= 3; ++j) {
        json loop = json::array({{{"op", "cup"}, {"at", 0}, {"label", j}}, {{"op", "cap"}, {"at", 0}}});
        CHECK(evaluate_closed_net(c, loop) == c.qdim(j));
    }
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int x = 0; x <= 3; ++x) {
                json net = json::array({{{"op", "cup"}, {"at", 0}, {"label", x}},
                                        {{"op", "split"}, {"at", 0}, {"into", {a, b}}},
                                        {{"op", "merge"}, {"at", 0}, {"label", x}},
                                        {{"op", "cap"}, {"at", 0}}});
                CHECK(evaluate_closed_net(c, net) == theta(c, a, b, x));
            }
    // Tetrahedron: one F-move reduces it to d_d F^{abc}_d[e,f].
    Category c2(2);
    const int a = 1, b = 1, cc = 1, d = 1, e = 2, f = 0;
    json tet = json::array({{{"op", "cup"}, {"at", 0}, {"label", d}},
                            {{"op", "split"}, {"at", 0}, {"into", {e, cc}}},
                            {{"op", "split"}, {"at", 0}, {"into", {a, b}}},
                            {{"op", "merge"}, {"at", 1}, {"label", f}},
                            {{"op", "merge"}, {"at", 0}, {"label", d}},
                            {{"op", "cap"}, {"at", 0}}});
    Scalar v = evaluate_closed_net(c2, tet);
    CHECK(v == c2.qdim(d) * sixj(c2, a, b, cc, d, e, f));
    CHECK(!v.is_zero());
    CHECK_THROWS_AS(evaluate_closed_net(c2, json::array({{{"op", "cup"}, {"at", 0}, {"label", 1}}})), NetError);
    CHECK_THROWS_AS(evaluate_closed_net(c2, json::array({{{"op", "spin"}, {"at", 0}}})), NetError);
}

TEST_CASE("curl removal contributes a twist") {
    for (int k = 1; k <= 5; ++k) {
        Category c(k);
        for (int a = 0; a <= k; ++a)
            for (bool inv : {false, true}) {
                FusionState s = FusionState::basis(c, {a}, {a}).insert_unit(1).split(1, a, a, c.one());
                s = s.braid(0, inv);
                FusionState t(c);
                for (const auto& [tree, amp] : s.terms())
                    t += FusionState::basis(c, tree.leaves, tree.inner, amp).fuse(1, 0, c.qdim(tree.leaves[1]));
                Scalar val = t.amplitude({a, 0}, {a, a});
                CHECK(val == c.twist(a).pow(inv ? -1 : 1));
            }
    }
}

TEST_CASE("net value is invariant under random local moves") {
    std::mt19937 rng(2024);
    Category c(4);
    // Base net: theta net closed on a 2-colored loop with extra split/merge.
    json base = json::array({{{"op", "cup"}, {"at", 0}, {"label", 2}},
                             {{"op", "split"}, {"at", 0}, {"into", {1, 1}}},
                             {{"op", "split"}, {"at", 2}, {"into", {1, 3}}},
                             {{"op", "braid"}, {"at", 1}, {"inverse", false}},
                             {{"op", "merge"}, {"at", 0}, {"label", 2}},
                             {{"op", "merge"}, {"at", 1}, {"label", 2}},
                             {{"op", "cap"}, {"at", 0}}});
    const Scalar ref = evaluate_closed_net(c, base);
    CHECK(!ref.is_zero());
    for (int trial = 0; trial < 100; ++trial) {
        json net = base;
        // Insert an identity-equivalent local move after a random step, at a random leaf.
        std::uniform_int_distribution<int> pos(1, static_cast<int>(net.size()) - 1);
        int at = pos(rng);
        FusionState s = FusionState::vacuum(c);
        for (int i = 0; i < at; ++i) s = apply_step(s, net[i]);
        int leaves = static_cast<int>(s.terms().front().first.leaves.size());
        std::uniform_int_distribution<int> leaf(0, leaves - 1), kind(0, 3);
        int j = leaf(rng);
        json moves;
        switch (kind(rng)) {
            case 0:
                if (leaves < 2) continue;
                j = std::min(j, leaves - 2);
                moves = json::array({{{"op", "braid"}, {"at", j}, {"inverse", false}},
                                     {{"op", "braid"}, {"at", j}, {"inverse", true}}});
                break;
            case 1:
                moves = json::array({{{"op", "twist"}, {"at", j}, {"power", 1}}, {{"op", "twist"}, {"at", j}, {"power", -1}}});
                break;
            case 2: {
                int lab = s.terms().front().first.leaves[j];
                moves = json::array({{{"op", "cup"}, {"at", j + 1}, {"label", lab}}, {{"op", "cap"}, {"at", j}}});
                json trial_net = net;
                trial_net.insert(trial_net.begin() + at, moves.begin(), moves.end());
                // Straightening an unoriented strand costs its Frobenius-Schur sign.
                Scalar fs = c.twist(lab) * c.R(lab, lab, 0);
                CHECK(evaluate_closed_net(c, trial_net) == ref * fs);
                continue;
            }
            default:
                moves = json::array({{{"op", "twist"}, {"at", j}, {"power", -1}}, {{"op", "twist"}, {"at", j}, {"power", 1}}});
        }
        net.insert(net.begin() + at, moves.begin(), moves.end());
        CHECK(evaluate_closed_net(c, net) == ref);
    }
}
