#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qrep/tqft_spaces.hpp"
#include "support.hpp"

using namespace qrep;

TEST_CASE("basis sizes equal the Verlinde dimensions") {
    for (int k = 0; k <= 6; ++k) {
        Category c(k);
        for (int g = 1; g <= 3; ++g) CHECK(static_cast<long>(enumerate_basis(c, g).size()) == oracle::verlinde(k, g));
    }
    CHECK(enumerate_basis(Category(1), 2).size() == 4);
    CHECK(enumerate_basis(Category(0), 3).size() == 1);
    CHECK(enumerate_basis(Category(4), 2).size() == 35);
}

TEST_CASE("basis is sorted, admissible and indexable") {
    Category c(5);
    for (int g = 2; g <= 3; ++g) {
        auto b = enumerate_basis(c, g);
        CHECK(std::is_sorted(b.begin(), b.end()));
        for (int i = 0; i < static_cast<int>(b.size()); ++i) {
            REQUIRE(basis_index(b, b[i]) == i);
            auto h = handles_of(g, b[i]);
            CHECK(h.front().x == h.front().a);
            CHECK(h.back().x == h.back().a);
            CHECK(h.back().c == 0);
        }
        CHECK_THROWS_AS(basis_index(b, TreeLabels(edge_count(g), 1)), BasisIndexError);
    }
}

TEST_CASE("handle decomposition of the tuple") {
    auto h = handles_of(3, {1, 2, 3, 4, 5, 6});
    REQUIRE(h.size() == 3);
    CHECK(h[0].x == 1);
    CHECK(h[0].c == 2);
    CHECK(h[1].x == 4);
    CHECK(h[1].a == 3);
    CHECK(h[1].c == 5);
    CHECK(h[2].x == 6);
    CHECK(h[2].c == 0);
    CHECK(handles_of(1, {2})[0].c == 0);
    CHECK_THROWS(handles_of(2, {1, 2}));
}

TEST_CASE("special vectors") {
    Category c(4);
    for (int g = 1; g <= 3; ++g)
        for (int i = 0; i <= 4; ++i) {
            auto v = special_vector(c, g, i);
            const auto b = enumerate_basis(c, g);
            int nonzero = 0;
            for (std::size_t p = 0; p < v.size(); ++p)
                if (!v[p].is_zero()) {
                    ++nonzero;
                    CHECK(b[p] == special_tree(g, i));
                    CHECK(v[p].is_one());
                }
            CHECK(nonzero == 1);
        }
    auto w = special_vector(c, 2, std::vector<long>{1, 0, 0, 0, 1});
    int count = 0;
    for (const auto& x : w) count += !x.is_zero();
    CHECK(count == 2);
}

TEST_CASE("genus-one S and T satisfy the modular relations") {
    for (int k = 1; k <= 10; ++k) {
        Category c(k);
        Matrix s = rep_genus1(c, Generator::S), t = rep_genus1(c, Generator::T);
        Matrix s2 = s * s;
        CHECK(s2.is_identity());
        Matrix st = s * t;
        CHECK(is_proportional(st * st * st, s2).has_value());
        CHECK(s == s.transpose());
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= k; ++b) CHECK(qtest::close(s(a, b).to_complex(), oracle::smatrix(k, a, b)));
    }
}

TEST_CASE("pants-curve twists are diagonal and commute") {
    Category c(3);
    for (int g = 1; g <= 3; ++g) {
        const auto b = enumerate_basis(c, g);
        for (int e = 0; e < edge_count(g); ++e) {
            Matrix d = dehn_twist_cut(c, g, e);
            for (int p = 0; p < d.rows(); ++p) CHECK(qtest::close(d(p, p).to_complex(), oracle::twist(3, b[p][e])));
            for (int f = 0; f < edge_count(g); ++f) CHECK(commutator(d, dehn_twist_cut(c, g, f)).is_zero());
        }
        CHECK_THROWS_AS(dehn_twist_cut(c, g, edge_count(g)), BasisIndexError);
    }
}
