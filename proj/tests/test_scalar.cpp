#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "qrep/matrix.hpp"
#include "support.hpp"

using namespace qrep;

TEST_CASE("cyclotomic polynomial degrees match Euler phi") {
    const int phi[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
    for (int n = 1; n <= 12; ++n) CHECK(CyclotomicField::get(n)->degree() == phi[n]);
    CHECK(CyclotomicField::get(120)->degree() == 32);
}

TEST_CASE("roots of unity") {
    auto f = CyclotomicField::get(24);
    Scalar i = Scalar::root_of_unity(f, 4, 1);
    CHECK(i * i == Scalar(f, -1L));
    CHECK(Scalar::root_of_unity(f, 24, 24).is_one());
    for (int p = -30; p < 30; ++p) {
        Scalar z = Scalar::root(f, p);
        CHECK(z.conj() == Scalar::root(f, -p));
        CHECK(qtest::close(z.to_complex(), std::polar(1.0, 2 * M_PI * p / 24.0), 1e-12));
    }
    CHECK_THROWS_AS(Scalar::root_of_unity(f, 5, 1), FieldMismatch);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(7);
    auto f = CyclotomicField::get(24);
    for (int t = 0; t < 10000; ++t) {
        Scalar a = qtest::random_scalar(f, rng), b = qtest::random_scalar(f, rng), c = qtest::random_scalar(f, rng);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        auto n = (a * a.conj()).to_complex();
        REQUIRE(std::abs(n.imag()) < 1e-9);
        REQUIRE(n.real() > -1e-12);
    }
}

TEST_CASE("inverse and float embedding agree with complex arithmetic") {
    std::mt19937 rng(11);
    for (int order : {16, 24, 48, 120}) {
        auto f = CyclotomicField::get(order);
        for (int t = 0; t < 30; ++t) {
            Scalar a = qtest::random_scalar(f, rng, 4), b = qtest::random_scalar(f, rng, 4);
            CHECK(qtest::close((a * b).to_complex(), a.to_complex() * b.to_complex()));
            if (a.is_zero()) continue;
            CHECK((a * a.inverse()).is_one());
            CHECK(qtest::close(a.inverse().to_complex(), 1.0 / a.to_complex(), 1e-7));
        }
    }
}

TEST_CASE("square roots via Gauss sums") {
    auto f = CyclotomicField::get(48);
    for (long n : {1L, 2L, 3L, 4L, 6L, 12L}) {
        Scalar s = sqrt_integer(f, n);
        CHECK(s * s == Scalar(f, n));
        CHECK(qtest::close(s.to_complex(), std::sqrt(static_cast<double>(n))));
    }
}

TEST_CASE("rank, proportionality and kernels") {
    auto f = CyclotomicField::get(24);
    Matrix id = Matrix::identity(f, 4);
    CHECK(id.rank() == 4);
    CHECK(Matrix(f, 3, 5).rank() == 0);
    auto r = is_proportional(id, id);
    REQUIRE(r);
    CHECK(r->is_one());

    std::mt19937 rng(3);
    Matrix m(f, 5, 5);
    // rank 3 by construction: rows 3,4 are combinations of rows 0..2
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j) m(i, j) = qtest::random_scalar(f, rng);
    for (int j = 0; j < 5; ++j) {
        m(3, j) = m(0, j) + m(1, j);
        m(4, j) = m(2, j) * Scalar::root(f, 5) - m(0, j);
    }
    CHECK(m.rank() == 3);
    Matrix k = m.kernel();
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());
    // permutation invariance
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> pr{0, 1, 2, 3, 4}, pc{0, 1, 2, 3, 4};
        std::shuffle(pr.begin(), pr.end(), rng);
        std::shuffle(pc.begin(), pc.end(), rng);
        Matrix p(f, 5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) p(i, j) = m(pr[i], pc[j]);
        CHECK(p.rank() == 3);
    }
    Matrix s = m * Scalar::root(f, 3);
    auto ratio = is_proportional(s, m);
    REQUIRE(ratio);
    CHECK(*ratio == Scalar::root(f, 3));
    CHECK_FALSE(is_proportional(m, id));
}

TEST_CASE("matrix inverse") {
    std::mt19937 rng(5);
    auto f = CyclotomicField::get(16);
    Matrix m(f, 4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = qtest::random_scalar(f, rng);
    auto inv = m.inverse();
    REQUIRE(inv);
    CHECK((m * *inv).is_identity());
}
