#include "doctest.h"
#include "qrep/modular_invariant.hpp"
#include "qrep/tqft_spaces.hpp"

using namespace qrep;

TEST_CASE("ADE invariants are modular invariants") {
    for (int k = 4; k <= 16; k += 2) {
        auto c = std::make_shared<const Category>(k);
        std::vector<Algebra> algebras{build_ade(c, Series::D)};
        for (Series s : {Series::E6, Series::E7})
            if (series_available(k, s)) algebras.push_back(build_ade(c, s));
        for (const auto& a : algebras) {
            auto inv = z_matrix(a);
            INFO(inv.algebra_tag << " at level " << k);
            CHECK(inv.level == k);
            CHECK(inv.z.is_nonnegative_integer());
            CHECK(inv.z(0, 0).is_one());
            CHECK(commutator(inv.z, rep_genus1(*c, Generator::S)).is_zero());
            CHECK(commutator(inv.z, rep_genus1(*c, Generator::T)).is_zero());
        }
    }
}

TEST_CASE("invalid algebras are rejected") {
    auto a = build_ade(std::make_shared<const Category>(6), Series::D);
    a.unit[0] = Scalar(a.cat->field(), 2L);
    CHECK_THROWS_AS(z_matrix(a), InvalidAlgebra);
}

TEST_CASE("triviality") {
    auto f = CyclotomicField::get(8);
    CHECK(is_trivial(Matrix::identity(f, 3) * Scalar(f, 5L)));
    Matrix m = Matrix::identity(f, 2);
    m(0, 1) = Scalar::one(f);
    CHECK_FALSE(is_trivial(m));
    CHECK_FALSE(is_trivial(Matrix(f, 2, 3)));
}
