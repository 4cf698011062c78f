#include "doctest.h"
#include "qrep/rig.hpp"

using namespace qrep;

namespace {

const MoritaClass& named(const std::vector<MoritaClass>& gens, const std::string& n) {
    for (const auto& g : gens)
        if (g.name == n) return g;
    throw std::out_of_range(n);
}

}  // namespace

TEST_CASE("class sums render in generator order") {
    CHECK(class_sum_to_string({{"E", 1}, {"D", 1}}) == "[D] + [E]");
    CHECK(class_sum_to_string({{"D", 2}}) == "2[D]");
    CHECK(class_sum_to_string({}) == "0");
}

TEST_CASE("generators at each level") {
    CHECK(rig_generators(std::make_shared<const Category>(3)).size() == 1);
    CHECK(rig_generators(std::make_shared<const Category>(4)).size() == 2);
    CHECK(rig_generators(std::make_shared<const Category>(10)).size() == 3);
}

TEST_CASE("D times D by residue of the level") {
    for (int k : {4, 6, 8, 12}) {
        auto t = rig_table(k);
        REQUIRE(t.names == std::vector<std::string>{"A", "D"});
        CHECK(t.products[0][0] == ClassSum{{"A", 1}});
        CHECK(t.products[0][1] == ClassSum{{"D", 1}});
        CHECK(t.products[1][1] == (k % 4 == 0 ? ClassSum{{"D", 2}} : ClassSum{{"A", 1}}));
        CHECK(t.methods[1][1] == "direct");
    }
}

TEST_CASE("level ten table") {
    auto t = rig_table(10);
    REQUIRE(t.names.size() == 3);
    CHECK(t.products[1][2] == ClassSum{{"E", 1}});
    CHECK(t.products[2][2] == ClassSum{{"E", 2}});
}

TEST_CASE("commutativity and both product methods agree") {
    for (int k : {4, 6, 10}) {
        auto gens = rig_generators(std::make_shared<const Category>(k));
        for (const auto& x : gens)
            for (const auto& y : gens) {
                auto xy = class_multiply(gens, x, y);
                CHECK(xy == class_multiply(gens, y, x));
                CHECK(xy == class_multiply(gens, x, y, ProductMethod::Factorized));
            }
    }
}

TEST_CASE("distributivity over direct sums") {
    for (int k : {4, 6}) {
        auto gens = rig_generators(std::make_shared<const Category>(k));
        const auto& a = named(gens, "A");
        const auto& d = named(gens, "D");
        for (const auto* y : {&a, &d})
            for (const auto* z : {&a, &d}) {
                auto sum = box_plus(y->representative, z->representative);
                auto lhs = decompose_invariant(gens, z_matrix(box_tensor(d.representative, sum)).z);
                ClassSum rhs = class_multiply(gens, d, *y);
                for (const auto& [n, c] : class_multiply(gens, d, *z)) rhs[n] += c;
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("a non-invariant matrix is an unknown class") {
    auto gens = rig_generators(std::make_shared<const Category>(4));
    Matrix z = gens[0].z.z;
    z(1, 2) = Scalar::one(z.field());
    CHECK_THROWS_AS(decompose_invariant(gens, z), UnknownClass);
    CHECK_THROWS_AS(decompose_invariant(gens, gens[1].z.z - gens[0].z.z * Scalar(z.field(), 3L)), UnknownClass);
}
