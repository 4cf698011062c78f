#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrep/frobenius.hpp"
#include "qrep/modular_invariant.hpp"

namespace qrep {

// Formal nonnegative combination of generator classes, keyed by "A", "D", "E".
using ClassSum = std::map<std::string, int>;

std::string class_sum_to_string(const ClassSum& s);

struct UnknownClass : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MoritaClass {
    std::string name;  // "A", "D" or "E"
    Algebra representative;
    InvariantMatrix z;
};

// Generator classes available at the level, in the order A, D, E.
std::vector<MoritaClass> rig_generators(CategoryPtr cat);

// Writes z as a nonnegative integer combination of the generator Z-matrices.
// Throws UnknownClass when no such combination exists.
ClassSum decompose_invariant(const std::vector<MoritaClass>& gens, const Matrix& z);

enum class ProductMethod {
    // Z of the tensor product algebra.
    Direct,
    // Product Z(x) Z(y) of the factor invariants.
    Factorized,
};

ClassSum class_multiply(const std::vector<MoritaClass>& gens, const MoritaClass& x, const MoritaClass& y,
                        ProductMethod method = ProductMethod::Direct);

struct RigTable {
    int level = 0;
    std::vector<std::string> names;
    // products[i][j] = names[i] x names[j]
    std::vector<std::vector<ClassSum>> products;
    std::vector<std::vector<std::string>> methods;  // "direct" or "factorized"
};

// Tensor products whose algebra has more than direct_limit summands
// are evaluated through factorized invariants.
RigTable rig_table(int level, int direct_limit = 32);

}  // namespace qrep
