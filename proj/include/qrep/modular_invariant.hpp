#pragma once

#include <string>

#include "qrep/frobenius.hpp"
#include "qrep/matrix.hpp"

namespace qrep {

struct InvariantMatrix {
    Matrix z;
    std::string algebra_tag;
    int level = 0;
};

// Z_ij = rank of the idempotent P^l_A(U_i) on Hom(U_j, A (x) U_i).
// Throws InvalidAlgebra if A fails the axiom check.
InvariantMatrix z_matrix(const Algebra& a);

// True iff z is a scalar multiple of the identity.
bool is_trivial(const Matrix& z);

}  // namespace qrep
