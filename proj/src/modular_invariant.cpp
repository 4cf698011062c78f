#include "qrep/modular_invariant.hpp"

namespace qrep {

InvariantMatrix z_matrix(const Algebra& a) {
    if (!check_ssfa(a).all()) throw InvalidAlgebra("algebra '" + a.tag + "' fails the axiom check");
    const Category& cat = *a.cat;
    const int n = cat.rank();
    InvariantMatrix out{Matrix(cat.field(), n, n), a.tag, cat.level()};
    std::vector<Scalar> cells(static_cast<std::size_t>(n) * n, cat.zero());
#ifdef QREP_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto block = endofunctor_block(a, i, j);
            if (!block.basis.empty()) cells[static_cast<std::size_t>(i) * n + j] = block.matrix.trace();
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.z(i, j) = cells[static_cast<std::size_t>(i) * n + j];
    return out;
}

bool is_trivial(const Matrix& z) {
    if (z.rows() != z.cols()) return false;
    if (z.rows() == 0) return true;
    return is_proportional(z, Matrix::identity(z.field(), z.rows())).has_value();
}

}  // namespace qrep
