#pragma once

#include <complex>
#include <random>

#include "qrep/scalar.hpp"

namespace qtest {

// Random field element with small rational coefficients and sparse support.
inline qrep::Scalar random_scalar(const qrep::FieldPtr& f, std::mt19937& rng, int density = 3) {
    std::uniform_int_distribution<int> pos(0, f->degree() - 1), num(-5, 5), den(1, 4);
    qrep::Scalar s = qrep::Scalar::zero(f);
    for (int t = 0; t < density; ++t)
        s += qrep::Scalar::root(f, pos(rng)).scaled(mpq_class(num(rng), den(rng)));
    return s;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
    return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
}

}  // namespace qtest
