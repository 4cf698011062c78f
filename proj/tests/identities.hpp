#pragma once

#include "qrep/category.hpp"

namespace qtest {

using qrep::Category;
using qrep::Scalar;

// Pentagon for splitting trees, checked at one label tuple.
inline bool pentagon_holds(const Category& c, int a, int b, int cc, int d, int e, int f, int g, int k, int l) {
    Scalar lhs = c.F(f, cc, d, e, g, l) * c.F(a, b, l, e, f, k);
    Scalar rhs = c.zero();
    for (int h = 0; h <= c.level(); ++h) rhs += c.F(a, b, cc, g, f, h) * c.F(a, h, d, e, g, k) * c.F(b, cc, d, k, h, l);
    return lhs == rhs;
}

inline bool hexagon_holds(const Category& c, int a, int b, int cc, int d, int e, int g, bool inv) {
    auto r = [&](int x, int y, int z) { return inv ? c.Rinv(x, y, z) : c.R(x, y, z); };
    Scalar lhs = r(cc, a, e) * c.F(a, cc, b, d, e, g) * r(cc, b, g);
    Scalar rhs = c.zero();
    for (int f = 0; f <= c.level(); ++f) rhs += c.F(cc, a, b, d, e, f) * r(cc, f, d) * c.F(a, b, cc, d, f, g);
    return lhs == rhs;
}

}  // namespace qtest
