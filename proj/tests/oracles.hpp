#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

// Independent reference data for su(2)_k computed in floating point or from
// the classical character combinations, without touching the library.
namespace oracle {

using IntMatrix = std::vector<std::vector<long>>;

inline double qdim(int k, int a) { return std::sin(M_PI * (a + 1) / (k + 2)) / std::sin(M_PI / (k + 2)); }

inline double smatrix(int k, int a, int b) {
    return std::sqrt(2.0 / (k + 2)) * std::sin(M_PI * (a + 1) * (b + 1) / (k + 2));
}

inline std::complex<double> twist(int k, int a) { return std::polar(1.0, M_PI * a * (a + 2) / (2.0 * (k + 2))); }

// dim of the genus-g block space: sum_i S_{0i}^{2-2g}
inline long verlinde(int k, int g) {
    double s = 0;
    for (int i = 0; i <= k; ++i) s += std::pow(smatrix(k, 0, i), 2.0 - 2 * g);
    return std::lround(s);
}

// Sum of |sum_{a in block} chi_a|^2 over the blocks.
inline IntMatrix from_blocks(int k, const std::vector<std::vector<int>>& blocks) {
    IntMatrix z(k + 1, std::vector<long>(k + 1, 0));
    for (const auto& b : blocks)
        for (int i : b)
            for (int j : b) z[i][j] += 1;
    return z;
}

inline IntMatrix identity(int k) { return from_blocks(k, [&] {
    std::vector<std::vector<int>> b;
    for (int i = 0; i <= k; ++i) b.push_back({i});
    return b;
}()); }

// D-series invariant at even level k >= 4.
inline IntMatrix d_series(int k) {
    IntMatrix z(k + 1, std::vector<long>(k + 1, 0));
    if (k % 4 == 0) {
        for (int j = 0; j < k / 2; j += 2) {
            z[j][j] += 1;
            z[j][k - j] += 1;
            z[k - j][j] += 1;
            z[k - j][k - j] += 1;
        }
        z[k / 2][k / 2] = 2;
    } else {
        for (int j = 0; j <= k; ++j) z[j][j % 2 == 0 ? j : k - j] = 1;
    }
    return z;
}

inline IntMatrix e6() { return from_blocks(10, {{0, 6}, {3, 7}, {4, 10}}); }

inline IntMatrix e7() {
    IntMatrix z = from_blocks(16, {{0, 16}, {4, 12}, {6, 10}, {8}});
    for (int a : {2, 14}) {
        z[a][8] += 1;
        z[8][a] += 1;
    }
    return z;
}

inline IntMatrix e8() { return from_blocks(28, {{0, 10, 18, 28}, {6, 12, 16, 22}}); }

inline IntMatrix exceptional(int k) { return k == 10 ? e6() : k == 16 ? e7() : e8(); }

}  // namespace oracle
