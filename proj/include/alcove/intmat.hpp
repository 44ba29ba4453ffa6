#pragma once

#include <cstdlib>
#include <vector>

#include "alcove/weight.hpp"

namespace alcove::intmat {

using Mat = std::vector<std::vector<Coord>>;

// Cofactor expansion; fine for the rank <= 8 matrices used here.
inline Coord det(const Mat& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Coord d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        Mat minor(n - 1, std::vector<Coord>(n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                minor[i - 1][cc++] = m[i][k];
            }
        }
        d += (j % 2 == 0 ? 1 : -1) * m[0][j] * det(minor);
    }
    return d;
}

inline Mat adjugate(const Mat& m) {
    const std::size_t n = m.size();
    Mat adj(n, std::vector<Coord>(n));
    if (n == 1) {
        adj[0][0] = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat minor(n - 1, std::vector<Coord>(n - 1));
            std::size_t rr = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::size_t cc = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[rr][cc++] = m[r][c];
                }
                ++rr;
            }
            adj[j][i] = (((i + j) % 2 == 0) ? 1 : -1) * det(minor);
        }
    return adj;
}

} // namespace alcove::intmat
