#pragma once

#include <stdexcept>
#include <vector>

#include "arq/rational.hpp"

namespace arq {

using IntMat = std::vector<std::vector<long long>>;
using RatMat = std::vector<std::vector<Rat>>;
using IntVec = std::vector<long long>;
using RatVec = std::vector<Rat>;

inline RatMat rat_identity(std::size_t n) {
    RatMat m(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Rat(1);
    return m;
}

inline RatMat to_rat(const IntMat& a) {
    RatMat m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        m[i] = RatVec(a[i].begin(), a[i].end());
    return m;
}

inline RatMat rat_mul(const RatMat& a, const RatMat& b) {
    const std::size_t n = a.size(), m = b[0].size(), k = b.size();
    RatMat r(n, RatVec(m, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == Rat(0)) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

// Exact Gauss-Jordan inverse; throws on a singular matrix.
inline RatMat rat_inverse(RatMat a) {
    const std::size_t n = a.size();
    RatMat inv = rat_identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == Rat(0)) ++piv;
        if (piv == n) throw std::runtime_error("rat_inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rat p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) { a[col][j] /= p; inv[col][j] /= p; }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == Rat(0)) continue;
            const Rat f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Solve C x = m exactly (square, nonsingular).
inline RatVec rat_solve(const RatMat& c, const RatVec& m) {
    RatMat inv = rat_inverse(c);
    const std::size_t n = c.size();
    RatVec x(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x[i] += inv[i][j] * m[j];
    return x;
}

} // namespace arq
