#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arq/arquiver.hpp"
#include "arq/laurent.hpp"

namespace arq {

using PolyMat = std::vector<std::vector<LaurentPoly>>;

// Ct(t) = (t + t^-1 - 2) Id + C, the (q,t)-Cartan matrix at q = 1.
inline PolyMat t_cartan(const CartanDatum& cd) {
    PolyMat m(cd.rank, std::vector<LaurentPoly>(cd.rank));
    for (int i = 0; i < cd.rank; ++i)
        for (int j = 0; j < cd.rank; ++j) {
            LaurentPoly p;
            if (i == j) {
                p.set(1, Rat(1));
                p.set(-1, Rat(1));
            }
            p.add(0, Rat(cd.cartan[i][j] - 2 * (i == j)));
            m[i][j] = p;
        }
    return m;
}

// B(t) = Ct(t) D^-1 and Bbar(t) = D Ct(t).
inline PolyMat b_matrix(const CartanDatum& cd) {
    PolyMat m = t_cartan(cd);
    for (int i = 0; i < cd.rank; ++i)
        for (int j = 0; j < cd.rank; ++j) m[i][j] = Rat(1, cd.d[j]) * m[i][j];
    return m;
}

inline PolyMat b_bar_matrix(const CartanDatum& cd) {
    PolyMat m = t_cartan(cd);
    for (int i = 0; i < cd.rank; ++i)
        for (int j = 0; j < cd.rank; ++j) m[i][j] = Rat(cd.d[i]) * m[i][j];
    return m;
}

// Truncated series inverse of a Laurent-polynomial matrix whose lowest
// coefficient matrix is invertible: X = sum_{k >= -m} X_k t^k with
// B X = Id + O(t^{order+1}).
inline PolyMat invert_series(const PolyMat& b, int order) {
    const int n = static_cast<int>(b.size());
    int m = 0;
    for (const auto& row : b)
        for (const auto& e : row)
            if (!e.is_zero()) m = std::min(m, e.min_exp());
    int top = 0;
    for (const auto& row : b)
        for (const auto& e : row)
            if (!e.is_zero()) top = std::max(top, e.max_exp());

    auto coeff_mat = [&](int k) {
        RatMat c(n, RatVec(n, Rat(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c[i][j] = b[i][j].coeff(k);
        return c;
    };
    RatMat lead_inv = rat_inverse(coeff_mat(m)); // throws if singular

    // X starts at t^{-m}; coefficients solve B_m X_{u-m} = delta_{u,0} Id - sum_{j>m} B_j X_{u-j}
    std::map<int, RatMat> x;
    for (int u = 0; u <= order - m; ++u) {
        RatMat rhs(n, RatVec(n, Rat(0)));
        if (u == 0)
            for (int i = 0; i < n; ++i) rhs[i][i] = Rat(1);
        for (int k = m + 1; k <= top; ++k) {
            int need = u - k;
            auto it = x.find(need);
            if (it == x.end()) continue;
            RatMat prod = rat_mul(coeff_mat(k), it->second);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) rhs[i][j] -= prod[i][j];
        }
        x[u - m] = rat_mul(lead_inv, rhs);
    }

    PolyMat out(n, std::vector<LaurentPoly>(n));
    for (const auto& [k, mat] : x) {
        if (k > order) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (mat[i][j] != Rat(0)) out[i][j].set(k, mat[i][j]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// The coefficients b~_{i,j}(u) of Btilde(t) = B(t)^{-1}, by two routes.

// Route 1: truncated series inversion of B(t).
class BTildeSeries {
public:
    explicit BTildeSeries(const CartanDatum& cd, int order = -1)
        : cd_(cd), order_(order < 0 ? 2 * cd.h + 1 : order) {
        inv_ = invert_series(b_matrix(cd), order_);
    }

    int order() const { return order_; }

    Rat coeff(int i, int j, int u) const {
        if (u > order_) throw std::out_of_range("BTildeSeries: beyond truncation order");
        return inv_[i][j].coeff(u);
    }

    const PolyMat& matrix() const { return inv_; }

private:
    CartanDatum cd_;
    int order_;
    PolyMat inv_;
};

// Route 2: b~_{i,j}(u) = (omega_i, tau_Q^{(u + xi_j - xi_i - 1)/2}(gamma_j))
// read off any Dynkin quiver Q of the type.
class BTildeAR {
public:
    explicit BTildeAR(const DynkinQuiver& q, int max_u = -1)
        : q_(q), max_u_(max_u < 0 ? 2 * q.datum.h + 1 : max_u) {
        const CartanDatum& cd = q.datum;
        Word tau = coxeter_element(q);
        Word tau_inv(tau.rbegin(), tau.rend());
        // k ranges over [(0 + min xi_j - max xi_i - 1)/2, (max_u + max - min)/2]
        int xmin = *std::min_element(q.xi.begin(), q.xi.end());
        int xmax = *std::max_element(q.xi.begin(), q.xi.end());
        kmin_ = -((xmax - xmin + 1) / 2 + 1);
        kmax_ = (max_u_ + xmax - xmin) / 2 + 1;
        powers_.assign(cd.rank, {});
        for (int j = 0; j < cd.rank; ++j) {
            RootVec g0 = gamma(q, j);
            std::map<long long, RootVec>& row = powers_[j];
            row[0] = g0;
            RootVec cur = g0;
            for (long long k = 1; k <= kmax_; ++k) {
                cur = apply_word(cd, tau, cur);
                row[k] = cur;
            }
            cur = g0;
            for (long long k = -1; k >= kmin_; --k) {
                cur = apply_word(cd, tau_inv, cur);
                row[k] = cur;
            }
        }
    }

    long long coeff(int i, int j, long long u) const {
        if (u < 0) return 0;
        const CartanDatum& cd = q_.datum;
        long long num = u + q_.xi[j] - q_.xi[i] - 1;
        if (((num % 2) + 2) % 2 != 0) return 0;
        long long k = num / 2;
        if (k < kmin_ || k > kmax_) throw std::out_of_range("BTildeAR: power out of range");
        const RootVec& v = powers_[j].at(k);
        return static_cast<long long>(cd.d[i]) * v[i]; // (omega_i, v) = d_i v_i
    }

private:
    DynkinQuiver q_;
    long long max_u_;
    long long kmin_ = 0, kmax_ = 0;
    std::vector<std::map<long long, RootVec>> powers_;
};

// Assembled table: b~_{i,j}(u) for 0 <= u <= 2h, the polynomials
// dtilde_{i,j}(t) = sum_{u=1..h} b~(u) t^u, and dtilde[k] = b~(k-1).
class TildeTable {
public:
    enum class Route { Series, ARQuiver, Both };

    explicit TildeTable(const CartanDatum& cd, Route route = Route::Both)
        : cd_(cd) {
        const int H = cd.h;
        table_.assign(cd.rank, std::vector<std::vector<long long>>(
                                   cd.rank, std::vector<long long>(2 * H + 1, 0)));
        std::optional<BTildeSeries> ser;
        std::optional<BTildeAR> ar;
        if (route != Route::ARQuiver) ser.emplace(cd, 2 * H);
        if (route != Route::Series) ar.emplace(alternating_quiver(cd), 2 * H);
        for (int i = 0; i < cd.rank; ++i)
            for (int j = 0; j < cd.rank; ++j)
                for (int u = 0; u <= 2 * H; ++u) {
                    long long v = 0;
                    if (ser) v = as_integer(ser->coeff(i, j, u));
                    if (ar) {
                        long long w = ar->coeff(i, j, u);
                        if (ser && v != w)
                            throw std::runtime_error("btilde route mismatch at " + cd.name());
                        v = w;
                    }
                    table_[i][j][u] = v;
                }
    }

    const CartanDatum& datum() const { return cd_; }

    long long btilde(int i, int j, int u) const {
        if (u < 0) return 0;
        return table_[i][j][u];
    }

    LaurentPoly tilde_d(int i, int j) const {
        LaurentPoly p;
        for (int u = 1; u <= cd_.h; ++u) p.add(u, Rat(btilde(i, j, u)));
        return p;
    }

    // dtilde_{i,j}[k] = b~_{i,j}(k-1)
    long long tilde_d_at(int i, int j, int k) const { return btilde(i, j, k - 1); }

private:
    CartanDatum cd_;
    std::vector<std::vector<std::vector<long long>>> table_;
};

// ---------------------------------------------------------------------------
// Closed forms of dtilde: explicit sums for the classical types and
// tabulated polynomials for the exceptional ones.

namespace detail {

inline LaurentPoly poly_from_exps(std::initializer_list<int> exps) {
    LaurentPoly p;
    for (int e : exps) p.add(e, Rat(1));
    return p;
}

inline LaurentPoly poly_from_pairs(std::initializer_list<std::pair<int, int>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p.add(e, Rat(c));
    return p;
}

// E6/E7/E8 tables for i <= j in the listed cells; the rest follows
// from symmetry and d~_{i,j}(t) = t^h d~_{i,j*}(1/t).
inline const std::map<std::pair<int, int>, LaurentPoly>& e_table(int rank) {
    static const std::map<std::pair<int, int>, LaurentPoly> e6 = {
        {{1, 1}, poly_from_exps({1, 7})},
        {{1, 2}, poly_from_exps({4, 8})},
        {{1, 3}, poly_from_exps({2, 6, 8})},
        {{1, 4}, poly_from_exps({3, 5, 7, 9})},
        {{1, 5}, poly_from_exps({4, 6, 10})},
        {{1, 6}, poly_from_exps({5, 11})},
        {{2, 2}, poly_from_exps({1, 5, 7, 11})},
        {{2, 3}, poly_from_exps({3, 5, 7, 9})},
        {{2, 4}, poly_from_pairs({{2, 1}, {4, 1}, {6, 2}, {8, 1}, {10, 1}})},
        {{3, 3}, poly_from_pairs({{1, 1}, {3, 1}, {5, 1}, {7, 2}, {9, 1}})},
        {{3, 4}, poly_from_pairs({{2, 1}, {4, 2}, {6, 2}, {8, 2}, {10, 1}})},
        {{3, 5}, poly_from_pairs({{3, 1}, {5, 2}, {7, 1}, {9, 1}, {11, 1}})},
        {{4, 4}, poly_from_pairs({{1, 1}, {3, 2}, {5, 3}, {7, 3}, {9, 2}, {11, 1}})},
    };
    static const std::map<std::pair<int, int>, LaurentPoly> e7 = {
        {{1, 1}, poly_from_exps({1, 7, 11, 17})},
        {{1, 2}, poly_from_exps({4, 8, 10, 14})},
        {{1, 3}, poly_from_exps({2, 6, 8, 10, 12, 16})},
        {{1, 4}, poly_from_pairs({{3, 1}, {5, 1}, {7, 1}, {9, 2}, {11, 1}, {13, 1}, {15, 1}})},
        {{1, 5}, poly_from_exps({4, 6, 8, 10, 12, 14})},
        {{1, 6}, poly_from_exps({5, 7, 11, 13})},
        {{1, 7}, poly_from_exps({6, 12})},
        {{2, 2}, poly_from_exps({1, 5, 7, 9, 11, 13, 17})},
        {{2, 3}, poly_from_pairs({{3, 1}, {5, 1}, {7, 1}, {9, 2}, {11, 1}, {13, 1}, {15, 1}})},
        {{2, 4}, poly_from_pairs({{2, 1}, {4, 1}, {6, 2}, {8, 2}, {10, 2}, {12, 2}, {14, 1}, {16, 1}})},
        {{2, 5}, poly_from_pairs({{3, 1}, {5, 1}, {7, 2}, {9, 1}, {11, 2}, {13, 1}, {15, 1}})},
        {{2, 6}, poly_from_exps({4, 6, 8, 10, 12, 14})},
        {{2, 7}, poly_from_exps({5, 9, 13})},
        {{3, 3}, poly_from_pairs({{1, 1}, {3, 1}, {5, 1}, {7, 2}, {9, 2}, {11, 2}, {13, 1}, {15, 1}, {17, 1}})},
        {{3, 4}, poly_from_pairs({{2, 1}, {4, 2}, {6, 2}, {8, 3}, {10, 3}, {12, 2}, {14, 2}, {16, 1}})},
        {{3, 5}, poly_from_pairs({{3, 1}, {5, 2}, {7, 2}, {9, 2}, {11, 2}, {13, 2}, {15, 1}})},
        {{3, 6}, poly_from_pairs({{4, 1}, {6, 2}, {8, 1}, {10, 1}, {12, 2}, {14, 1}})},
        {{3, 7}, poly_from_exps({5, 7, 11, 13})},
        {{4, 4}, poly_from_pairs({{1, 1}, {3, 2}, {5, 3}, {7, 4}, {9, 4}, {11, 4}, {13, 3}, {15, 2}, {17, 1}})},
        {{4, 5}, poly_from_pairs({{2, 1}, {4, 2}, {6, 3}, {8, 3}, {10, 3}, {12, 3}, {14, 2}, {16, 1}})},
        {{4, 6}, poly_from_pairs({{3, 1}, {5, 2}, {7, 2}, {9, 2}, {11, 2}, {13, 2}, {15, 1}})},
        {{4, 7}, poly_from_exps({4, 6, 8, 10, 12, 14})},
        {{5, 5}, poly_from_pairs({{1, 1}, {3, 1}, {5, 2}, {7, 2}, {9, 3}, {11, 2}, {13, 2}, {15, 1}, {17, 1}})},
        {{5, 6}, poly_from_pairs({{2, 1}, {4, 1}, {6, 1}, {8, 2}, {10, 2}, {12, 1}, {14, 1}, {16, 1}})},
        // the recurrence b~(7)+b~(9) = b~_{5,6}(8) = 2 pins the t^9 term
        {{5, 7}, poly_from_exps({3, 7, 9, 11, 15})},
        {{6, 6}, poly_from_pairs({{1, 1}, {3, 1}, {7, 1}, {9, 2}, {11, 1}, {15, 1}, {17, 1}})},
        {{6, 7}, poly_from_exps({2, 8, 10, 16})},
        {{7, 7}, poly_from_exps({1, 9, 17})},
    };
    static const std::map<std::pair<int, int>, LaurentPoly> e8 = {
        {{1, 1}, poly_from_exps({1, 7, 11, 13, 17, 19, 23, 29})},
        {{1, 2}, poly_from_exps({4, 8, 10, 12, 14, 16, 18, 20, 22, 26})},
        {{1, 3}, poly_from_pairs({{2, 1}, {6, 1}, {8, 1}, {10, 1}, {12, 2}, {14, 1}, {16, 1}, {18, 2}, {20, 1}, {22, 1}, {24, 1}, {28, 1}})},
        {{1, 4}, poly_from_pairs({{3, 1}, {5, 1}, {7, 1}, {9, 2}, {11, 2}, {13, 2}, {15, 2}, {17, 2}, {19, 2}, {21, 2}, {23, 1}, {25, 1}, {27, 1}})},
        {{1, 5}, poly_from_pairs({{4, 1}, {6, 1}, {8, 1}, {10, 2}, {12, 1}, {14, 2}, {16, 2}, {18, 1}, {20, 2}, {22, 1}, {24, 1}, {26, 1}})},
        {{1, 6}, poly_from_pairs({{5, 1}, {7, 1}, {9, 1}, {11, 1}, {13, 1}, {15, 2}, {17, 1}, {19, 1}, {21, 1}, {23, 1}, {25, 1}})},
        {{1, 7}, poly_from_exps({6, 8, 12, 14, 16, 18, 22, 24})},
        {{1, 8}, poly_from_exps({7, 13, 17, 23})},
        {{2, 2}, poly_from_pairs({{1, 1}, {5, 1}, {7, 1}, {9, 1}, {11, 2}, {13, 1}, {15, 2}, {17, 1}, {19, 2}, {21, 1}, {23, 1}, {25, 1}, {29, 1}})},
        {{2, 3}, poly_from_pairs({{3, 1}, {5, 1}, {7, 1}, {9, 2}, {11, 2}, {13, 2}, {15, 2}, {17, 2}, {19, 2}, {21, 2}, {23, 1}, {25, 1}, {27, 1}})},
        {{2, 4}, poly_from_pairs({{2, 1}, {4, 1}, {6, 2}, {8, 2}, {10, 3}, {12, 3}, {14, 3}, {16, 3}, {18, 3}, {20, 3}, {22, 2}, {24, 2}, {26, 1}, {28, 1}})},
        // b~(13)+b~(15) = b~_{2,4}(14)+b~_{2,6}(14) = 5 pins 2t^15
        {{2, 5}, poly_from_pairs({{3, 1}, {5, 1}, {7, 2}, {9, 2}, {11, 2}, {13, 3}, {15, 2}, {17, 3}, {19, 2}, {21, 2}, {23, 2}, {25, 1}, {27, 1}})},
        {{2, 6}, poly_from_pairs({{4, 1}, {6, 1}, {8, 2}, {10, 1}, {12, 2}, {14, 2}, {16, 2}, {18, 2}, {20, 1}, {22, 2}, {24, 1}, {26, 1}})},
        {{2, 7}, poly_from_pairs({{5, 1}, {7, 1}, {9, 1}, {11, 1}, {13, 1}, {15, 2}, {17, 1}, {19, 1}, {21, 1}, {23, 1}, {25, 1}})},
        {{2, 8}, poly_from_exps({6, 10, 14, 16, 20, 24})},
        {{3, 3}, poly_from_pairs({{1, 1}, {3, 1}, {5, 1}, {7, 2}, {9, 2}, {11, 3}, {13, 3}, {15, 2}, {17, 3}, {19, 3}, {21, 2}, {23, 2}, {25, 1}, {27, 1}, {29, 1}})},
        {{3, 4}, poly_from_pairs({{2, 1}, {4, 2}, {6, 2}, {8, 3}, {10, 4}, {12, 4}, {14, 4}, {16, 4}, {18, 4}, {20, 4}, {22, 3}, {24, 2}, {26, 2}, {28, 1}})},
        {{3, 5}, poly_from_pairs({{3, 1}, {5, 2}, {7, 2}, {9, 3}, {11, 3}, {13, 3}, {15, 4}, {17, 3}, {19, 3}, {21, 3}, {23, 2}, {25, 2}, {27, 1}})},
        {{3, 6}, poly_from_pairs({{4, 1}, {6, 2}, {8, 2}, {10, 2}, {12, 2}, {14, 3}, {16, 3}, {18, 2}, {20, 2}, {22, 2}, {24, 2}, {26, 1}})},
        {{3, 7}, poly_from_pairs({{5, 1}, {7, 2}, {9, 1}, {11, 1}, {13, 2}, {15, 2}, {17, 2}, {19, 1}, {21, 1}, {23, 2}, {25, 1}})},
        {{3, 8}, poly_from_exps({6, 8, 12, 14, 16, 18, 22, 24})},
        {{4, 4}, poly_from_pairs({{1, 1}, {3, 2}, {5, 3}, {7, 4}, {9, 5}, {11, 6}, {13, 6}, {15, 6}, {17, 6}, {19, 6}, {21, 5}, {23, 4}, {25, 3}, {27, 2}, {29, 1}})},
        {{4, 5}, poly_from_pairs({{2, 1}, {4, 2}, {6, 3}, {8, 4}, {10, 4}, {12, 5}, {14, 5}, {16, 5}, {18, 5}, {20, 4}, {22, 4}, {24, 3}, {26, 2}, {28, 1}})},
        {{4, 6}, poly_from_pairs({{3, 1}, {5, 2}, {7, 3}, {9, 3}, {11, 3}, {13, 4}, {15, 4}, {17, 4}, {19, 3}, {21, 3}, {23, 3}, {25, 2}, {27, 1}})},
        {{4, 7}, poly_from_pairs({{4, 1}, {6, 2}, {8, 2}, {10, 2}, {12, 2}, {14, 3}, {16, 3}, {18, 2}, {20, 2}, {22, 2}, {24, 2}, {26, 1}})},
        {{4, 8}, poly_from_pairs({{5, 1}, {7, 1}, {9, 1}, {11, 1}, {13, 1}, {15, 2}, {17, 1}, {19, 1}, {21, 1}, {23, 1}, {25, 1}})},
        {{5, 5}, poly_from_pairs({{1, 1}, {3, 1}, {5, 2}, {7, 3}, {9, 3}, {11, 4}, {13, 4}, {15, 4}, {17, 4}, {19, 4}, {21, 3}, {23, 3}, {25, 2}, {27, 1}, {29, 1}})},
        {{5, 6}, poly_from_pairs({{2, 1}, {4, 1}, {6, 2}, {8, 2}, {10, 3}, {12, 3}, {14, 3}, {16, 3}, {18, 3}, {20, 3}, {22, 2}, {24, 2}, {26, 1}, {28, 1}})},
        {{5, 7}, poly_from_pairs({{3, 1}, {5, 1}, {7, 1}, {9, 2}, {11, 2}, {13, 2}, {15, 2}, {17, 2}, {19, 2}, {21, 2}, {23, 1}, {25, 1}, {27, 1}})},
        {{5, 8}, poly_from_exps({4, 8, 10, 12, 14, 16, 18, 20, 22, 26})},
        {{6, 6}, poly_from_pairs({{1, 1}, {3, 1}, {5, 1}, {7, 1}, {9, 2}, {11, 3}, {13, 2}, {15, 2}, {17, 2}, {19, 3}, {21, 2}, {23, 1}, {25, 1}, {27, 1}, {29, 1}})},
        {{6, 7}, poly_from_pairs({{2, 1}, {4, 1}, {8, 1}, {10, 2}, {12, 2}, {14, 1}, {16, 1}, {18, 2}, {20, 2}, {22, 1}, {26, 1}, {28, 1}})},
        {{6, 8}, poly_from_exps({3, 9, 11, 13, 17, 19, 21, 27})},
        {{7, 7}, poly_from_pairs({{1, 1}, {3, 1}, {9, 1}, {11, 2}, {13, 1}, {17, 1}, {19, 2}, {21, 1}, {27, 1}, {29, 1}})},
        {{7, 8}, poly_from_exps({2, 10, 12, 18, 20, 28})},
        {{8, 8}, poly_from_exps({1, 11, 19, 29})},
    };
    switch (rank) {
        case 6: return e6;
        case 7: return e7;
        default: return e8;
    }
}

} // namespace detail

// The closed form of dtilde_{i,j}(t): explicit sums for A/B/C/D, literal
// tables for E6/E7/E8/F4/G2. 0-based i, j.
inline LaurentPoly closed_form_tilde_d(const CartanDatum& cd, int i0, int j0) {
    const int n = cd.rank;
    int i = i0 + 1, j = j0 + 1;
    LaurentPoly p;
    switch (cd.type) {
        case Type::A: {
            int lim = std::min(std::min(i, j), std::min(n + 1 - i, n + 1 - j));
            for (int s = 1; s <= lim; ++s) p.add(std::abs(i - j) + 2 * s - 1, Rat(1));
            return p;
        }
        case Type::D: {
            // D_m = D_{n+1} with horns at positions n, n+1 both acting as n
            int nn = n - 1;
            if (std::min(i, j) < nn) {
                int ie = std::min(i, nn), je = std::min(j, nn);
                for (int s = 1; s <= std::min(ie, je); ++s) {
                    p.add(std::abs(ie - je) + 2 * s - 1, Rat(1));
                    if (std::max(i, j) < nn) p.add(2 * nn - ie - je + 2 * s - 1, Rat(1));
                }
            } else {
                int dij = i == j ? 1 : 0;
                for (int s = 1; s <= (nn + dij) / 2; ++s) p.add(4 * s - 1 - 2 * dij, Rat(1));
            }
            return p;
        }
        case Type::B:
        case Type::C: {
            Rat mx(std::max(cd.d[i0], cd.d[j0]));
            for (int s = 1; s <= std::min(i, j); ++s) {
                p.add(std::abs(i - j) + 2 * s - 1, mx);
                if (std::max(i, j) < n) p.add(2 * n - i - j + 2 * s - 1, mx);
            }
            return p;
        }
        case Type::E: {
            const auto& tab = detail::e_table(n);
            auto key = std::make_pair(std::min(i, j), std::max(i, j));
            auto it = tab.find(key);
            if (it != tab.end()) return it->second;
            // remaining cells from d~_{i,j}(t) = t^h d~_{i,j*}(1/t)
            int js = cd.star[std::max(i, j) - 1] + 1;
            auto key2 = std::make_pair(std::min(std::min(i, j), js), std::max(std::min(i, j), js));
            it = tab.find(key2);
            if (it == tab.end()) throw std::runtime_error("E table lookup failed");
            return it->second.inverted_variable().shifted(cd.h);
        }
        case Type::F: {
            static const std::map<std::pair<int, int>, LaurentPoly> f4 = {
                {{1, 1}, Rat(2) * detail::poly_from_exps({1, 5, 7, 11})},
                {{1, 2}, Rat(2) * detail::poly_from_pairs({{2, 1}, {4, 1}, {6, 2}, {8, 1}, {10, 1}})},
                {{1, 3}, Rat(2) * detail::poly_from_exps({3, 5, 7, 9})},
                {{1, 4}, Rat(2) * detail::poly_from_exps({4, 8})},
                {{2, 2}, Rat(2) * detail::poly_from_pairs({{1, 1}, {3, 2}, {5, 3}, {7, 3}, {9, 2}, {11, 1}})},
                {{2, 3}, Rat(2) * detail::poly_from_pairs({{2, 1}, {4, 2}, {6, 2}, {8, 2}, {10, 1}})},
                {{2, 4}, Rat(2) * detail::poly_from_exps({3, 5, 7, 9})},
                {{3, 3}, detail::poly_from_pairs({{1, 1}, {3, 2}, {5, 3}, {7, 3}, {9, 2}, {11, 1}})},
                {{3, 4}, detail::poly_from_pairs({{2, 1}, {4, 1}, {6, 2}, {8, 1}, {10, 1}})},
                {{4, 4}, detail::poly_from_exps({1, 5, 7, 11})},
            };
            return f4.at({std::min(i, j), std::max(i, j)});
        }
        case Type::G: {
            static const std::map<std::pair<int, int>, LaurentPoly> g2 = {
                {{1, 1}, detail::poly_from_pairs({{1, 1}, {3, 2}, {5, 1}})},
                {{1, 2}, Rat(3) * detail::poly_from_exps({2, 4})},
                {{2, 2}, Rat(3) * detail::poly_from_pairs({{1, 1}, {3, 2}, {5, 1}})},
            };
            return g2.at({std::min(i, j), std::max(i, j)});
        }
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// The folding identity of the orbit-folded datum:
// d~^{fold}_{i,j}(t) = sum over orbit preimages of d~^{lift}.
struct FoldSumReport {
    CartanDatum lift;
    CartanDatum folded;
    struct Cell {
        int i, j; // 0-based folded indices
        LaurentPoly lhs, rhs;
        bool equal;
    };
    std::vector<Cell> cells;
    bool all_equal = true;
};

inline FoldSumReport verify_fold_sum(const CartanDatum& lift, const DiagramAutomorphism& s) {
    FoldResult fr = fold(lift, s);
    TildeTable big(lift), small(fr.folded);
    FoldSumReport rep{lift, fr.folded, {}, true};
    for (int i = 0; i < fr.folded.rank; ++i)
        for (int j = 0; j < fr.folded.rank; ++j) {
            LaurentPoly rhs;
            for (int a = 0; a < lift.rank; ++a)
                for (int b = 0; b < lift.rank; ++b)
                    if (fr.projection[a] == i && fr.projection[b] == j) rhs += big.tilde_d(a, b);
            LaurentPoly lhs = small.tilde_d(i, j);
            bool eq = lhs == rhs;
            rep.all_equal = rep.all_equal && eq;
            rep.cells.push_back({i, j, lhs, rhs, eq});
        }
    return rep;
}

} // namespace arq
