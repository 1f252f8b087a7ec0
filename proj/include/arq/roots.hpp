#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arq/cartan.hpp"

namespace arq {

// A root as its integer coefficient vector over the simple roots.
using RootVec = std::vector<long long>;

inline RootVec simple_root(int rank, int i) {
    RootVec v(rank, 0);
    v[i] = 1;
    return v;
}

inline RootVec operator+(const RootVec& a, const RootVec& b) {
    RootVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RootVec operator-(const RootVec& a, const RootVec& b) {
    RootVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline long long height(const RootVec& v) {
    return std::accumulate(v.begin(), v.end(), 0LL);
}

// Positive root system generated by reflection closure; roots are indexed in
// a deterministic order (height, then lexicographic coefficients).
class RootSystem {
public:
    explicit RootSystem(const CartanDatum& cd) : datum_(cd) {
        std::map<RootVec, int> seen;
        std::vector<RootVec> work;
        for (int i = 0; i < cd.rank; ++i) {
            work.push_back(simple_root(cd.rank, i));
            seen.emplace(work.back(), 0);
        }
        for (std::size_t q = 0; q < work.size(); ++q) {
            RootVec v = work[q];
            for (int i = 0; i < cd.rank; ++i) {
                long long pair_i = 0;
                for (int j = 0; j < cd.rank; ++j) pair_i += cd.cartan[i][j] * v[j];
                RootVec w = v;
                w[i] -= pair_i;
                if (height(w) <= 0) continue; // stay inside the positive cone
                if (seen.emplace(w, 0).second) work.push_back(w);
            }
        }
        roots_.assign(work.begin(), work.end());
        std::sort(roots_.begin(), roots_.end(), [](const RootVec& a, const RootVec& b) {
            long long ha = height(a), hb = height(b);
            return ha != hb ? ha < hb : a < b;
        });
        for (std::size_t k = 0; k < roots_.size(); ++k) index_[roots_[k]] = static_cast<int>(k);
        if (static_cast<long long>(roots_.size()) != cd.positive_root_count())
            throw std::runtime_error("positive root count mismatch for " + cd.name());
    }

    const CartanDatum& datum() const { return datum_; }
    int size() const { return static_cast<int>(roots_.size()); }
    const std::vector<RootVec>& positive() const { return roots_; }
    const RootVec& operator[](int k) const { return roots_[k]; }

    bool is_positive_root(const RootVec& v) const { return index_.count(v) != 0; }
    bool is_root(const RootVec& v) const {
        if (index_.count(v)) return true;
        RootVec neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        return index_.count(neg) != 0;
    }

    int index_of(const RootVec& v) const {
        auto it = index_.find(v);
        if (it == index_.end()) throw std::invalid_argument("not a positive root: " + coeff_string(v));
        return it->second;
    }

    std::optional<int> try_index(const RootVec& v) const {
        auto it = index_.find(v);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    // (a, b) via the symmetrized matrix D*C
    long long pairing(const RootVec& a, const RootVec& b) const {
        long long s = 0;
        for (int i = 0; i < datum_.rank; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < datum_.rank; ++j) s += a[i] * datum_.sym[i][j] * b[j];
        }
        return s;
    }

    long long pairing(int a, int b) const { return pairing(roots_[a], roots_[b]); }

    long long d_of(const RootVec& v) const { return pairing(v, v) / 2; }
    long long d_of(int k) const { return d_of(roots_[k]); }

    long long mul(const RootVec& v) const { return *std::max_element(v.begin(), v.end()); }

    std::vector<int> support(const RootVec& v) const {
        std::vector<int> s;
        for (int i = 0; i < datum_.rank; ++i)
            if (v[i] != 0) s.push_back(i);
        return s;
    }

    // p_{beta,alpha} = max{p : beta - p*alpha is a root}
    long long root_string_p(const RootVec& beta, const RootVec& alpha) const {
        if (!is_root(beta) || !is_root(alpha)) throw std::invalid_argument("root_string_p: non-root input");
        long long p = 0;
        RootVec v = beta - alpha;
        while (is_root(v)) {
            ++p;
            v = v - alpha;
        }
        return p;
    }

    static std::string coeff_string(const RootVec& v) {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << ")";
        return os.str();
    }

private:
    CartanDatum datum_;
    std::vector<RootVec> roots_;
    std::map<RootVec, int> index_;
};

// Display coordinates: twice the epsilon-coordinates of each simple root, so
// all entries stay integral (F4 uses half-integers).  Dimension of the
// ambient space depends on the type.
inline std::vector<IntVec> epsilon_basis_x2(const CartanDatum& cd) {
    const int n = cd.rank;
    std::vector<IntVec> a;
    auto unit = [](int dim, int i, int c) {
        IntVec v(dim, 0);
        v[i] = c;
        return v;
    };
    switch (cd.type) {
        case Type::A: {
            for (int i = 0; i < n; ++i) {
                IntVec v(n + 1, 0);
                v[i] = 2; v[i + 1] = -2;
                a.push_back(v);
            }
            break;
        }
        case Type::B: {
            for (int i = 0; i + 1 < n; ++i) {
                IntVec v(n, 0);
                v[i] = 2; v[i + 1] = -2;
                a.push_back(v);
            }
            a.push_back(unit(n, n - 1, 2));
            break;
        }
        case Type::C: {
            for (int i = 0; i + 1 < n; ++i) {
                IntVec v(n, 0);
                v[i] = 2; v[i + 1] = -2;
                a.push_back(v);
            }
            a.push_back(unit(n, n - 1, 4));
            break;
        }
        case Type::D: {
            for (int i = 0; i + 1 < n; ++i) {
                IntVec v(n, 0);
                v[i] = 2; v[i + 1] = -2;
                a.push_back(v);
            }
            IntVec v(n, 0);
            v[n - 2] = 2; v[n - 1] = 2;
            a.push_back(v);
            break;
        }
        case Type::F: {
            a.push_back(IntVec{0, 2, -2, 0});
            a.push_back(IntVec{0, 0, 2, -2});
            a.push_back(IntVec{0, 0, 0, 2});
            a.push_back(IntVec{1, -1, -1, -1});
            break;
        }
        case Type::G: {
            a.push_back(IntVec{0, 2, -2});
            a.push_back(IntVec{2, -4, 2});
            break;
        }
        case Type::E:
            return {}; // no epsilon display convention; coefficient form is used
    }
    return a;
}

inline IntVec epsilon_coords_x2(const CartanDatum& cd, const RootVec& v) {
    auto basis = epsilon_basis_x2(cd);
    if (basis.empty()) return {};
    IntVec e(basis[0].size(), 0);
    for (int i = 0; i < cd.rank; ++i)
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += v[i] * basis[i][k];
    return e;
}

// Human-readable label: segments [a,b] in type A, <a,+-b> style for BCD,
// epsilon tuples for F4/G2, coefficient string for E types.
inline std::string epsilon_label(const CartanDatum& cd, const RootVec& v) {
    IntVec e = epsilon_coords_x2(cd, v);
    auto half = [](long long x) {
        if (x % 2 == 0) return std::to_string(x / 2);
        return std::to_string(x) + "/2";
    };
    switch (cd.type) {
        case Type::A: {
            int a = -1, b = -1;
            for (int i = 0; i < cd.rank; ++i)
                if (v[i] != 0) {
                    if (a < 0) a = i;
                    b = i;
                }
            if (a == b) return "[" + std::to_string(a + 1) + "]";
            return "[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]";
        }
        case Type::B:
        case Type::C:
        case Type::D: {
            std::vector<std::pair<int, long long>> comp; // (index, +-1 or 2)
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k] != 0) comp.emplace_back(static_cast<int>(k) + 1, e[k] / 2);
            if (comp.size() == 1) {
                if (comp[0].second == 2) // type C long root 2e_i
                    return "<" + std::to_string(comp[0].first) + "," + std::to_string(comp[0].first) + ">";
                return "<" + std::to_string(comp[0].first) + ">";
            }
            const auto& [i, ci] = comp[0];
            const auto& [j, cj] = comp[1];
            return "<" + std::to_string(i) + "," + (cj > 0 ? "" : "-") + std::to_string(j) + ">";
        }
        case Type::F:
        case Type::G: {
            std::string s = "<";
            for (std::size_t k = 0; k < e.size(); ++k) s += (k ? "," : "") + half(e[k]);
            return s + ">";
        }
        case Type::E:
            return RootSystem::coeff_string(v);
    }
    return RootSystem::coeff_string(v);
}

// Inverse of epsilon_coords_x2: solve the basis expansion exactly. Requires
// the type to have a square epsilon basis (B, C, D, F, G).
inline RootVec root_from_eps_x2(const CartanDatum& cd, const IntVec& e) {
    auto basis = epsilon_basis_x2(cd);
    const int n = cd.rank;
    if (basis.empty() || basis[0].size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("root_from_eps_x2: no square epsilon basis for " + cd.name());
    RatMat mat(n, RatVec(n, Rat(0)));
    for (int col = 0; col < n; ++col)
        for (int row = 0; row < n; ++row) mat[row][col] = Rat(basis[col][row]);
    RatVec rhs(n, Rat(0));
    for (int row = 0; row < n; ++row) rhs[row] = Rat(e[row]);
    RatVec x = rat_solve(mat, rhs);
    RootVec out(n);
    for (int i = 0; i < n; ++i) out[i] = as_integer(x[i]);
    return out;
}

// Inverse of epsilon_label on positive roots.
inline RootVec root_from_label(const RootSystem& rs, const std::string& label) {
    for (const RootVec& v : rs.positive())
        if (epsilon_label(rs.datum(), v) == label || RootSystem::coeff_string(v) == label) return v;
    throw std::invalid_argument("unknown root label: " + label);
}

} // namespace arq
