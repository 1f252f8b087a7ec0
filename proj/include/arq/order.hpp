#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "arq/arquiver.hpp"

namespace arq {

// Multiplicity vector over Phi+ (root index -> positive multiplicity).
struct ExponentVector {
    std::map<int, int> terms;

    bool operator==(const ExponentVector& o) const { return terms == o.terms; }
    bool operator<(const ExponentVector& o) const { return terms < o.terms; }

    int mult(int root) const {
        auto it = terms.find(root);
        return it == terms.end() ? 0 : it->second;
    }

    void add(int root, int m) {
        if (m == 0) return;
        int& v = terms[root];
        v += m;
        if (v == 0) terms.erase(root);
    }

    static ExponentVector single(int root, int mult = 1) {
        ExponentVector m;
        m.add(root, mult);
        return m;
    }

    static ExponentVector pair(int alpha, int beta) {
        ExponentVector m;
        m.add(alpha, 1);
        m.add(beta, 1);
        return m;
    }
};

inline RootVec weight_of(const RootSystem& rs, const ExponentVector& m) {
    RootVec w(rs.datum().rank, 0);
    for (const auto& [root, mult] : m.terms)
        for (int i = 0; i < rs.datum().rank; ++i) w[i] += mult * rs[root][i];
    return w;
}

// Formal-sum rendering: "2<1> + <3,4>"
inline std::string exponent_string(const RootSystem& rs, const ExponentVector& m) {
    if (m.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [root, mult] : m.terms) {
        if (!first) os << " + ";
        first = false;
        if (mult != 1) os << mult;
        os << epsilon_label(rs.datum(), rs[root]);
    }
    return os.str();
}

struct EnumerationBudgetExceeded : std::runtime_error {
    long long count;
    explicit EnumerationBudgetExceeded(long long c)
        : std::runtime_error("exponent vector enumeration exceeded the budget at " +
                             std::to_string(c) + " vectors"),
          count(c) {}
};

// All m with wt(m) = weight and support inside `allowed` (all roots when
// empty); hard cap guards against combinatorial blowup.
inline std::vector<ExponentVector> enumerate_exponent_vectors(
    const RootSystem& rs, const RootVec& weight, const std::vector<int>& allowed = {},
    long long cap = 5'000'000) {
    std::vector<int> roots = allowed;
    if (roots.empty()) {
        roots.resize(rs.size());
        for (int k = 0; k < rs.size(); ++k) roots[k] = k;
    }
    // big roots first keeps the search tree shallow
    std::sort(roots.begin(), roots.end(), [&](int a, int b) {
        return height(rs[a]) != height(rs[b]) ? height(rs[a]) > height(rs[b]) : a < b;
    });
    std::vector<ExponentVector> out;
    ExponentVector cur;
    long long visited = 0;
    auto dfs = [&](auto&& self, std::size_t idx, RootVec rem) -> void {
        if (height(rem) == 0) {
            if (++visited > cap) throw EnumerationBudgetExceeded(visited);
            out.push_back(cur);
            return;
        }
        if (idx == roots.size()) return;
        const RootVec& r = rs[roots[idx]];
        long long max_mult = std::numeric_limits<long long>::max();
        for (int i = 0; i < rs.datum().rank; ++i)
            if (r[i] > 0) max_mult = std::min(max_mult, rem[i] / r[i]);
        for (long long m = max_mult; m >= 0; --m) {
            RootVec next = rem;
            bool ok = true;
            for (int i = 0; i < rs.datum().rank; ++i) {
                next[i] -= m * r[i];
                if (next[i] < 0) ok = false;
            }
            if (!ok) continue;
            if (m > 0) cur.add(roots[idx], static_cast<int>(m));
            self(self, idx + 1, next);
            if (m > 0) cur.add(roots[idx], static_cast<int>(-m));
        }
    };
    RootVec w = weight;
    for (auto x : w)
        if (x < 0) return {};
    dfs(dfs, 0, w);
    std::sort(out.begin(), out.end());
    return out;
}

// Class-wide bi-lexicographic comparison from any strict order on roots:
// every minimal and every maximal element of the disagreement set must
// favor m. Equivalent to m <^b_{w0} m' for every linear extension.
template <class StrictLess>
bool bilex_less_by(const RootSystem& rs, StrictLess&& strictly_less, const ExponentVector& m,
                   const ExponentVector& mp) {
    if (weight_of(rs, m) != weight_of(rs, mp))
        throw std::invalid_argument("bilex_less: weight mismatch");
    std::vector<int> diff;
    for (const auto& [r, c] : m.terms)
        if (mp.mult(r) != c) diff.push_back(r);
    for (const auto& [r, c] : mp.terms)
        if (m.mult(r) == 0 && c != 0) diff.push_back(r);
    std::sort(diff.begin(), diff.end());
    diff.erase(std::unique(diff.begin(), diff.end()), diff.end());
    if (diff.empty()) return false;
    for (int d : diff) {
        bool minimal = true, maximal = true;
        for (int e : diff) {
            if (e == d) continue;
            if (strictly_less(e, d)) minimal = false;
            if (strictly_less(d, e)) maximal = false;
        }
        if ((minimal || maximal) && m.mult(d) >= mp.mult(d)) return false;
    }
    return true;
}

// Reachability order of an Upsilon quiver (any commutation class).
class UpsilonOrder {
public:
    UpsilonOrder(const RootSystem& rs, const Upsilon& u) : rs_(&rs) {
        const int n = rs.size();
        reach_.assign(n, std::vector<bool>(n, false));
        for (int k = 0; k < n; ++k) reach_[k][k] = true;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [edge, mult] : u.arrows) {
                auto [from, to] = edge;
                for (int t = 0; t < n; ++t)
                    if (reach_[to][t] && !reach_[from][t]) {
                        reach_[from][t] = true;
                        changed = true;
                    }
            }
        }
    }

    // alpha <= beta iff a path from beta to alpha exists
    bool less_eq(int a, int b) const { return reach_[b][a]; }
    bool strictly_less(int a, int b) const { return a != b && less_eq(a, b); }

    bool bilex_less(const ExponentVector& m, const ExponentVector& mp) const {
        return bilex_less_by(*rs_, [this](int a, int b) { return strictly_less(a, b); }, m, mp);
    }

private:
    const RootSystem* rs_;
    std::vector<std::vector<bool>> reach_;
};

// The convex partial order attached to [Q], with the bi-lexicographic order
// on exponent vectors evaluated through its minimal/maximal disagreements.
class ConvexOrder {
public:
    explicit ConvexOrder(const ARQuiver& g) : g_(&g) { g.reach(); }

    const ARQuiver& gamma_quiver() const { return *g_; }
    const RootSystem& roots() const { return g_->roots(); }

    ARQuiver::Cmp compare(int a, int b) const { return g_->compare(a, b); }
    bool less_eq(int a, int b) const { return g_->less_eq(a, b); }
    bool strictly_less(int a, int b) const { return a != b && g_->less_eq(a, b); }

    // m <^b m' simultaneously for every reduced word in [Q]: every minimal
    // and every maximal element of the disagreement set must favor m.
    bool bilex_less(const ExponentVector& m, const ExponentVector& mp) const {
        return bilex_less_by(roots(), [this](int a, int b) { return strictly_less(a, b); }, m, mp);
    }

    bool bilex_less_eq(const ExponentVector& m, const ExponentVector& mp) const {
        return m == mp || bilex_less(m, mp);
    }

    // Support closure used to keep enumerations small: everything weakly
    // between two support elements.
    std::vector<int> support_interval(const ExponentVector& m) const {
        std::vector<int> supp;
        for (const auto& [r, c] : m.terms) supp.push_back(r);
        std::vector<int> out;
        for (int d = 0; d < roots().size(); ++d) {
            bool above = false, below = false;
            for (int s : supp) {
                if (less_eq(s, d)) above = true;
                if (less_eq(d, s)) below = true;
            }
            if (above && below) out.push_back(d);
        }
        return out;
    }

    // Downward cone { v : v <=^b m } (m included); every chain below m stays
    // inside the support interval, so the enumeration is restricted to it.
    std::vector<ExponentVector> cone(const ExponentVector& m, long long cap = 5'000'000) const {
        auto all = enumerate_exponent_vectors(roots(), weight_of(roots(), m),
                                              support_interval(m), cap);
        std::vector<ExponentVector> out;
        for (auto& v : all)
            if (bilex_less_eq(v, m)) out.push_back(std::move(v));
        return out;
    }

    bool is_simple(const ExponentVector& m) const { return cone(m).size() == 1; }

    // Longest chain m(0) <^b ... <^b m(k) = m.
    int deg(const ExponentVector& m) const {
        {
            std::lock_guard<std::mutex> lock(memo_mutex_);
            auto it = deg_memo_.find(m);
            if (it != deg_memo_.end()) return it->second;
        }
        auto c = cone(m);
        // longest-path over the cone; iterate to a fixed point (cones are tiny)
        std::vector<int> len(c.size(), 0);
        int result = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t x = 0; x < c.size(); ++x)
                for (std::size_t y = 0; y < c.size(); ++y) {
                    if (x == y || !bilex_less(c[y], c[x])) continue;
                    if (len[x] < len[y] + 1) {
                        len[x] = len[y] + 1;
                        changed = true;
                    }
                }
        }
        for (std::size_t x = 0; x < c.size(); ++x)
            if (c[x] == m) result = len[x];
        {
            std::lock_guard<std::mutex> lock(memo_mutex_);
            deg_memo_.emplace(m, result);
        }
        return result;
    }

    // The unique simple vector below a pair, when unique.
    struct HeadUndefined : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    ExponentVector head(const ExponentVector& p) const {
        auto c = cone(p);
        std::vector<ExponentVector> simples;
        for (const auto& v : c) {
            bool minimal = true;
            for (const auto& w : c)
                if (!(w == v) && bilex_less(w, v)) minimal = false;
            if (minimal) simples.push_back(v);
        }
        if (simples.size() != 1)
            throw HeadUndefined("head undefined: " + std::to_string(simples.size()) +
                                " simple vectors below the pair");
        return simples[0];
    }

    // [Q]-minimal pairs for gamma: covers of gamma of the form <alpha,beta>
    // with alpha + beta = gamma.
    std::vector<std::pair<int, int>> minimal_pairs(int gamma_root) const {
        const RootSystem& rs = roots();
        std::vector<std::pair<int, int>> out;
        ExponentVector g = ExponentVector::single(gamma_root);
        for (int a = 0; a < rs.size(); ++a) {
            RootVec rest = rs[gamma_root] - rs[a];
            if (height(rest) <= 0) continue;
            auto b = rs.try_index(rest);
            if (!b || *b < a) continue;
            if (*b == a) continue;
            ExponentVector p = ExponentVector::pair(a, *b);
            if (!bilex_less(g, p)) continue;
            // cover test: nothing strictly between gamma and the pair
            bool covered = false;
            for (const auto& v : cone(p)) {
                if (v == p || v == g) continue;
                if (bilex_less(g, v)) covered = true;
            }
            if (!covered) out.push_back({a, *b});
        }
        return out;
    }

private:
    const ARQuiver* g_;
    mutable std::mutex memo_mutex_;
    mutable std::map<ExponentVector, int> deg_memo_;
};

// ---------------------------------------------------------------------------
// Literal evaluation of the bi-lexicographic order, quantifying over every
// reduced word of a commutation class; oracle for small ranks.

inline bool bilex_less_literal(const RootSystem& rs, const std::vector<Word>& cls,
                               const ExponentVector& m, const ExponentVector& mp) {
    if (weight_of(rs, m) != weight_of(rs, mp)) throw std::invalid_argument("weight mismatch");
    if (m == mp) return false;
    for (const Word& w : cls) {
        auto betas = beta_sequence(rs.datum(), w);
        // positions along <_{w0}
        std::vector<int> mv, mpv;
        for (const auto& b : betas) {
            int r = rs.index_of(b);
            mv.push_back(m.mult(r));
            mpv.push_back(mp.mult(r));
        }
        int lo = -1, hi = -1;
        for (std::size_t k = 0; k < mv.size(); ++k)
            if (mv[k] != mpv[k]) {
                if (lo < 0) lo = static_cast<int>(k);
                hi = static_cast<int>(k);
            }
        if (lo < 0) return false;
        if (!(mv[lo] < mpv[lo] && mv[hi] < mpv[hi])) return false;
    }
    return true;
}

// The commutation class of [Q] among all classes of w0 (rank <= 3 only).
inline std::vector<Word> adapted_class(const RootSystem& rs, const DynkinQuiver& q) {
    Word adapted = adapted_reduced_word(q);
    Upsilon target = upsilon_quiver(rs, adapted);
    for (auto& cls : commutation_classes_w0(rs)) {
        if (upsilon_quiver(rs, cls.front()) == target) return cls;
    }
    throw std::runtime_error("adapted class not found");
}

} // namespace arq
