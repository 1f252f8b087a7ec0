#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "arq/roots.hpp"

namespace arq {

// A word in the simple reflections, 0-based letters.
using Word = std::vector<int>;

// s_i acting on a vector in simple-root coordinates.
inline void reflect_root_coords(const CartanDatum& cd, int i, RootVec& v) {
    long long pair_i = 0;
    for (int j = 0; j < cd.rank; ++j) pair_i += cd.cartan[i][j] * v[j];
    v[i] -= pair_i;
}

// s_i acting on a vector in fundamental-weight coordinates
// (m_k = <h_k, lambda>); alpha_i has weight coordinates c_{k,i}.
inline void reflect_weight_coords(const CartanDatum& cd, int i, IntVec& m) {
    const long long mi = m[i];
    if (mi == 0) return;
    for (int k = 0; k < cd.rank; ++k) m[k] -= mi * cd.cartan[k][i];
}

// Left action s_{i_1} ... s_{i_l}(v), applied right to left.
inline RootVec apply_word(const CartanDatum& cd, const Word& w, RootVec v) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) reflect_root_coords(cd, *it, v);
    return v;
}

inline IntVec apply_word_weight(const CartanDatum& cd, const Word& w, IntVec m) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) reflect_weight_coords(cd, *it, m);
    return m;
}

// weight coordinates -> root coordinates, exact; the result must lie in the
// root lattice.
inline RootVec weight_to_root_coords(const CartanDatum& cd, const IntVec& m) {
    RatMat c = to_rat(cd.cartan);
    RatVec rhs(m.begin(), m.end());
    // m_k = sum_j c_{k,j} x_j
    RatVec x = rat_solve(c, rhs);
    RootVec out(cd.rank);
    for (int i = 0; i < cd.rank; ++i) out[i] = as_integer(x[i]);
    return out;
}

// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}); for a reduced word these are
// distinct positive roots.
inline std::vector<RootVec> beta_sequence(const CartanDatum& cd, const Word& w) {
    std::vector<RootVec> out;
    out.reserve(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        Word prefix(w.begin(), w.begin() + static_cast<long>(k));
        out.push_back(apply_word(cd, prefix, simple_root(cd.rank, w[k])));
    }
    return out;
}

inline bool is_reduced(const CartanDatum& cd, const Word& w) {
    // w is reduced iff every beta_k is positive
    for (const RootVec& b : beta_sequence(cd, w))
        if (height(b) <= 0) return false;
    return true;
}

// action of the word on all simple roots, as the matrix w(alpha_j) in root
// coordinates; equality of group elements is equality of these matrices.
inline std::vector<RootVec> word_action(const CartanDatum& cd, const Word& w) {
    std::vector<RootVec> cols;
    for (int j = 0; j < cd.rank; ++j) cols.push_back(apply_word(cd, w, simple_root(cd.rank, j)));
    return cols;
}

inline bool same_element(const CartanDatum& cd, const Word& a, const Word& b) {
    return word_action(cd, a) == word_action(cd, b);
}

struct LongestElement {
    Word word;
    std::vector<int> star; // i -> i* with w0(alpha_i) = -alpha_{i*}
};

// Greedy construction of a reduced word for w0: extend on the right by any
// s_i with w(alpha_i) > 0. Also derives the * involution and checks it
// against the classical table baked into the datum.
inline LongestElement longest_element(const CartanDatum& cd) {
    std::vector<RootVec> act = word_action(cd, {});
    Word w;
    const long long len = cd.positive_root_count();
    auto positive_at = [&](int i) { return height(act[i]) > 0; };
    for (long long step = 0; step < len; ++step) {
        int pick = -1;
        for (int i = 0; i < cd.rank; ++i)
            if (positive_at(i)) { pick = i; break; }
        if (pick < 0) throw std::runtime_error("longest_element: stuck before full length");
        w.push_back(pick);
        // right multiplication: w' (alpha_k) = w(alpha_k) - c_{pick,k} w(alpha_pick)
        std::vector<RootVec> next = act;
        for (int k = 0; k < cd.rank; ++k)
            for (int r = 0; r < cd.rank; ++r) next[k][r] -= cd.cartan[pick][k] * act[pick][r];
        act = std::move(next);
    }
    for (int i = 0; i < cd.rank; ++i)
        if (positive_at(i)) throw std::runtime_error("longest_element: not w0 after full length");

    LongestElement out;
    out.word = std::move(w);
    out.star.assign(cd.rank, -1);
    for (int i = 0; i < cd.rank; ++i) {
        RootVec neg = act[i];
        for (auto& x : neg) x = -x;
        for (int j = 0; j < cd.rank; ++j)
            if (neg == simple_root(cd.rank, j)) out.star[i] = j;
        if (out.star[i] < 0) throw std::runtime_error("w0 does not permute the simple roots");
    }
    if (out.star != cd.star)
        throw std::runtime_error("star involution from w0 disagrees with the classical table for " + cd.name());
    return out;
}

// ---------------------------------------------------------------------------
// The quiver Upsilon(word) on Phi+: (-<h_{i_k}, alpha_{i_l}>)-many arrows
// beta_k -> beta_l for l < k with no letter from {i_k, i_l} strictly between.
// Commutation-equivalent words give the same quiver.
struct Upsilon {
    std::vector<RootVec> vertices;          // all positive roots (system order)
    std::map<std::pair<int, int>, int> arrows; // (from,to) -> multiplicity, root indices

    bool operator==(const Upsilon& o) const { return arrows == o.arrows; }
};

inline Upsilon upsilon_quiver(const RootSystem& rs, const Word& w) {
    const CartanDatum& cd = rs.datum();
    if (!is_reduced(cd, w) || static_cast<long long>(w.size()) != cd.positive_root_count())
        throw std::invalid_argument("upsilon_quiver: not a reduced word of w0");
    std::vector<RootVec> betas = beta_sequence(cd, w);
    Upsilon u;
    u.vertices = rs.positive();
    const int l = static_cast<int>(w.size());
    for (int k = 0; k < l; ++k)
        for (int j = k - 1; j >= 0; --j) {
            if (w[j] == w[k]) break;
            if (!cd.adjacent(w[j], w[k])) continue;
            bool blocked = false;
            for (int t = j + 1; t < k && !blocked; ++t) blocked = (w[t] == w[j] || w[t] == w[k]);
            if (blocked) continue;
            int mult = static_cast<int>(-cd.cartan[w[k]][w[j]]);
            u.arrows[{rs.index_of(betas[k]), rs.index_of(betas[j])}] = mult;
        }
    return u;
}

inline bool commutation_equivalent(const RootSystem& rs, const Word& a, const Word& b) {
    const CartanDatum& cd = rs.datum();
    if (!is_reduced(cd, a) || !is_reduced(cd, b)) throw std::invalid_argument("words must be reduced");
    if (!same_element(cd, a, b)) throw std::invalid_argument("words are not the same group element");
    return upsilon_quiver(rs, a) == upsilon_quiver(rs, b);
}

// All reduced words of w0, by DFS over prefixes; oracle use only (rank <= 3
// stays small, larger ranks explode combinatorially).
inline std::vector<Word> all_reduced_words_w0(const CartanDatum& cd) {
    if (cd.rank > 3) throw std::invalid_argument("all_reduced_words_w0 capped at rank 3");
    const long long len = cd.positive_root_count();
    std::vector<Word> out;
    Word cur;
    auto dfs = [&](auto&& self, const std::vector<RootVec>& act) -> void {
        if (static_cast<long long>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (int i = 0; i < cd.rank; ++i) {
            if (height(act[i]) <= 0) continue;
            std::vector<RootVec> next = act;
            for (int k = 0; k < cd.rank; ++k)
                for (int r = 0; r < cd.rank; ++r) next[k][r] -= cd.cartan[i][k] * act[i][r];
            cur.push_back(i);
            self(self, next);
            cur.pop_back();
        }
    };
    dfs(dfs, word_action(cd, {}));
    return out;
}

// Partition reduced words of w0 into commutation classes (oracle use).
inline std::vector<std::vector<Word>> commutation_classes_w0(const RootSystem& rs) {
    std::vector<Word> words = all_reduced_words_w0(rs.datum());
    std::map<std::string, std::vector<Word>> by_quiver;
    for (const Word& w : words) {
        Upsilon u = upsilon_quiver(rs, w);
        std::string key;
        for (const auto& [e, m] : u.arrows)
            key += std::to_string(e.first) + ">" + std::to_string(e.second) + "x" + std::to_string(m) + ";";
        by_quiver[key].push_back(w);
    }
    std::vector<std::vector<Word>> out;
    out.reserve(by_quiver.size());
    for (auto& [k, v] : by_quiver) out.push_back(std::move(v));
    return out;
}

inline std::string word_string(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i] + 1);
    return s;
}

} // namespace arq
