#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "arq/quiver.hpp"

namespace arq {

struct Coord {
    int i = 0; // residue (row), 0-based
    int p = 0; // column
    friend bool operator<(const Coord& a, const Coord& b) { return std::tie(a.i, a.p) < std::tie(b.i, b.p); }
    friend bool operator==(const Coord& a, const Coord& b) { return a.i == b.i && a.p == b.p; }
};

// phi_Q(i,p) = (beta, u) with beta a positive root: the bijection between
// the repetition quiver and Phi+ x Z. Anchored at phi(i, xi_i) = (gamma_i, 0)
// and walked by tau_Q^{+-1}, bumping u whenever the walk crosses into the
// negative roots.
struct PhiValue {
    RootVec root;
    long long u = 0;
};

inline PhiValue phi(const DynkinQuiver& q, int i, int p) {
    const CartanDatum& cd = q.datum;
    if (((p - q.xi[i]) % 2 + 2) % 2 != 0)
        throw std::invalid_argument("phi: (i,p) violates the repetition-quiver parity");
    Word tau = coxeter_element(q);
    Word tau_inv(tau.rbegin(), tau.rend());
    const int steps = (q.xi[i] - p) / 2;
    const Word& dir = steps >= 0 ? tau : tau_inv;
    const long long delta = steps >= 0 ? 1 : -1;
    RootVec beta = gamma(q, i);
    long long u = 0;
    for (int k = 0; k < std::abs(steps); ++k) {
        RootVec next = apply_word(cd, dir, beta);
        if (height(next) <= 0) {
            for (auto& x : next) x = -x;
            u += delta;
        }
        beta = std::move(next);
    }
    return PhiValue{beta, u};
}

// The finite AR-quiver Gamma_Q: vertices (i,p) with xi_i >= p > xi_{i*} - h,
// labeled bijectively by Phi+, with (-<h_i,alpha_j>)-many arrows
// (i,p) -> (j,p+1).
class ARQuiver {
public:
    struct Vertex {
        Coord at;
        int root = -1; // index into the root system
    };
    struct Arrow {
        Coord from, to;
        int mult = 1;
    };

    ARQuiver(const DynkinQuiver& q, const RootSystem& rs) : q_(q), rs_(&rs) {
        const CartanDatum& cd = q.datum;
        Word tau = coxeter_element(q);
        for (int i = 0; i < cd.rank; ++i) {
            const int top = q.xi[i];
            const int bottom = q.xi[cd.star[i]] - cd.h; // exclusive
            RootVec beta = gamma(q, i);
            for (int p = top; p > bottom; p -= 2) {
                Vertex v;
                v.at = {i, p};
                v.root = rs.index_of(beta);
                vertices_.push_back(v);
                if (p - 2 > bottom) {
                    beta = apply_word(cd, tau, beta);
                    if (height(beta) <= 0)
                        throw std::runtime_error("Gamma_Q walk left Phi+ inside the window of " + q.name());
                }
            }
        }
        std::sort(vertices_.begin(), vertices_.end(),
                  [](const Vertex& a, const Vertex& b) { return a.at < b.at; });
        for (std::size_t k = 0; k < vertices_.size(); ++k) {
            by_coord_[vertices_[k].at] = static_cast<int>(k);
            if (root_coord_.count(vertices_[k].root))
                throw std::runtime_error("Gamma_Q labels are not distinct");
            root_coord_[vertices_[k].root] = vertices_[k].at;
        }
        if (vertices_.size() != static_cast<std::size_t>(rs.size()))
            throw std::runtime_error("Gamma_Q does not exhaust Phi+");
        for (const Vertex& v : vertices_)
            for (int j = 0; j < cd.rank; ++j) {
                if (!cd.adjacent(v.at.i, j)) continue;
                Coord to{j, v.at.p + 1};
                if (by_coord_.count(to))
                    arrows_.push_back(Arrow{v.at, to, static_cast<int>(-cd.cartan[v.at.i][j])});
            }
        std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) {
            return std::tie(a.from, a.to) < std::tie(b.from, b.to);
        });
    }

    const DynkinQuiver& quiver() const { return q_; }
    const RootSystem& roots() const { return *rs_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool has_coord(Coord c) const { return by_coord_.count(c) != 0; }

    int root_at(Coord c) const {
        auto it = by_coord_.find(c);
        if (it == by_coord_.end())
            throw std::invalid_argument("no Gamma_Q vertex at (" + std::to_string(c.i + 1) + "," +
                                        std::to_string(c.p) + ")");
        return vertices_[it->second].root;
    }

    Coord coord_of(int root) const {
        auto it = root_coord_.find(root);
        if (it == root_coord_.end()) throw std::invalid_argument("root has no Gamma_Q coordinate");
        return it->second;
    }

    // residue of a root: the row of its Q-coordinate
    int residue(int root) const { return coord_of(root).i; }

    int column_count(int i) const {
        const CartanDatum& cd = q_.datum;
        return (cd.h + q_.xi[i] - q_.xi[cd.star[i]]) / 2;
    }

    // reachability: less_eq(a, b) iff a = b or there is a path from b to a
    const std::vector<std::vector<bool>>& reach() const {
        if (reach_.empty()) {
            const int n = rs_->size();
            reach_.assign(n, std::vector<bool>(n, false));
            for (int k = 0; k < n; ++k) reach_[k][k] = true;
            // process vertices by decreasing column: arrows go p -> p+1
            std::vector<int> order(vertices_.size());
            for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return vertices_[a].at.p > vertices_[b].at.p;
            });
            // reach_[b][a] true iff path from b to a; propagate backwards
            for (int idx : order) {
                const Vertex& v = vertices_[idx];
                for (const Arrow& ar : arrows_) {
                    if (!(ar.from == v.at)) continue;
                    int from = v.root, to = root_at(ar.to);
                    for (int t = 0; t < n; ++t)
                        if (reach_[to][t]) reach_[from][t] = true;
                }
            }
        }
        return reach_;
    }

    // alpha <=_Q beta iff there is a path from beta's vertex to alpha's
    bool less_eq(int a, int b) const { return reach()[b][a]; }

    enum class Cmp { Less, Greater, Incomparable, Equal };
    Cmp compare(int a, int b) const {
        if (a == b) return Cmp::Equal;
        if (less_eq(a, b)) return Cmp::Less;
        if (less_eq(b, a)) return Cmp::Greater;
        return Cmp::Incomparable;
    }

    // sectional pair test: coordinates (i,p),(j,s) with d(i,j) = p - s
    bool sectional(Coord a, Coord b) const {
        return q_.datum.dist(a.i, b.i) == a.p - b.p;
    }

private:
    DynkinQuiver q_;
    const RootSystem* rs_;
    std::vector<Vertex> vertices_;
    std::vector<Arrow> arrows_;
    std::map<Coord, int> by_coord_;
    std::map<int, Coord> root_coord_;
    mutable std::vector<std::vector<bool>> reach_;
};

// Gamma_{s_iQ} from Gamma_Q by the reflection rule: beta sits at the old
// position of s_i(beta); alpha_i moves from (i, xi_i) to (i*, xi_i - h).
inline ARQuiver reflect_ar(const ARQuiver& g, int i) {
    const DynkinQuiver& q = g.quiver();
    DynkinQuiver rq = reflect(q, i);
    ARQuiver out(rq, g.roots());
    // verify the combinatorial description
    const RootSystem& rs = g.roots();
    RootVec alpha_i = simple_root(q.datum.rank, i);
    for (const auto& v : g.vertices()) {
        RootVec beta = rs[v.root];
        if (beta == alpha_i) continue;
        RootVec im = beta;
        reflect_root_coords(q.datum, i, im);
        if (out.root_at(v.at) != rs.index_of(im))
            throw std::runtime_error("reflect_ar: labels disagree with the reflection rule");
    }
    Coord moved{q.datum.star[i], q.xi[i] - q.datum.h};
    if (out.root_at(moved) != rs.index_of(alpha_i))
        throw std::runtime_error("reflect_ar: alpha_i did not move to (i*, xi_i - h)");
    return out;
}

// ---------------------------------------------------------------------------
// Alternative labelings (computed without running phi), per type.

enum class LabelMethod { Phi, Paths, Swings, Surgery, Transpose, Fold };

namespace detail {

// Maximal sectional chains following downward (residue-increasing) or upward
// arrows, one root row at a time.  Returns chains as coordinate lists.
inline std::vector<std::vector<Coord>> maximal_chains(const ARQuiver& g, bool downward,
                                                      int stop_row /* rows >= stop_row excluded */) {
    // For chain purposes each step moves to the adjacent row in the chain
    // direction; branch rows (D-type horns) are handled by the callers.
    const CartanDatum& cd = g.quiver().datum;
    auto next_row = [&](int i) {
        int want = downward ? i + 1 : i - 1;
        return (want >= 0 && want < cd.rank && cd.adjacent(i, want)) ? want : -1;
    };
    std::vector<std::vector<Coord>> chains;
    for (const auto& v : g.vertices()) {
        if (v.at.i >= stop_row) continue;
        // chain start: no predecessor inside the allowed rows
        int prev = downward ? v.at.i - 1 : v.at.i + 1;
        bool has_prev = prev >= 0 && prev < cd.rank && prev < stop_row && cd.adjacent(v.at.i, prev) &&
                        g.has_coord({prev, v.at.p - 1});
        if (has_prev) continue;
        std::vector<Coord> chain{v.at};
        Coord cur = v.at;
        while (true) {
            int nr = next_row(cur.i);
            if (nr < 0 || nr >= stop_row || !g.has_coord({nr, cur.p + 1})) break;
            cur = {nr, cur.p + 1};
            chain.push_back(cur);
        }
        chains.push_back(std::move(chain));
    }
    return chains;
}

} // namespace detail

// Type A labeling by N- and S-paths: the maximal upward path with (rank+1-a)
// vertices carries first component a; the maximal downward path with b
// vertices carries second component b; the label of a vertex is the segment
// [a, b] cut out by its two paths.
inline std::map<Coord, RootVec> label_a_paths(const ARQuiver& g) {
    const CartanDatum& cd = g.quiver().datum;
    if (cd.type != Type::A) throw std::invalid_argument("paths labeling needs type A");
    const int n = cd.rank;
    std::map<Coord, int> first, second;
    for (const auto& chain : detail::maximal_chains(g, false, n)) { // upward: N-paths
        int a = n + 1 - static_cast<int>(chain.size());
        for (Coord c : chain) first[c] = a;
    }
    for (const auto& chain : detail::maximal_chains(g, true, n)) { // downward: S-paths
        int b = static_cast<int>(chain.size());
        for (Coord c : chain) second[c] = b;
    }
    std::map<Coord, RootVec> out;
    for (const auto& v : g.vertices()) {
        int a = first.at(v.at), b = second.at(v.at);
        if (a > b) throw std::runtime_error("paths labeling produced an empty segment");
        RootVec r(n, 0);
        for (int k = a - 1; k < b; ++k) r[k] = 1;
        out[v.at] = r;
    }
    return out;
}

namespace detail {

// D-type swing through the spin pair at columns u: S-part ending at
// (n-1, u-1), the two spin vertices, N-part from (n-1, u+1).
inline std::vector<Coord> d_swing(const ARQuiver& g, int spin_row_a, int spin_row_b, int u) {
    const int chain_top = std::min(spin_row_a, spin_row_b) - 1; // row n-1, 0-based
    std::vector<Coord> s_part;
    for (int row = chain_top, p = u - 1; row >= 0 && g.has_coord({row, p}); --row, --p)
        s_part.push_back({row, p});
    std::reverse(s_part.begin(), s_part.end());
    std::vector<Coord> out = s_part;
    out.push_back({spin_row_a, u});
    out.push_back({spin_row_b, u});
    for (int row = chain_top, p = u + 1; row >= 0 && g.has_coord({row, p}); --row, ++p)
        out.push_back({row, p});
    return out;
}

// B-type swing through the single short row at column u.
inline std::vector<Coord> b_swing(const ARQuiver& g, int short_row, int u) {
    std::vector<Coord> s_part;
    for (int row = short_row - 1, p = u - 1; row >= 0 && g.has_coord({row, p}); --row, --p)
        s_part.push_back({row, p});
    std::reverse(s_part.begin(), s_part.end());
    std::vector<Coord> out = s_part;
    out.push_back({short_row, u});
    for (int row = short_row - 1, p = u + 1; row >= 0 && g.has_coord({row, p}); --row, ++p)
        out.push_back({row, p});
    return out;
}

// Shallow paths for the swing labelings: maximal sectional chains that stay
// strictly inside the chain rows 0..deep_row-1 (never touching the deep rows
// of the swings). A downward chain must not continue into row i+1 at its
// lower end, and an upward chain must not be extendable from row i+1 at its
// upper end; deep rows count as continuations too.
inline std::vector<std::vector<Coord>> shallow_paths(const ARQuiver& g, int deep_row,
                                                     const std::vector<int>& deep_rows) {
    auto occupied = [&](int row, int p) {
        if (row < deep_row) return g.has_coord({row, p});
        bool any = false;
        for (int r : deep_rows) any = any || g.has_coord({r, p});
        return any;
    };
    std::vector<std::vector<Coord>> out;
    // downward chains: (r,p) -> (r+1,p+1) -> ...
    for (const auto& v : g.vertices()) {
        if (v.at.i >= deep_row) continue;
        if (v.at.i > 0 && g.has_coord({v.at.i - 1, v.at.p - 1})) continue; // not a start
        std::vector<Coord> chain{v.at};
        Coord cur = v.at;
        while (cur.i + 1 < deep_row && g.has_coord({cur.i + 1, cur.p + 1})) {
            cur = {cur.i + 1, cur.p + 1};
            chain.push_back(cur);
        }
        if (occupied(cur.i + 1, cur.p + 1)) continue; // continues deeper: not shallow
        out.push_back(std::move(chain));
    }
    // upward chains: (r,p) -> (r-1,p+1) -> ...; start = largest residue end
    for (const auto& v : g.vertices()) {
        if (v.at.i >= deep_row) continue;
        if (occupied(v.at.i + 1, v.at.p - 1)) continue; // extendable upstream: not a shallow start
        std::vector<Coord> chain{v.at};
        Coord cur = v.at;
        while (cur.i - 1 >= 0 && g.has_coord({cur.i - 1, cur.p + 1})) {
            cur = {cur.i - 1, cur.p + 1};
            chain.push_back(cur);
        }
        out.push_back(std::move(chain));
    }
    return out;
}

} // namespace detail

// D-type swing + shallow labeling of a vee-fixed quiver.
inline std::map<Coord, RootVec> label_d_swings(const ARQuiver& g) {
    const CartanDatum& cd = g.quiver().datum;
    const DynkinQuiver& q = g.quiver();
    if (cd.type != Type::D) throw std::invalid_argument("swing labeling needs type D");
    DiagramAutomorphism vee = vee_automorphism(cd);
    if (!is_sigma_fixed(q, vee))
        throw std::invalid_argument("swing labeling needs a vee-fixed quiver");
    const int m = cd.rank;      // D_m, horns m-1, m (1-based)
    const int n = m - 1;        // swings are indexed 1..n, spin rows are n, n+1
    const int rowN = m - 2, rowN1 = m - 1; // 0-based spin rows
    // (1) swings give the positive components; the swing with 2n+1-a vertices
    // carries eps_a.
    std::map<Coord, std::vector<int>> plus;
    std::set<int> seen_a;
    for (int k = 0; k < g.column_count(rowN); ++k) {
        int u = q.xi[rowN] - 2 * k;
        auto swing = detail::d_swing(g, rowN, rowN1, u);
        int a = 2 * n + 1 - static_cast<int>(swing.size());
        if (a < 1 || a > n || !seen_a.insert(a).second)
            throw std::runtime_error("swing sizes do not enumerate 1..n");
        for (Coord c : swing) plus[c].push_back(a);
    }
    // (2) spin rows: second component is +-eps_{n+1}; the anchor sign comes
    // from gamma at the spin rows and alternates with tau along each row.
    std::map<Coord, long long> spin_sign;
    {
        // gamma_{rowN} = eps_a - eps_{n+1}, gamma_{rowN1} = eps_a + eps_{n+1}
        RootVec gN = gamma_by_paths(q, rowN);
        IntVec eN = epsilon_coords_x2(cd, gN);
        long long sN = eN[m - 1] / 2; // -1 or +1
        for (int row : {rowN, rowN1}) {
            long long sign = row == rowN ? sN : -sN;
            for (int k = 0; k < g.column_count(row); ++k) {
                spin_sign[{row, q.xi[row] - 2 * k}] = (k % 2 == 0) ? sign : -sign;
            }
        }
    }
    // (3) shallow paths give -eps_a to the remaining single-component cells;
    // the path with a-1 vertices carries -eps_a.
    std::map<Coord, int> minus;
    {
        std::set<std::vector<Coord>> paths;
        for (auto& chain : detail::shallow_paths(g, rowN, {rowN, rowN1})) {
            std::vector<Coord> key = chain;
            std::sort(key.begin(), key.end());
            paths.insert(key);
        }
        if (static_cast<int>(paths.size()) != n - 1)
            throw std::runtime_error("expected n-1 shallow paths, found " + std::to_string(paths.size()));
        for (const auto& chain : paths) {
            int a = static_cast<int>(chain.size()) + 1;
            for (Coord c : chain) minus[c] = a;
        }
    }
    // assemble: label = eps_a + eps_b, eps_a - eps_b, or eps_a +- eps_{n+1}
    auto eps_pm = [&](int a, int b_signed) {
        IntVec e(m, 0);
        e[a - 1] += 2;
        e[std::abs(b_signed) - 1] += b_signed > 0 ? 2 : -2;
        return root_from_eps_x2(cd, e);
    };
    std::map<Coord, RootVec> out;
    for (const auto& v : g.vertices()) {
        const auto& pl = plus.at(v.at);
        if (pl.size() == 2) {
            int a = std::min(pl[0], pl[1]), b = std::max(pl[0], pl[1]);
            out[v.at] = eps_pm(a, b);
        } else if (v.at.i == rowN || v.at.i == rowN1) {
            out[v.at] = eps_pm(pl[0], static_cast<int>(spin_sign.at(v.at)) * m);
        } else {
            out[v.at] = eps_pm(pl[0], -minus.at(v.at));
        }
    }
    return out;
}

// B-type swing + shallow labeling (any B quiver).
inline std::map<Coord, RootVec> label_b_swings(const ARQuiver& g) {
    const CartanDatum& cd = g.quiver().datum;
    const DynkinQuiver& q = g.quiver();
    if (cd.type != Type::B) throw std::invalid_argument("swing labeling needs type B");
    const int n = cd.rank;
    const int short_row = n - 1; // 0-based
    std::map<Coord, std::vector<int>> plus;
    std::set<int> seen_a;
    for (int k = 0; k < g.column_count(short_row); ++k) {
        int u = q.xi[short_row] - 2 * k;
        auto swing = detail::b_swing(g, short_row, u);
        int a = 2 * n - static_cast<int>(swing.size());
        if (a < 1 || a > n || !seen_a.insert(a).second)
            throw std::runtime_error("swing sizes do not enumerate 1..n");
        for (Coord c : swing) plus[c].push_back(a);
    }
    std::map<Coord, int> minus;
    {
        std::set<std::vector<Coord>> paths;
        for (auto& chain : detail::shallow_paths(g, short_row, {short_row})) {
            std::vector<Coord> key = chain;
            std::sort(key.begin(), key.end());
            paths.insert(key);
        }
        if (static_cast<int>(paths.size()) != n - 1)
            throw std::runtime_error("expected n-1 shallow paths, found " + std::to_string(paths.size()));
        for (const auto& chain : paths) {
            int a = static_cast<int>(chain.size()) + 1;
            for (Coord c : chain) minus[c] = a;
        }
    }
    std::map<Coord, RootVec> out;
    for (const auto& v : g.vertices()) {
        const auto& pl = plus.at(v.at);
        IntVec e(n, 0);
        if (pl.size() == 2) {
            e[pl[0] - 1] += 2;
            e[pl[1] - 1] += 2;
        } else if (v.at.i == short_row) {
            e[pl[0] - 1] += 2; // <a>
        } else {
            e[pl[0] - 1] += 2;
            e[minus.at(v.at) - 1] -= 2;
        }
        out[v.at] = root_from_eps_x2(cd, e);
    }
    return out;
}

// Fold labeling for B/C/F4/G2 from the sigma-fixed simply-laced lift:
// label(i,p) = psi(label of any lift vertex (i', p)), psi(alpha_{i'}) =
// alpha_{sigma_bar(i')} extended linearly.
inline std::map<Coord, RootVec> label_by_fold(const ARQuiver& g) {
    const DynkinQuiver& q = g.quiver();
    DynkinQuiver lift = lift_quiver(q);
    RootSystem lift_rs(lift.datum);
    ARQuiver lift_g(lift, lift_rs);
    QuiverFolding f = quiver_folding(lift.datum, folding_automorphism(lift.datum));
    std::map<Coord, RootVec> out;
    for (const auto& v : lift_g.vertices()) {
        RootVec big = lift_rs[v.root];
        RootVec folded(q.datum.rank, 0);
        for (int k = 0; k < lift.datum.rank; ++k) folded[f.to_target[k]] += big[k];
        Coord c{f.to_target[v.at.i], v.at.p};
        auto it = out.find(c);
        if (it == out.end()) out[c] = folded;
        else if (it->second != folded)
            throw std::runtime_error("fold labeling: orbit vertices disagree");
    }
    return out;
}

// C-type transpose labeling: same grid as the B_n quiver with equal heights;
// replace <i> with <i,i>, i.e. push every B root through the natural
// bijection on epsilon coordinates.
inline std::map<Coord, RootVec> label_c_transpose(const ARQuiver& g) {
    const DynkinQuiver& q = g.quiver();
    if (q.datum.type != Type::C) throw std::invalid_argument("transpose labeling needs type C");
    DynkinQuiver bq = transpose(q);
    RootSystem brs(bq.datum);
    ARQuiver bg(bq, brs);
    const int n = q.datum.rank;
    std::map<Coord, RootVec> out;
    for (const auto& v : bg.vertices()) {
        IntVec e = epsilon_coords_x2(bq.datum, brs[v.root]); // entries +-2 (or one +2)
        // <i> becomes <i,i>: a single component doubles to 2 eps_i
        IntVec ec(n, 0);
        int nonzero = 0;
        for (int k = 0; k < n; ++k) nonzero += e[k] != 0;
        for (int k = 0; k < n; ++k) ec[k] = (nonzero == 1 ? 2 * e[k] : e[k]);
        out[v.at] = root_from_eps_x2(q.datum, ec);
    }
    return out;
}

inline std::map<Coord, RootVec> label_alternative(const ARQuiver& g, LabelMethod method) {
    const Type t = g.quiver().datum.type;
    switch (method) {
        case LabelMethod::Phi: {
            std::map<Coord, RootVec> out;
            for (const auto& v : g.vertices()) out[v.at] = g.roots()[v.root];
            return out;
        }
        case LabelMethod::Paths:
            return label_a_paths(g);
        case LabelMethod::Swings:
            if (t == Type::D) return label_d_swings(g);
            if (t == Type::B) return label_b_swings(g);
            throw std::invalid_argument("swings labeling needs type B or D");
        case LabelMethod::Surgery:
            if (t != Type::B) throw std::invalid_argument("surgery labeling needs type B");
            return label_by_fold(g);
        case LabelMethod::Transpose:
            return label_c_transpose(g);
        case LabelMethod::Fold:
            return label_by_fold(g);
    }
    throw std::invalid_argument("unknown labeling method");
}

// ---------------------------------------------------------------------------
// Exports.

inline std::string export_text(const ARQuiver& g) {
    const CartanDatum& cd = g.quiver().datum;
    int pmin = 0, pmax = 0;
    bool first = true;
    for (const auto& v : g.vertices()) {
        pmin = first ? v.at.p : std::min(pmin, v.at.p);
        pmax = first ? v.at.p : std::max(pmax, v.at.p);
        first = false;
    }
    std::vector<std::vector<std::string>> cells(cd.rank + 1,
                                                std::vector<std::string>(pmax - pmin + 2));
    cells[0][0] = "(i\\p)";
    for (int p = pmin; p <= pmax; ++p) cells[0][p - pmin + 1] = std::to_string(p);
    for (int i = 0; i < cd.rank; ++i) cells[i + 1][0] = std::to_string(i + 1);
    for (const auto& v : g.vertices())
        cells[v.at.i + 1][v.at.p - pmin + 1] = epsilon_label(cd, g.roots()[v.root]);
    std::vector<std::size_t> width(pmax - pmin + 2, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            cell.resize(width[c] + 2, ' ');
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

inline nlohmann::json cartan_to_json(const CartanDatum& cd) {
    std::vector<int> star1;
    for (int s : cd.star) star1.push_back(s + 1);
    return nlohmann::json{{"type", std::string(1, type_char(cd.type))},
                          {"rank", cd.rank},
                          {"cartan", cd.cartan},
                          {"d", cd.d},
                          {"h", cd.h},
                          {"star", star1}};
}

inline nlohmann::json quiver_to_json(const DynkinQuiver& q) {
    return nlohmann::json{{"type", std::string(1, type_char(q.datum.type))},
                          {"rank", q.datum.rank},
                          {"xi", q.xi}};
}

inline DynkinQuiver quiver_from_json(const nlohmann::json& j) {
    CartanDatum cd = build_cartan(j.at("type").get<std::string>().at(0), j.at("rank").get<int>());
    return make_quiver(cd, j.at("xi").get<std::vector<int>>());
}

inline nlohmann::json export_json(const ARQuiver& g) {
    nlohmann::json j;
    j["quiver"] = quiver_to_json(g.quiver());
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices()) {
        j["vertices"].push_back({{"i", v.at.i + 1},
                                 {"p", v.at.p},
                                 {"root", g.roots()[v.root]},
                                 {"label", epsilon_label(g.quiver().datum, g.roots()[v.root])}});
    }
    j["arrows"] = nlohmann::json::array();
    for (const auto& a : g.arrows())
        j["arrows"].push_back({{"from", {a.from.i + 1, a.from.p}},
                               {"to", {a.to.i + 1, a.to.p}},
                               {"mult", a.mult}});
    return j;
}

// Reconstructs the AR-quiver of the serialized Dynkin quiver and checks the
// stored vertices and labels against it.
inline ARQuiver import_json(const nlohmann::json& j, const RootSystem& rs) {
    DynkinQuiver q = quiver_from_json(j.at("quiver"));
    if (q.datum.name() != rs.datum().name()) throw std::invalid_argument("import_json: datum mismatch");
    ARQuiver g(q, rs);
    for (const auto& v : j.at("vertices")) {
        Coord c{v.at("i").get<int>() - 1, v.at("p").get<int>()};
        RootVec r = v.at("root").get<RootVec>();
        if (g.roots()[g.root_at(c)] != r) throw std::invalid_argument("import_json: label mismatch");
    }
    return g;
}

inline std::string export_dot(const ARQuiver& g) {
    const CartanDatum& cd = g.quiver().datum;
    std::ostringstream os;
    os << "digraph gamma_q {\n"
       << "  rankdir=LR;\n"
       << "  node [shape=plaintext];\n";
    for (int i = 0; i < cd.rank; ++i) {
        os << "  subgraph cluster_res" << i + 1 << " {\n"
           << "    label=\"i=" << i + 1 << "\";\n";
        for (const auto& v : g.vertices())
            if (v.at.i == i)
                os << "    \"" << i + 1 << "_" << v.at.p << "\" [label=\""
                   << epsilon_label(cd, g.roots()[v.root]) << "\"];\n";
        os << "  }\n";
    }
    for (const auto& a : g.arrows())
        for (int m = 0; m < a.mult; ++m)
            os << "  \"" << a.from.i + 1 << "_" << a.from.p << "\" -> \"" << a.to.i + 1 << "_"
               << a.to.p << "\";\n";
    os << "}\n";
    return os.str();
}

} // namespace arq
