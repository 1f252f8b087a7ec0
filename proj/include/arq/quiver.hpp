#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "arq/weyl.hpp"

namespace arq {

// Dynkin quiver as (datum, height function): xi_i = xi_j + 1 along each
// arrow i -> j, |xi_i - xi_j| = 1 across every edge.
struct DynkinQuiver {
    CartanDatum datum;
    std::vector<int> xi;

    std::string name() const {
        std::string s = datum.name() + "[";
        for (std::size_t i = 0; i < xi.size(); ++i) s += (i ? "," : "") + std::to_string(xi[i]);
        return s + "]";
    }
};

inline void validate_quiver(const DynkinQuiver& q) {
    if (static_cast<int>(q.xi.size()) != q.datum.rank)
        throw std::invalid_argument("height function has wrong length");
    for (int i = 0; i < q.datum.rank; ++i)
        for (int j = i + 1; j < q.datum.rank; ++j)
            if (q.datum.adjacent(i, j) && std::abs(q.xi[i] - q.xi[j]) != 1)
                throw std::invalid_argument("height function must differ by 1 across edges of " + q.name());
}

inline DynkinQuiver make_quiver(const CartanDatum& cd, std::vector<int> xi) {
    DynkinQuiver q{cd, std::move(xi)};
    validate_quiver(q);
    return q;
}

// Quivers are often compared modulo a global shift of the height function.
inline std::vector<int> normalized_heights(const DynkinQuiver& q) {
    int mn = *std::min_element(q.xi.begin(), q.xi.end());
    std::vector<int> out(q.xi.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = q.xi[i] - mn;
    return out;
}

inline bool same_orientation(const DynkinQuiver& a, const DynkinQuiver& b) {
    return a.datum.name() == b.datum.name() && normalized_heights(a) == normalized_heights(b);
}

inline std::vector<int> sources(const DynkinQuiver& q) {
    std::vector<int> out;
    for (int i = 0; i < q.datum.rank; ++i) {
        bool src = true;
        for (int j = 0; j < q.datum.rank && src; ++j)
            if (q.datum.adjacent(i, j) && q.xi[i] < q.xi[j]) src = false;
        if (src) out.push_back(i);
    }
    return out;
}

inline bool is_source(const DynkinQuiver& q, int i) {
    auto s = sources(q);
    return std::find(s.begin(), s.end(), i) != s.end();
}

inline DynkinQuiver reflect(const DynkinQuiver& q, int i) {
    if (!is_source(q, i))
        throw std::invalid_argument("reflect: " + std::to_string(i + 1) + " is not a source of " + q.name());
    DynkinQuiver r = q;
    r.xi[i] -= 2;
    return r;
}

// The unique Coxeter element adapted to Q, as a word listing every index
// once; built by extracting sources in ascending index order.
inline Word coxeter_element(const DynkinQuiver& q) {
    DynkinQuiver cur = q;
    Word w;
    std::vector<bool> used(q.datum.rank, false);
    for (int step = 0; step < q.datum.rank; ++step) {
        int pick = -1;
        for (int i = 0; i < q.datum.rank && pick < 0; ++i)
            if (!used[i] && is_source(cur, i)) pick = i;
        if (pick < 0) throw std::runtime_error("coxeter_element: no admissible source");
        used[pick] = true;
        w.push_back(pick);
        cur.xi[pick] -= 2;
    }
    return w;
}

inline RootVec tau_apply(const DynkinQuiver& q, const RootVec& v, long long power = 1) {
    Word tau = coxeter_element(q);
    RootVec out = v;
    if (power >= 0) {
        for (long long k = 0; k < power; ++k) out = apply_word(q.datum, tau, out);
    } else {
        Word inv(tau.rbegin(), tau.rend());
        for (long long k = 0; k < -power; ++k) out = apply_word(q.datum, inv, out);
    }
    return out;
}

// gamma_i^Q by the weighted-path formula: sum over vertices j with a path
// j -> ... -> i in Q of the product of -<h_{p_k}, alpha_{p_{k+1}}> along it.
inline RootVec gamma_by_paths(const DynkinQuiver& q, int i) {
    const CartanDatum& cd = q.datum;
    RootVec out(cd.rank, 0);
    // DFS upward along arrows into i (j -> i means xi_j = xi_i + 1)
    std::vector<std::pair<int, long long>> work{{i, 1}};
    while (!work.empty()) {
        auto [v, weight] = work.back();
        work.pop_back();
        out[v] += weight;
        for (int j = 0; j < cd.rank; ++j)
            if (cd.adjacent(j, v) && q.xi[j] == q.xi[v] + 1)
                work.emplace_back(j, weight * (-cd.cartan[j][v]));
    }
    return out;
}

// gamma_i^Q = (1 - tau_Q) omega_i computed in fundamental-weight coordinates.
inline RootVec gamma_by_weights(const DynkinQuiver& q, int i) {
    const CartanDatum& cd = q.datum;
    IntVec omega(cd.rank, 0);
    omega[i] = 1;
    Word tau = coxeter_element(q);
    IntVec tau_omega = apply_word_weight(cd, tau, omega);
    IntVec diff(cd.rank);
    for (int k = 0; k < cd.rank; ++k) diff[k] = omega[k] - tau_omega[k];
    return weight_to_root_coords(cd, diff);
}

inline RootVec gamma(const DynkinQuiver& q, int i) {
    RootVec a = gamma_by_paths(q, i);
    RootVec b = gamma_by_weights(q, i);
    if (a != b)
        throw std::runtime_error("gamma route mismatch at vertex " + std::to_string(i + 1) + " of " + q.name());
    return a;
}

// A Q-adapted reduced word for w0: repeatedly extract a source of the
// successively reflected quiver (smallest index first); validated to be
// reduced and to represent w0.
inline Word adapted_reduced_word(const DynkinQuiver& q) {
    const CartanDatum& cd = q.datum;
    const long long len = cd.positive_root_count();
    DynkinQuiver cur = q;
    Word w;
    std::vector<RootVec> act = word_action(cd, {});
    for (long long step = 0; step < len; ++step) {
        int pick = -1;
        for (int i = 0; i < cd.rank && pick < 0; ++i)
            if (is_source(cur, i) && height(act[i]) > 0) pick = i;
        if (pick < 0) throw std::runtime_error("adapted_reduced_word: stuck at " + cur.name());
        w.push_back(pick);
        cur.xi[pick] -= 2;
        std::vector<RootVec> next = act;
        for (int k = 0; k < cd.rank; ++k)
            for (int r = 0; r < cd.rank; ++r) next[k][r] -= cd.cartan[pick][k] * act[pick][r];
        act = std::move(next);
    }
    for (int i = 0; i < cd.rank; ++i)
        if (height(act[i]) > 0) throw std::runtime_error("adapted_reduced_word: word is not w0");
    return w;
}

// ---------------------------------------------------------------------------
// sigma-fixed quivers and folding of quivers (fixed-point index set).

inline bool is_sigma_fixed(const DynkinQuiver& q, const DiagramAutomorphism& s) {
    for (int i = 0; i < q.datum.rank; ++i)
        if (q.xi[s.perm[i]] != q.xi[i]) return false;
    return true;
}

// Index surjection onto the fixed-point diagram of Table "g sigma":
// sigma-fixed nodes land on long vertices, sigma-orbits on short ones, so
// that alpha_i |-> alpha_{sigma_bar(i)} extended linearly maps positive
// roots onto positive roots:
// A_{2n-1} -> C_n (i, 2n-i |-> i), D_{n+1} -> B_n (n+1 |-> n),
// E6 -> F4 (2 |-> 1; 4 |-> 2; 3,5 |-> 3; 1,6 |-> 4), D4 -> G2 (2 |-> 2; else 1).
struct QuiverFolding {
    CartanDatum target;         // non-simply-laced fixed-point datum
    std::vector<int> to_target; // surjection source index -> target index
};

inline QuiverFolding quiver_folding(const CartanDatum& cd, const DiagramAutomorphism& s) {
    validate_automorphism(cd, s);
    QuiverFolding f;
    if (cd.type == Type::A && cd.rank % 2 == 1 && s.order == 2) {
        int n = (cd.rank + 1) / 2;
        f.target = build_cartan(Type::C, n);
        f.to_target.resize(cd.rank);
        for (int i = 0; i < cd.rank; ++i) f.to_target[i] = i < n ? i : cd.rank - 1 - i;
    } else if (cd.type == Type::D && s.order == 2) {
        int n = cd.rank - 1;
        f.target = build_cartan(Type::B, n);
        f.to_target.resize(cd.rank);
        for (int i = 0; i < cd.rank; ++i) f.to_target[i] = std::min(i, n - 1);
    } else if (cd.type == Type::E && cd.rank == 6) {
        f.target = build_cartan(Type::F, 4);
        f.to_target = {3, 0, 2, 1, 2, 3};
    } else if (cd.type == Type::D && cd.rank == 4 && s.order == 3) {
        f.target = build_cartan(Type::G, 2);
        f.to_target = {0, 1, 0, 0};
    } else {
        throw std::invalid_argument("no quiver folding for " + cd.name());
    }
    // the surjection must send positive roots to positive roots
    RootSystem big(cd), small(f.target);
    for (const RootVec& v : big.positive()) {
        RootVec folded(f.target.rank, 0);
        for (int i = 0; i < cd.rank; ++i) folded[f.to_target[i]] += v[i];
        if (!small.is_positive_root(folded))
            throw std::runtime_error("quiver_folding: psi image is not a root");
    }
    return f;
}

inline DynkinQuiver fold_quiver(const DynkinQuiver& q, const DiagramAutomorphism& s) {
    if (!is_sigma_fixed(q, s)) throw std::invalid_argument("fold_quiver: quiver is not sigma-fixed");
    QuiverFolding f = quiver_folding(q.datum, s);
    std::vector<int> xi(f.target.rank, 0);
    for (int i = 0; i < q.datum.rank; ++i) xi[f.to_target[i]] = q.xi[i];
    return make_quiver(f.target, xi);
}

// Inverse of fold_quiver: lift a B/C/F4/G2 quiver to its sigma-fixed
// simply-laced partner (D_{n+1}/A_{2n-1}/E6/D4).
inline DynkinQuiver lift_quiver(const DynkinQuiver& q) {
    const CartanDatum& cd = q.datum;
    CartanDatum up;
    switch (cd.type) {
        case Type::B: up = build_cartan(Type::D, cd.rank + 1); break;
        case Type::C: up = build_cartan(Type::A, 2 * cd.rank - 1); break;
        case Type::F: up = build_cartan(Type::E, 6); break;
        case Type::G: up = build_cartan(Type::D, 4); break;
        default: throw std::invalid_argument("lift_quiver: type must be B, C, F or G");
    }
    DiagramAutomorphism s = folding_automorphism(up);
    QuiverFolding f = quiver_folding(up, s);
    if (f.target.name() != cd.name()) throw std::runtime_error("lift_quiver: mismatched fold target");
    std::vector<int> xi(up.rank);
    for (int i = 0; i < up.rank; ++i) xi[i] = q.xi[f.to_target[i]];
    DynkinQuiver lifted = make_quiver(up, std::move(xi));
    if (!is_sigma_fixed(lifted, s)) throw std::runtime_error("lift_quiver: lift is not sigma-fixed");
    return lifted;
}

// Transpose between types B_n and C_n (same Weyl group, same heights).
inline DynkinQuiver transpose(const DynkinQuiver& q) {
    const CartanDatum& cd = q.datum;
    if (cd.type == Type::B) return make_quiver(build_cartan(Type::C, cd.rank), q.xi);
    if (cd.type == Type::C) return make_quiver(build_cartan(Type::B, cd.rank), q.xi);
    throw std::invalid_argument("transpose: type must be B or C");
}

// All sigma-fixed quivers (up to a global height shift): one per orientation
// of the folded diagram; count 2^{#edges of the folded diagram}.
inline std::vector<DynkinQuiver> sigma_fixed_quivers(const CartanDatum& cd, const DiagramAutomorphism& s) {
    QuiverFolding f = quiver_folding(cd, s);
    const CartanDatum& tgt = f.target;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < tgt.rank; ++i)
        for (int j = i + 1; j < tgt.rank; ++j)
            if (tgt.adjacent(i, j)) edges.emplace_back(i, j);
    std::vector<DynkinQuiver> out;
    for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
        // assign folded heights by BFS from vertex 0 following the orientation
        std::vector<std::optional<int>> fxi(tgt.rank);
        fxi[0] = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t e = 0; e < edges.size(); ++e) {
                auto [a, b] = edges[e];
                int step = (mask >> e) & 1 ? 1 : -1; // xi_a = xi_b + step
                if (fxi[a] && !fxi[b]) { fxi[b] = *fxi[a] - step; changed = true; }
                if (fxi[b] && !fxi[a]) { fxi[a] = *fxi[b] + step; changed = true; }
            }
        }
        std::vector<int> xi(cd.rank);
        for (int i = 0; i < cd.rank; ++i) xi[i] = *fxi[f.to_target[i]];
        DynkinQuiver q = make_quiver(cd, std::move(xi));
        q.xi = normalized_heights(q);
        if (!is_sigma_fixed(q, s)) throw std::runtime_error("sigma_fixed_quivers: enumeration bug");
        out.push_back(std::move(q));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonical quivers used as defaults in tests and the CLI.

inline std::vector<int> bfs_distance_from(const CartanDatum& cd, int root) {
    std::vector<int> d(cd.rank, -1);
    d[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (int j = 0; j < cd.rank; ++j)
            if (cd.adjacent(queue[q], j) && d[j] < 0) {
                d[j] = d[queue[q]] + 1;
                queue.push_back(j);
            }
    return d;
}

// Alternating (bipartite) orientation; sigma-fixed for every diagram
// automorphism.
inline DynkinQuiver alternating_quiver(const CartanDatum& cd) {
    auto dist = bfs_distance_from(cd, 0);
    std::vector<int> xi(cd.rank);
    for (int i = 0; i < cd.rank; ++i) xi[i] = dist[i] % 2;
    return make_quiver(cd, std::move(xi));
}

// Monotone orientation: heights decrease with the distance from vertex 1.
inline DynkinQuiver linear_quiver(const CartanDatum& cd) {
    auto dist = bfs_distance_from(cd, 0);
    int mx = *std::max_element(dist.begin(), dist.end());
    std::vector<int> xi(cd.rank);
    for (int i = 0; i < cd.rank; ++i) xi[i] = mx - dist[i];
    return make_quiver(cd, std::move(xi));
}

inline DynkinQuiver star_quiver(const DynkinQuiver& q) {
    std::vector<int> xi(q.datum.rank);
    for (int i = 0; i < q.datum.rank; ++i) xi[i] = q.xi[q.datum.star[i]];
    return make_quiver(q.datum, std::move(xi));
}

} // namespace arq
