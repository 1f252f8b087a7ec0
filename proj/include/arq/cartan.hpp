#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "arq/linalg.hpp"

namespace arq {

enum class Type : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char type_char(Type t) { return static_cast<char>(t); }

inline Type type_from_char(char c) {
    switch (c) {
        case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
            return static_cast<Type>(c);
        default: throw std::invalid_argument(std::string("unknown type letter '") + c + "'");
    }
}

struct InvalidCartan : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Cartan datum of a finite type, with the index numbering of the standard
// diagram list: A/B/C chains 1..n; D chain 1..n-1 with horns n-1,n on n-2
// (i.e. the horn n attaches to n-2); E chain 1-3-4-5-6(-7)(-8) with 2 on 4;
// F4 1-2=>3-4; G2 1=>2 with the triple edge, (alpha_2,alpha_2)=6.
// Entries are c_{i,j} = <h_i, alpha_j>, all indices 0-based internally.
struct CartanDatum {
    Type type;
    int rank = 0;
    IntMat cartan;          // c_{i,j}
    std::vector<int> d;     // symmetrizers d_i = (alpha_i,alpha_i)/2
    int h = 0;              // Coxeter number
    std::vector<int> star;  // involution induced by w0
    IntMat sym;             // D*C = ((alpha_i,alpha_j))

    bool adjacent(int i, int j) const { return i != j && cartan[i][j] != 0; }

    // graph distance in the diagram
    int dist(int i, int j) const {
        if (i == j) return 0;
        std::vector<int> dd(rank, -1);
        dd[i] = 0;
        std::vector<int> queue{i};
        for (std::size_t q = 0; q < queue.size(); ++q) {
            int v = queue[q];
            for (int w = 0; w < rank; ++w)
                if (adjacent(v, w) && dd[w] < 0) {
                    dd[w] = dd[v] + 1;
                    if (w == j) return dd[w];
                    queue.push_back(w);
                }
        }
        return -1;
    }

    std::string name() const { return std::string(1, type_char(type)) + std::to_string(rank); }

    long long positive_root_count() const { return 1LL * rank * h / 2; }
};

namespace detail {

inline void add_edge(IntMat& c, int i, int j, long long cij, long long cji) {
    c[i][j] = cij;
    c[j][i] = cji;
}

inline std::vector<int> star_table(Type t, int n) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    switch (t) {
        case Type::A:
            for (int i = 0; i < n; ++i) s[i] = n - 1 - i;
            break;
        case Type::D:
            if (n % 2 == 1) std::swap(s[n - 2], s[n - 1]);
            break;
        case Type::E:
            if (n == 6) { std::swap(s[0], s[5]); std::swap(s[2], s[4]); }
            break;
        default:
            break; // B, C, D_even, E7, E8, F4, G2: identity
    }
    return s;
}

} // namespace detail

inline CartanDatum build_cartan(Type type, int rank) {
    auto chain = [](IntMat& c, int from, int to) {
        for (int i = from; i < to; ++i) detail::add_edge(c, i, i + 1, -1, -1);
    };
    CartanDatum cd;
    cd.type = type;
    cd.rank = rank;
    cd.cartan = IntMat(rank, IntVec(rank, 0));
    for (int i = 0; i < rank; ++i) cd.cartan[i][i] = 2;

    switch (type) {
        case Type::A:
            if (rank < 1) throw InvalidCartan("A requires rank >= 1");
            chain(cd.cartan, 0, rank - 1);
            cd.d.assign(rank, 1);
            cd.h = rank + 1;
            break;
        case Type::B:
            if (rank < 2) throw InvalidCartan("B requires rank >= 2");
            chain(cd.cartan, 0, rank - 2);
            detail::add_edge(cd.cartan, rank - 2, rank - 1, -1, -2);
            cd.d.assign(rank, 2);
            cd.d[rank - 1] = 1;
            cd.h = 2 * rank;
            break;
        case Type::C:
            if (rank < 2) throw InvalidCartan("C requires rank >= 2");
            chain(cd.cartan, 0, rank - 2);
            detail::add_edge(cd.cartan, rank - 2, rank - 1, -2, -1);
            cd.d.assign(rank, 1);
            cd.d[rank - 1] = 2;
            cd.h = 2 * rank;
            break;
        case Type::D:
            if (rank < 4) throw InvalidCartan("D requires rank >= 4");
            chain(cd.cartan, 0, rank - 2);
            detail::add_edge(cd.cartan, rank - 3, rank - 1, -1, -1);
            cd.d.assign(rank, 1);
            cd.h = 2 * rank - 2;
            break;
        case Type::E: {
            if (rank < 6 || rank > 8) throw InvalidCartan("E requires rank 6..8");
            // chain over nodes 1,3,4,...,rank ; node 2 hangs on node 4
            std::vector<int> row{0};
            for (int v = 2; v < rank; ++v) row.push_back(v);
            for (std::size_t i = 0; i + 1 < row.size(); ++i)
                detail::add_edge(cd.cartan, row[i], row[i + 1], -1, -1);
            detail::add_edge(cd.cartan, 1, 3, -1, -1);
            cd.d.assign(rank, 1);
            cd.h = rank == 6 ? 12 : rank == 7 ? 18 : 30;
            break;
        }
        case Type::F:
            if (rank != 4) throw InvalidCartan("F requires rank 4");
            detail::add_edge(cd.cartan, 0, 1, -1, -1);
            detail::add_edge(cd.cartan, 1, 2, -1, -2);
            detail::add_edge(cd.cartan, 2, 3, -1, -1);
            cd.d = {2, 2, 1, 1};
            cd.h = 12;
            break;
        case Type::G:
            if (rank != 2) throw InvalidCartan("G requires rank 2");
            detail::add_edge(cd.cartan, 0, 1, -3, -1);
            cd.d = {1, 3};
            cd.h = 6;
            break;
    }

    cd.star = detail::star_table(type, rank);
    cd.sym = IntMat(rank, IntVec(rank, 0));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) cd.sym[i][j] = cd.d[i] * cd.cartan[i][j];
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (cd.sym[i][j] != cd.sym[j][i]) throw InvalidCartan("D*C not symmetric");
    return cd;
}

inline CartanDatum build_cartan(char type, int rank) { return build_cartan(type_from_char(type), rank); }

// adjacency matrix of the diagram, 2*Id - C
inline IntMat adjacency(const CartanDatum& cd) {
    IntMat a(cd.rank, IntVec(cd.rank, 0));
    for (int i = 0; i < cd.rank; ++i)
        for (int j = 0; j < cd.rank; ++j) a[i][j] = 2 * (i == j) - cd.cartan[i][j];
    return a;
}

// Diagram automorphism sigma with <h_i,a_j> = <h_{s(i)},a_{s(j)}> and
// d(i, sigma(i)) != 1 for all i.
struct DiagramAutomorphism {
    std::vector<int> perm;
    int order = 1;

    int operator()(int i) const { return perm[i]; }
};

inline DiagramAutomorphism identity_automorphism(const CartanDatum& cd) {
    DiagramAutomorphism s;
    s.perm.resize(cd.rank);
    std::iota(s.perm.begin(), s.perm.end(), 0);
    s.order = 1;
    return s;
}

inline void validate_automorphism(const CartanDatum& cd, const DiagramAutomorphism& s) {
    if (static_cast<int>(s.perm.size()) != cd.rank)
        throw std::invalid_argument("automorphism size mismatch");
    for (int i = 0; i < cd.rank; ++i)
        for (int j = 0; j < cd.rank; ++j)
            if (cd.cartan[i][j] != cd.cartan[s.perm[i]][s.perm[j]])
                throw std::invalid_argument("not a diagram automorphism");
    for (int i = 0; i < cd.rank; ++i)
        if (s.perm[i] != i && cd.dist(i, s.perm[i]) == 1)
            throw std::invalid_argument("automorphism violates the adjacency condition");
}

// The order-2 automorphism of A_{2n-1}, D_n, E6 (written "vee" in the text).
inline DiagramAutomorphism vee_automorphism(const CartanDatum& cd) {
    DiagramAutomorphism s = identity_automorphism(cd);
    switch (cd.type) {
        case Type::A:
            if (cd.rank % 2 == 0 || cd.rank < 3)
                throw std::invalid_argument("vee on type A needs odd rank >= 3");
            for (int i = 0; i < cd.rank; ++i) s.perm[i] = cd.rank - 1 - i;
            break;
        case Type::D:
            std::swap(s.perm[cd.rank - 2], s.perm[cd.rank - 1]);
            break;
        case Type::E:
            if (cd.rank != 6) throw std::invalid_argument("vee needs E6");
            std::swap(s.perm[0], s.perm[5]);
            std::swap(s.perm[2], s.perm[4]);
            break;
        default:
            throw std::invalid_argument("vee automorphism undefined for " + cd.name());
    }
    s.order = 2;
    validate_automorphism(cd, s);
    return s;
}

// The order-3 rotation of D4 (written "tilde vee").
inline DiagramAutomorphism tilde_vee_automorphism(const CartanDatum& cd) {
    if (cd.type != Type::D || cd.rank != 4)
        throw std::invalid_argument("tilde-vee automorphism needs D4");
    DiagramAutomorphism s = identity_automorphism(cd);
    s.perm[0] = 2; s.perm[2] = 3; s.perm[3] = 0; // 1 -> 3 -> 4 -> 1, fixes 2
    s.order = 3;
    validate_automorphism(cd, s);
    return s;
}

// Canonical nontrivial automorphism used for the four folding pairs.
inline DiagramAutomorphism folding_automorphism(const CartanDatum& cd) {
    if (cd.type == Type::D && cd.rank == 4) return tilde_vee_automorphism(cd);
    return vee_automorphism(cd);
}

namespace detail {

inline Type detect_type(const IntMat& c, const std::vector<int>& d) {
    const int n = static_cast<int>(c.size());
    int triple = 0, dbl = 0, branch_node = -1;
    for (int i = 0; i < n; ++i) {
        int deg = 0;
        for (int j = 0; j < n; ++j)
            if (i != j && c[i][j] != 0) {
                ++deg;
                if (c[i][j] * c[j][i] == 2) ++dbl;
                if (c[i][j] * c[j][i] == 3) ++triple;
            }
        if (deg >= 3) branch_node = i;
    }
    dbl /= 2; triple /= 2;
    if (triple) return Type::G;
    if (dbl) {
        if (n == 4 && std::count(d.begin(), d.end(), 2) == 2) return Type::F;
        return std::count(d.begin(), d.end(), 2) > n / 2 ? Type::B : Type::C;
    }
    if (branch_node >= 0) {
        // arm lengths from the branch node: D has two arms of length 1
        int short_arms = 0;
        for (int j = 0; j < n; ++j) {
            if (j == branch_node || c[branch_node][j] == 0) continue;
            int deg = 0;
            for (int k = 0; k < n; ++k) deg += (k != j && c[j][k] != 0);
            if (deg == 1) ++short_arms;
        }
        return short_arms >= 2 ? Type::D : Type::E;
    }
    return Type::A;
}

} // namespace detail

struct FoldResult {
    CartanDatum folded;
    std::vector<int> projection; // pi : I -> folded index set
};

// Orbit folding of a simply-laced datum by sigma: vertices are sigma-orbits,
// c_{pi(i),pi(j)} = sum over the orbit of j, d_{pi(i)} = orbit size.
// Sends A_{2n-1} -> B_n, D_{n+1} -> C_n, E6 -> F4, (D4, order 3) -> G2.
inline FoldResult fold(const CartanDatum& cd, const DiagramAutomorphism& s) {
    validate_automorphism(cd, s);
    std::vector<int> orbit_of(cd.rank, -1);
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < cd.rank; ++i) {
        if (orbit_of[i] >= 0) continue;
        std::vector<int> orb;
        int v = i;
        do {
            orbit_of[v] = static_cast<int>(orbits.size());
            orb.push_back(v);
            v = s.perm[v];
        } while (v != i);
        orbits.push_back(orb);
    }
    const int m = static_cast<int>(orbits.size());
    IntMat c(m, IntVec(m, 0));
    std::vector<int> d(m);
    for (int a = 0; a < m; ++a) {
        d[a] = static_cast<int>(orbits[a].size());
        for (int b = 0; b < m; ++b) {
            long long sum = 0;
            for (int j : orbits[b]) sum += cd.cartan[orbits[a][0]][j];
            c[a][b] = sum;
        }
    }

    // Renumber orbits so the folded datum carries the standard numbering of
    // its type; permutation search is fine at rank <= 8.
    auto match = [&](const CartanDatum& ref) -> std::vector<int> {
        std::vector<int> cand(m);
        std::iota(cand.begin(), cand.end(), 0);
        do {
            bool ok = true;
            for (int i = 0; i < m && ok; ++i) {
                ok = ref.d[cand[i]] == d[i];
                for (int j = 0; j < m && ok; ++j)
                    ok = ref.cartan[cand[i]][cand[j]] == c[i][j];
            }
            if (ok) return cand;
        } while (std::next_permutation(cand.begin(), cand.end()));
        return {};
    };

    std::vector<Type> candidates{detail::detect_type(c, d)};
    if (candidates[0] == Type::B) candidates.push_back(Type::C);
    else if (candidates[0] == Type::C) candidates.push_back(Type::B);
    for (Type t : candidates) {
        CartanDatum ref = build_cartan(t, m);
        std::vector<int> relabel = match(ref);
        if (relabel.empty()) continue;
        FoldResult r{std::move(ref), std::vector<int>(cd.rank)};
        for (int i = 0; i < cd.rank; ++i) r.projection[i] = relabel[orbit_of[i]];
        return r;
    }
    throw std::runtime_error("fold: folded matrix does not match a standard datum");
}

} // namespace arq
