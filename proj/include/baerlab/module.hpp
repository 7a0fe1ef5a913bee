#pragma once

// Finite right modules over a FiniteRing, given by addition and scalar-action
// tables, plus the submodule machinery (closure, enumeration, essentiality).

#include <memory>
#include <vector>

#include "baerlab/ideals.hpp"
#include "baerlab/ring.hpp"

namespace baerlab {

inline constexpr int kDefaultOrderCap = 4096;
inline constexpr int kDefaultSubmoduleCap = 1 << 14;

class FiniteModule {
public:
    RingPtr ring;
    int order = 0;
    std::vector<int> add_tab;  // order*order
    std::vector<int> act_tab;  // order*|R|
    int zero = 0;
    std::vector<int> neg;
    json provenance;

    int add(int m, int n) const { return add_tab[m * order + n]; }
    int act(int m, int r) const { return act_tab[m * ring->order + r]; }
    int sub(int m, int n) const { return add(m, neg[n]); }

    IndexSet universe() const {
        IndexSet v(order);
        for (int i = 0; i < order; ++i) v[i] = i;
        return v;
    }

    /// mR = {m r : r in R}; already closed under addition.
    IndexSet cyclic(int m) const {
        std::vector<int> v(ring->order);
        for (int r = 0; r < ring->order; ++r) v[r] = act(m, r);
        return make_set(std::move(v));
    }

    void derive_neg() {
        neg.assign(order, -1);
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                if (add(a, b) == zero) neg[a] = b;
    }

    void audit() const {
        const FiniteRing& R = *ring;
        if (order <= 0 || (int)add_tab.size() != order * order || (int)act_tab.size() != order * R.order)
            throw InvalidSpec("module tables have wrong shape");
        for (int m = 0; m < order; ++m) {
            if (add(m, zero) != m) throw InvalidSpec("module zero fails");
            if (act(m, R.one) != m) throw InvalidSpec("unital action fails");
        }
        for (int m = 0; m < order; ++m) {
            bool inv = false;
            for (int n = 0; n < order; ++n) {
                if (add(m, n) != add(n, m)) throw InvalidSpec("module addition not commutative");
                if (add(m, n) == zero) inv = true;
            }
            if (!inv) throw InvalidSpec("module element without inverse");
        }
        for (int m = 0; m < order; ++m)
            for (int n = 0; n < order; ++n)
                for (int p = 0; p < order; ++p)
                    if (add(add(m, n), p) != add(m, add(n, p))) throw InvalidSpec("module addition not associative");
        for (int m = 0; m < order; ++m)
            for (int r = 0; r < R.order; ++r) {
                for (int s = 0; s < R.order; ++s) {
                    if (act(act(m, r), s) != act(m, R.mul(r, s))) throw InvalidSpec("action not associative");
                    if (act(m, R.add(r, s)) != add(act(m, r), act(m, s))) throw InvalidSpec("action not additive in scalars");
                }
                for (int n = 0; n < order; ++n)
                    if (act(add(m, n), r) != add(act(m, r), act(n, r))) throw InvalidSpec("action not additive in module");
            }
    }
};

using ModulePtr = std::shared_ptr<const FiniteModule>;

struct Submodule {
    const FiniteModule* parent = nullptr;
    IndexSet members;
    bool operator==(const Submodule& o) const { return members == o.members; }
};

inline bool is_submodule_set(const FiniteModule& M, const IndexSet& s) {
    if (!set_contains(s, M.zero)) return false;
    for (int m : s) {
        for (int n : s)
            if (!set_contains(s, M.add(m, n))) return false;
        for (int r = 0; r < M.ring->order; ++r)
            if (!set_contains(s, M.act(m, r))) return false;
    }
    return true;
}

inline Submodule verified_submodule(const FiniteModule& M, IndexSet s) {
    if (!is_submodule_set(M, s)) throw NotSubmodule("set is not a submodule");
    return Submodule{&M, std::move(s)};
}

/// Smallest submodule containing `seed`.
inline IndexSet submodule_closure(const FiniteModule& M, IndexSet seed) {
    seed.push_back(M.zero);
    return close_under(
        make_set(std::move(seed)), {[&M](int a, int b) { return M.add(a, b); }},
        {[&M](int m) {
            std::vector<int> out(M.ring->order);
            for (int r = 0; r < M.ring->order; ++r) out[r] = M.act(m, r);
            return out;
        }});
}

/// All submodules: join-closure of the cyclic submodules.
inline std::vector<IndexSet> all_submodules(const FiniteModule& M, int cap = kDefaultSubmoduleCap) {
    std::vector<IndexSet> seeds{IndexSet{M.zero}};
    for (int m = 0; m < M.order; ++m) seeds.push_back(M.cyclic(m));
    std::set<IndexSet> have(seeds.begin(), seeds.end());
    std::vector<IndexSet> frontier(have.begin(), have.end());
    while (!frontier.empty()) {
        std::vector<IndexSet> next;
        for (const auto& a : frontier) {
            for (const auto& b : have) {
                IndexSet c = submodule_closure(M, set_union(a, b));
                if (have.insert(c).second) {
                    if ((int)have.size() > cap) throw CapExceeded("submodule lattice exceeds cap");
                    next.push_back(std::move(c));
                }
            }
        }
        frontier = std::move(next);
    }
    return {have.begin(), have.end()};
}

/// r_R(S) over a module subset S.
inline RightIdeal right_annihilator(const FiniteModule& M, const IndexSet& S) {
    if (S.empty()) throw EmptySubset("right annihilator of an empty subset");
    const FiniteRing& R = *M.ring;
    IndexSet out;
    for (int a = 0; a < R.order; ++a) {
        bool kills = true;
        for (int s : S)
            if (M.act(s, a) != M.zero) { kills = false; break; }
        if (kills) out.push_back(a);
    }
    return RightIdeal{&R, std::move(out)};
}

inline RightIdeal annihilator_of_element(const FiniteModule& M, int m) {
    return right_annihilator(M, IndexSet{m});
}

/// N essential in D (both submodule sets of M, N <= D): N meets every
/// nonzero cyclic xR with x in D. Cyclic reduction is enough because every
/// nonzero submodule contains a nonzero cyclic.
inline bool essential_in(const FiniteModule& M, const IndexSet& N, const IndexSet& D) {
    std::vector<char> in(M.order, 0);
    for (int x : N) in[x] = 1;
    for (int x : D) {
        if (x == M.zero) continue;
        bool meets = false;
        for (int r = 0; r < M.ring->order && !meets; ++r) {
            int xr = M.act(x, r);
            if (xr != M.zero && in[xr]) meets = true;
        }
        if (!meets) return false;
    }
    return true;
}

inline bool essential_in(const FiniteModule& M, const IndexSet& N) {
    return essential_in(M, N, M.universe());
}

/// Greedy relative complement: maximal K inside `bound` with N ∩ K = 0,
/// scanned in canonical element order.
inline IndexSet relative_complement(const FiniteModule& M, const IndexSet& N, const IndexSet& bound) {
    if (!is_submodule_set(M, N) || !is_submodule_set(M, bound)) throw NotSubmodule("complement arguments");
    IndexSet K{M.zero};
    const IndexSet zero_only{M.zero};
    for (int x : bound) {
        if (set_contains(K, x)) continue;
        IndexSet cand = submodule_closure(M, set_union(K, IndexSet{x}));
        if (set_intersect(cand, N) == zero_only && set_subset(cand, bound)) K = std::move(cand);
    }
    return K;
}

// ---------------------------------------------------------------------------
// Builders. Element indexing is lexicographic in the construction.
// ---------------------------------------------------------------------------

inline FiniteModule regular_module(RingPtr R) {
    FiniteModule M;
    M.ring = R;
    M.order = R->order;
    M.add_tab = R->add_tab;
    M.act_tab = R->mul_tab;
    M.zero = R->zero;
    M.provenance = json{{"kind", "regular"}};
    M.derive_neg();
    return M;
}

/// Reindexes a submodule set of M as a standalone module. Index i of the
/// result is the i-th member in ascending parent order.
inline FiniteModule submodule_module(const FiniteModule& M, const IndexSet& members, json provenance) {
    if (!is_submodule_set(M, members)) throw NotSubmodule("submodule_module");
    const int n = (int)members.size();
    std::vector<int> pos(M.order, -1);
    for (int i = 0; i < n; ++i) pos[members[i]] = i;
    FiniteModule S;
    S.ring = M.ring;
    S.order = n;
    S.add_tab.resize(n * n);
    S.act_tab.resize(n * M.ring->order);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) S.add_tab[i * n + j] = pos[M.add(members[i], members[j])];
        for (int r = 0; r < M.ring->order; ++r) S.act_tab[i * M.ring->order + r] = pos[M.act(members[i], r)];
    }
    S.zero = pos[M.zero];
    S.provenance = std::move(provenance);
    S.derive_neg();
    return S;
}

inline FiniteModule idempotent_piece(RingPtr R, int e) {
    if (!R->is_idempotent(e)) throw NotIdempotent("idempotent_piece: e*e != e");
    FiniteModule reg = regular_module(R);
    return submodule_module(reg, R->principal_right(e), json{{"kind", "idempotent_piece"}, {"e", e}});
}

inline FiniteModule cyclic_module(const FiniteModule& M, int m) {
    return submodule_module(M, M.cyclic(m), json{{"kind", "cyclic"}, {"m", m}, {"of", M.provenance}});
}

inline FiniteModule submodule_generated(const FiniteModule& M, const IndexSet& gens) {
    IndexSet s = submodule_closure(M, gens);
    return submodule_module(M, s, json{{"kind", "submodule_generated"}, {"gens", gens}, {"of", M.provenance}});
}

/// M/K with coset representatives = least element of each coset; elements
/// listed ascending by representative.
inline FiniteModule quotient_module(const FiniteModule& M, const IndexSet& K) {
    if (!is_submodule_set(M, K)) throw NotSubmodule("quotient by a non-submodule");
    std::vector<int> rep(M.order, -1);
    for (int m = 0; m < M.order; ++m) {
        if (rep[m] >= 0) continue;
        int least = m;
        std::vector<int> coset;
        for (int k : K) coset.push_back(M.add(m, k));
        for (int x : coset) least = std::min(least, x);
        for (int x : coset) rep[x] = least;
    }
    IndexSet reps;
    for (int m = 0; m < M.order; ++m)
        if (rep[m] == m) reps.push_back(m);
    const int n = (int)reps.size();
    std::vector<int> pos(M.order, -1);
    for (int i = 0; i < n; ++i) pos[reps[i]] = i;
    FiniteModule Q;
    Q.ring = M.ring;
    Q.order = n;
    Q.add_tab.resize(n * n);
    Q.act_tab.resize(n * M.ring->order);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) Q.add_tab[i * n + j] = pos[rep[M.add(reps[i], reps[j])]];
        for (int r = 0; r < M.ring->order; ++r) Q.act_tab[i * M.ring->order + r] = pos[rep[M.act(reps[i], r)]];
    }
    Q.zero = pos[rep[M.zero]];
    Q.provenance = json{{"kind", "quotient"}, {"sub", K}, {"of", M.provenance}};
    Q.derive_neg();
    return Q;
}

inline FiniteModule direct_sum(const std::vector<FiniteModule>& parts, int cap = kDefaultOrderCap) {
    if (parts.empty()) throw InvalidSpec("direct sum of no parts");
    RingPtr R = parts.front().ring;
    for (const auto& p : parts)
        if (p.ring->order != R->order || p.ring->add_tab != R->add_tab || p.ring->mul_tab != R->mul_tab)
            throw InvalidSpec("direct sum over mismatched rings");
    long long total = 1;
    for (const auto& p : parts) {
        total *= p.order;
        if (total > cap) throw CapExceeded("direct sum order exceeds cap");
    }
    const int n = (int)total;
    auto digits = [&](int idx) {
        std::vector<int> d(parts.size());
        for (int i = (int)parts.size() - 1; i >= 0; --i) {
            d[i] = idx % parts[i].order;
            idx /= parts[i].order;
        }
        return d;
    };
    auto index = [&](const std::vector<int>& d) {
        int idx = 0;
        for (size_t i = 0; i < parts.size(); ++i) idx = idx * parts[i].order + d[i];
        return idx;
    };
    FiniteModule M;
    M.ring = R;
    M.order = n;
    M.add_tab.resize((size_t)n * n);
    M.act_tab.resize((size_t)n * R->order);
    for (int a = 0; a < n; ++a) {
        auto da = digits(a);
        for (int b = 0; b < n; ++b) {
            auto db = digits(b);
            std::vector<int> dc(parts.size());
            for (size_t i = 0; i < parts.size(); ++i) dc[i] = parts[i].add(da[i], db[i]);
            M.add_tab[(size_t)a * n + b] = index(dc);
        }
        for (int r = 0; r < R->order; ++r) {
            std::vector<int> dc(parts.size());
            for (size_t i = 0; i < parts.size(); ++i) dc[i] = parts[i].act(da[i], r);
            M.act_tab[(size_t)a * R->order + r] = index(dc);
        }
    }
    std::vector<int> dz(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) dz[i] = parts[i].zero;
    M.zero = index(dz);
    json prov = json::array();
    for (const auto& p : parts) prov.push_back(p.provenance);
    M.provenance = json{{"kind", "direct_sum"}, {"parts", prov}};
    M.derive_neg();
    return M;
}

inline FiniteModule module_from_tables(RingPtr R, std::vector<int> add_tab, std::vector<int> act_tab,
                                       json provenance) {
    int n = 0;
    while (n * n < (int)add_tab.size()) ++n;
    if (n * n != (int)add_tab.size()) throw InvalidSpec("module add table not square");
    if ((int)act_tab.size() != n * R->order) throw InvalidSpec("module action table has wrong shape");
    FiniteModule M;
    M.ring = std::move(R);
    M.order = n;
    M.add_tab = std::move(add_tab);
    M.act_tab = std::move(act_tab);
    M.zero = -1;
    for (int z = 0; z < n; ++z) {
        bool ok = true;
        for (int m = 0; m < n && ok; ++m) ok = M.add(m, z) == m;
        if (ok) { M.zero = z; break; }
    }
    if (M.zero < 0) throw InvalidSpec("module has no zero");
    M.provenance = std::move(provenance);
    M.audit();
    M.derive_neg();
    return M;
}

inline FiniteModule zero_module(RingPtr R) {
    FiniteModule M;
    M.order = 1;
    M.add_tab = {0};
    M.act_tab.assign(R->order, 0);
    M.ring = std::move(R);
    M.zero = 0;
    M.provenance = json{{"kind", "zero"}};
    M.derive_neg();
    return M;
}

}  // namespace baerlab
